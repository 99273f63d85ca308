#include "qgauss/grid.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <system_error>

namespace qgauss {

void GridSeries::validate() const {
    if (axis_names.empty() || axis_names.size() > 2 || axis_names.size() != axes.size()) {
        throw domain_error("GridSeries: expects one or two named axes");
    }
    std::size_t expected = 1;
    for (const auto& axis : axes) {
        if (axis.empty()) throw domain_error("GridSeries: empty axis");
        for (double v : axis) {
            if (!std::isfinite(v)) throw domain_error("GridSeries: non-finite axis coordinate");
        }
        expected *= axis.size();
    }
    if (values.size() != expected) {
        throw domain_error("GridSeries: value count does not match the axis grid");
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw domain_error("GridSeries: non-finite value");
    }
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_double(double v, int significant_digits) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general,
                             significant_digits);
    return std::string(buf, res.ptr);
}

std::string to_csv(const GridSeries& grid) {
    grid.validate();
    std::string out;
    for (const auto& name : grid.axis_names) {
        out += name;
        out += ',';
    }
    out += "value\n";
    if (grid.axes.size() == 1) {
        for (std::size_t i = 0; i < grid.axes[0].size(); ++i) {
            out += format_double(grid.axes[0][i]);
            out += ',';
            out += format_double(grid.values[i]);
            out += '\n';
        }
    } else {
        const auto& outer = grid.axes[0];
        const auto& inner = grid.axes[1];
        std::size_t k = 0;
        for (double o : outer) {
            const std::string o_str = format_double(o);
            for (double in : inner) {
                out += o_str;
                out += ',';
                out += format_double(in);
                out += ',';
                out += format_double(grid.values[k++]);
                out += '\n';
            }
        }
    }
    return out;
}

namespace {

double parse_field(std::string_view field) {
    double v = 0.0;
    auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw domain_error("parse_csv: malformed numeric field '" + std::string(field) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

} // namespace

GridSeries parse_csv(const std::string& text) {
    GridSeries grid;
    std::size_t pos = 0;
    bool header = true;
    std::vector<std::vector<double>> coords;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        const std::string_view line(text.data() + pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (header) {
            if (fields.size() < 2 || fields.back() != "value") {
                throw domain_error("parse_csv: header must list axes then 'value'");
            }
            for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
                grid.axis_names.emplace_back(fields[i]);
            }
            coords.resize(grid.axis_names.size());
            header = false;
            continue;
        }
        if (fields.size() != grid.axis_names.size() + 1) {
            throw domain_error("parse_csv: row width does not match header");
        }
        for (std::size_t i = 0; i < coords.size(); ++i) {
            const double v = parse_field(fields[i]);
            auto& axis = coords[i];
            if (axis.empty() || axis.back() != v) {
                // new coordinate only when it is not a repeat of the previous
                bool seen = false;
                for (double existing : axis) {
                    if (existing == v) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) axis.push_back(v);
            }
        }
        grid.values.push_back(parse_field(fields.back()));
    }
    grid.axes = std::move(coords);
    grid.validate();
    return grid;
}

} // namespace qgauss
