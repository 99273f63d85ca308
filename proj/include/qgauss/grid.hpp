#pragma once

#include <string>
#include <vector>

#include "qgauss/errors.hpp"

namespace qgauss {

/// A gridded table of values over one or two named coordinate axes, stored
/// row-major with the first axis outermost. Backs the CLI figure output.
struct GridSeries {
    std::vector<std::string> axis_names;       // one or two entries
    std::vector<std::vector<double>> axes;     // coordinate lists, same count
    std::vector<double> values;                // size = product of axis sizes

    void validate() const; // throws domain_error on shape/finiteness violations
};

/// Shortest decimal string that round-trips to exactly the same double.
std::string format_double(double v);

/// Fixed significant-digit formatting (general format), e.g. for printed
/// evaluation results.
std::string format_double(double v, int significant_digits);

/// CSV serialization: header row of axis names plus "value", LF line
/// endings, shortest round-trip decimals.
std::string to_csv(const GridSeries& grid);

/// Inverse of to_csv for regression tests; exact value round-trip.
GridSeries parse_csv(const std::string& text);

} // namespace qgauss
