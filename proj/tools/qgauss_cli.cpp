// Command-line front end: point evaluation, the verification suite, figure
// grids as CSV, and inverse-CDF sampling.
//
// Exit codes: 0 ok, 1 property failure, 2 domain error, 3 truncation
// failure, 4 I/O error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgauss/checks.hpp"
#include "qgauss/gaussq.hpp"
#include "qgauss/grid.hpp"
#include "qgauss/matchcomb.hpp"
#include "qgauss/qexp.hpp"

namespace {

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

qgauss::QParam parse_q(double q) {
    if (!(q >= 0.0 && q < qgauss::GaussQ::max_supported_q)) {
        throw qgauss::domain_error("q must lie in [0, 1 - 1e-5): unsupported range");
    }
    return qgauss::QParam(q);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
    return v;
}

struct EvalConfig {
    std::string target;
    double q = 0.0;
    double x = 0.0;
};

int run_eval(const EvalConfig& cfg, const qgauss::TruncationPolicy& policy) {
    const qgauss::QParam q = parse_q(cfg.q);
    double value = 0.0;
    int terms = 0;
    if (cfg.target == "eq") {
        const auto r = qgauss::e_q(q, cfg.x, policy);
        value = r.value;
        terms = r.terms_used;
    } else if (cfg.target == "Eq") {
        const auto r = qgauss::E_q(q, cfg.x, policy);
        value = r.value;
        terms = r.terms_used;
    } else if (cfg.target == "kernel") {
        const auto r = qgauss::gauss_kernel_report(q, cfg.x, policy);
        value = r.value;
        terms = r.terms_used;
    } else if (cfg.target == "density") {
        const qgauss::GaussQ g(q, policy);
        value = g.density(cfg.x);
        terms = std::fabs(cfg.x) <= g.nu()
                    ? qgauss::detail::gauss_kernel_product(q, cfg.x).terms_used
                    : 0;
    } else { // cdf
        const qgauss::GaussQ g(q, policy);
        value = g.cdf(cfg.x);
        if (std::fabs(cfg.x) <= g.nu()) {
            const double prefactor = (1.0 - q.value()) / g.c();
            terms = qgauss::detail::cdf_odd_series(q, cfg.x, 0.5 * policy.abs_tol / prefactor,
                                                   policy.max_terms)
                        .terms_used;
        }
    }
    std::cout << qgauss::format_double(value, 15) << "\n";
    std::cerr << "terms_used=" << terms << "\n";
    return 0;
}

struct MomentsConfig {
    double q = 0.0;
    int n_max = 0;
};

int run_moments(const MomentsConfig& cfg, const qgauss::TruncationPolicy& policy) {
    if (cfg.n_max < 0 || cfg.n_max > 12) {
        throw qgauss::domain_error("moments: n_max must lie in [0, 12]");
    }
    const qgauss::QParam q = parse_q(cfg.q);
    const qgauss::GaussQ g(q, policy);
    std::string out = "n,integral_moment,double_factorial,matching_count,max_discrepancy\n";
    for (int n = 0; n <= cfg.n_max; ++n) {
        const double mi = g.moment(n);
        const double df = n % 2 == 1 ? 0.0 : qgauss::q_double_factorial(q, n / 2);
        double disc = std::fabs(mi - df);
        out += qgauss::format_double(n) + ',' + qgauss::format_double(mi) + ',' +
               qgauss::format_double(df) + ',';
        if (n <= 10) {
            const double mc = qgauss::weighted_count(n).evaluate(q.value());
            disc = std::max({disc, std::fabs(mi - mc), std::fabs(df - mc)});
            out += qgauss::format_double(mc);
        }
        out += ',' + qgauss::format_double(disc) + '\n';
    }
    std::cout << out;
    return 0;
}

int run_check(const std::vector<double>& q_list, const qgauss::TruncationPolicy& policy) {
    struct Labeled {
        std::string label;
        qgauss::CheckResult result;
    };
    std::vector<Labeled> rows;
    for (auto& r : qgauss::run_global_checks(policy)) rows.push_back({"-", std::move(r)});
    for (double qv : q_list) {
        const qgauss::QParam q = parse_q(qv);
        const std::string label = "q=" + qgauss::format_double(qv);
        for (auto& r : qgauss::run_property_checks(q, policy)) {
            rows.push_back({label, std::move(r)});
        }
    }
    bool all_pass = true;
    for (const auto& row : rows) {
        all_pass = all_pass && row.result.pass;
        std::printf("%s %-38s %-10s max_err=%-12.3e threshold=%.1e\n",
                    row.result.pass ? "PASS" : "FAIL", row.result.name.c_str(),
                    row.label.c_str(), row.result.max_error, row.result.threshold);
    }
    std::printf("%s: %zu properties checked\n", all_pass ? "OK" : "FAILURES", rows.size());
    return all_pass ? 0 : 1;
}

struct FigureConfig {
    int id = 0;
    int resolution = 128;
    std::string output;
};

int run_figure(const FigureConfig& cfg, const qgauss::TruncationPolicy& policy) {
    if (cfg.resolution < 8 || cfg.resolution > 2048) {
        throw qgauss::domain_error("figure: resolution must lie in [8, 2048]");
    }
    const int r = cfg.resolution;
    qgauss::GridSeries grid;
    const std::vector<double> q_axis = linspace(0.0, 0.99, r);
    switch (cfg.id) {
        case 1: {
            // x kept inside the e_q convergence disk of every plotted q (the
            // tightest is |x| < 1 at q = 0)
            grid.axis_names = {"q", "x"};
            grid.axes = {q_axis, linspace(-0.95, 0.95, r)};
            for (double qv : q_axis) {
                const qgauss::QParam q(qv);
                for (double x : grid.axes[1]) {
                    grid.values.push_back(qgauss::e_q(q, x, policy).value);
                }
            }
            break;
        }
        case 2: {
            grid.axis_names = {"q", "x"};
            grid.axes = {q_axis, linspace(-2.0, 2.0, r)};
            for (double qv : q_axis) {
                const qgauss::QParam q(qv);
                for (double x : grid.axes[1]) {
                    grid.values.push_back(qgauss::E_q(q, x, policy).value);
                }
            }
            break;
        }
        case 3: {
            grid.axis_names = {"q"};
            grid.axes = {q_axis};
            for (double qv : q_axis) {
                grid.values.push_back(qgauss::c_q_series(qgauss::QParam(qv), policy));
            }
            break;
        }
        case 4: {
            grid.axis_names = {"q", "x"};
            grid.axes = {q_axis, linspace(-3.0, 3.0, r)};
            for (double qv : q_axis) {
                const qgauss::GaussQ g(qgauss::QParam(qv), policy);
                for (double x : grid.axes[1]) {
                    grid.values.push_back(g.density(x));
                }
            }
            break;
        }
        case 5: {
            grid.axis_names = {"q", "x"};
            grid.axes = {q_axis, linspace(-1.0, 1.0, r)};
            for (double qv : q_axis) {
                const qgauss::GaussQ g(qgauss::QParam(qv), policy);
                for (double x : grid.axes[1]) {
                    grid.values.push_back(g.cdf(x));
                }
            }
            break;
        }
        default:
            throw qgauss::domain_error("figure: id must be one of 1..5");
    }
    const std::string path = cfg.output.empty()
                                 ? "figure" + std::to_string(cfg.id) + ".csv"
                                 : cfg.output;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("figure: cannot open '" + path + "' for writing");
    out << qgauss::to_csv(grid);
    out.flush();
    if (!out) throw io_error("figure: write to '" + path + "' failed");
    return 0;
}

struct SampleConfig {
    double q = 0.0;
    long count = 0;
    std::uint64_t seed = 12345;
};

int run_sample(const SampleConfig& cfg, const qgauss::TruncationPolicy& policy) {
    if (cfg.count < 0) throw qgauss::domain_error("sample: count must be nonnegative");
    const qgauss::GaussQ g(parse_q(cfg.q), policy);
    std::mt19937_64 rng(cfg.seed);
    std::string out;
    for (long i = 0; i < cfg.count; ++i) {
        // 53-bit uniform shifted to the open interval (0, 1)
        const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        out += qgauss::format_double(g.inverse_cdf(u));
        out += '\n';
        if (out.size() > (1u << 20)) {
            std::cout << out;
            out.clear();
        }
    }
    std::cout << out;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian q-distribution toolkit: q-exponentials, Jackson "
                 "integration, densities, moments, and matching combinatorics"};
    app.require_subcommand(1);

    qgauss::TruncationPolicy policy;
    app.add_option("--tol", policy.abs_tol, "series tail tolerance")
        ->capture_default_str();
    app.add_option("--max-terms", policy.max_terms, "series term cap")
        ->capture_default_str();

    EvalConfig eval_cfg;
    auto* eval = app.add_subcommand("eval", "evaluate one function at a point");
    eval->add_option("target", eval_cfg.target, "one of: eq, Eq, kernel, density, cdf")
        ->required()
        ->check(CLI::IsMember({"eq", "Eq", "kernel", "density", "cdf"}));
    eval->add_option("--q", eval_cfg.q, "deformation parameter")->required();
    eval->add_option("--x", eval_cfg.x, "evaluation point")->required();

    MomentsConfig mom_cfg;
    auto* moments = app.add_subcommand("moments", "moment table: integral vs "
                                                  "double factorial vs matchings");
    moments->add_option("--q", mom_cfg.q, "deformation parameter")->required();
    moments->add_option("--n-max", mom_cfg.n_max, "highest moment order (<= 12)")->required();

    std::vector<double> check_q;
    auto* check = app.add_subcommand("check", "run the property-verification suite");
    check->add_option("--q", check_q, "q values to verify at (repeatable)")->required();

    FigureConfig fig_cfg;
    auto* figure = app.add_subcommand("figure", "emit a CSV grid for one of the plots");
    figure->add_option("--id", fig_cfg.id, "1: e_q, 2: E_q, 3: c(q), 4: density, 5: CDF")
        ->required()
        ->check(CLI::Range(1, 5));
    figure->add_option("--resolution", fig_cfg.resolution, "points per axis in [8, 2048]")
        ->capture_default_str();
    figure->add_option("--output", fig_cfg.output, "output path (default figure<id>.csv)");

    SampleConfig sample_cfg;
    auto* sample = app.add_subcommand("sample", "inverse-CDF samples from a seeded "
                                                "uniform stream, one per line");
    sample->add_option("--q", sample_cfg.q, "deformation parameter")->required();
    sample->add_option("--count", sample_cfg.count, "number of samples")->required();
    sample->add_option("--seed", sample_cfg.seed, "PRNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
        policy.validate();
        if (eval->parsed()) return run_eval(eval_cfg, policy);
        if (moments->parsed()) return run_moments(mom_cfg, policy);
        if (check->parsed()) return run_check(check_q, policy);
        if (figure->parsed()) return run_figure(fig_cfg, policy);
        if (sample->parsed()) return run_sample(sample_cfg, policy);
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const qgauss::truncation_error& e) {
        std::cerr << "truncation failure: " << e.what() << "\n";
        return 3;
    } catch (const qgauss::consistency_error& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const qgauss::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
