#include "qgauss/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qgauss/gaussq.hpp"
#include "qgauss/jackson.hpp"
#include "qgauss/matchcomb.hpp"
#include "qgauss/qexp.hpp"

namespace qgauss {

namespace {

double rel_err(double got, double expected) {
    const double scale = std::max(1.0, std::fabs(expected));
    return std::fabs(got - expected) / scale;
}

CheckResult make(const std::string& name, double max_error, double threshold) {
    return {name, max_error, threshold, max_error < threshold};
}

// Direct summation of the defining indicator series of m_q[a, b]; the
// independent oracle the closed measure formula is held against.
double measure_indicator_sum(const QParam& q, double a, double b) {
    const double qq = q.value();
    if (qq == 0.0) return b - a; // both endpoints sit inside [a, b]
    double sum = 0.0;
    double qn = 1.0;
    while (qn * (std::fabs(a) + std::fabs(b)) > 1e-18) {
        const double xb = qn * b;
        const double xa = qn * a;
        sum += qn * (b * ((a <= xb && xb <= b) ? 1.0 : 0.0) - a * ((a <= xa && xa <= b) ? 1.0 : 0.0));
        qn *= qq;
    }
    return (1.0 - qq) * sum;
}

std::vector<double> symmetric_grid(double lo, double hi, int n) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g.push_back(lo + (hi - lo) * i / (n - 1));
    }
    return g;
}

} // namespace

std::vector<CheckResult> run_property_checks(const QParam& q, const TruncationPolicy& policy) {
    std::vector<CheckResult> out;
    const double qd = q.value();
    TruncationPolicy tight = policy;
    tight.abs_tol = std::min(policy.abs_tol, 1e-14);
    tight.max_terms = std::max(policy.max_terms, 1000000);

    // monomial rule: d_q x^n = [n]_q x^{n-1}
    {
        double err = 0.0;
        for (int n = 1; n <= 8; ++n) {
            for (double x : {-1.7, -0.5, 0.25, 0.5, 1.0, 1.7}) {
                const auto f = [n](double t) {
                    double p = 1.0;
                    for (int i = 0; i < n; ++i) p *= t;
                    return p;
                };
                const double got = q_derivative(f, q, x);
                const double expected = q_bracket(q, n) * std::pow(x, n - 1);
                err = std::max(err, rel_err(got, expected));
            }
        }
        out.push_back(make("qcore.monomial_rule", err, 1e-12));
    }

    // iterated derivative: d_q^n x^n = [n]_q!
    {
        double err = 0.0;
        for (int n = 1; n <= 5; ++n) {
            std::function<double(double)> f = [n](double t) {
                double p = 1.0;
                for (int i = 0; i < n; ++i) p *= t;
                return p;
            };
            for (int k = 0; k < n; ++k) {
                auto prev = f;
                f = [prev, q](double t) { return q_derivative(prev, q, t); };
            }
            for (double x : {0.7, 1.3}) {
                err = std::max(err, rel_err(f(x), q_factorial(q, n)));
            }
        }
        out.push_back(make("qcore.iterated_derivative", err, 1e-10));
    }

    // [n]_q! (1-q)^n = (1-q)_q^n
    {
        double err = 0.0;
        for (int n = 0; n <= 20; ++n) {
            const double lhs = q_factorial(q, n) * std::pow(1.0 - qd, n);
            const double rhs = q_pochhammer(1.0, -qd, q, n);
            err = std::max(err, rel_err(lhs, rhs));
        }
        out.push_back(make("qcore.pochhammer_identity", err, 1e-12));
    }

    // e_q^x E_q^{-x} = 1 inside the convergence disk
    {
        double err = 0.0;
        for (double x : symmetric_grid(-0.9, 0.9, 20)) {
            const double p = e_q(q, x, policy).value * E_q(q, -x, policy).value;
            err = std::max(err, std::fabs(p - 1.0));
        }
        out.push_back(make("qexp.inverse_identity", err, 1e-10));
    }

    // d_q e_q^x = e_q^x and d_q E_q^x = E_q^{qx}
    {
        double err_e = 0.0;
        double err_E = 0.0;
        const auto fe = [&](double t) { return e_q(q, t, policy).value; };
        const auto fE = [&](double t) { return E_q(q, t, policy).value; };
        for (double x : symmetric_grid(-0.9, 0.9, 20)) {
            if (std::fabs(x) < 0.05) continue;
            err_e = std::max(err_e, std::fabs(q_derivative(fe, q, x) - fe(x)));
            err_E = std::max(err_E, std::fabs(q_derivative(fE, q, x) - fE(qd * x)));
        }
        out.push_back(make("qexp.e_derivative_identity", err_e, 1e-9));
        out.push_back(make("qexp.E_derivative_identity", err_E, 1e-9));
    }

    // kernel two-form agreement against E_{q^2}
    {
        double err = 0.0;
        for (double x : symmetric_grid(-q.nu(), q.nu(), 11)) {
            const double k1 = gauss_kernel(q, x, policy);
            const QParam q2(qd * qd);
            const double k2 = E_q(q2, -qd * qd * x * x / (1.0 + qd), policy).value;
            err = std::max(err, std::fabs(k1 - k2));
        }
        out.push_back(make("qexp.kernel_two_form", err, 1e-12));
    }

    // Jackson integral identity suite on seeded random intervals
    {
        std::mt19937 rng(20240617u);
        std::uniform_real_distribution<double> uni(-2.0, 2.0);
        std::uniform_real_distribution<double> pos(0.2, 2.0);
        const std::vector<std::function<double(double)>> fs = {
            [](double) { return 1.0; },
            [](double x) { return x; },
            [](double x) { return x * x; },
            [&](double x) { return gauss_kernel(q, x, tight); },
        };
        double err = 0.0;
        for (const auto& f : fs) {
            for (int rep = 0; rep < 4; ++rep) {
                const double a = uni(rng);
                const double b = uni(rng);
                const double c = pos(rng);
                const double full = jackson_integral(f, q, {a, b}, tight);
                // (1): series form on [0, b]
                {
                    double s = 0.0;
                    double qn = 1.0;
                    for (int n = 0; n < 40000 && qn > 1e-18; ++n) {
                        s += qn * f(qn * b);
                        qn *= qd;
                    }
                    s *= (1.0 - qd) * b;
                    err = std::max(err, std::fabs(jackson_integral(f, q, {0.0, b}, tight) - s));
                }
                // (2): antisymmetry
                err = std::max(err,
                               std::fabs(full + jackson_integral(f, q, {b, a}, tight)));
                // (3): scaling with matching orientation
                {
                    const auto fc = [&](double x) { return f(c * x); };
                    err = std::max(err, std::fabs(jackson_integral(f, q, {a * c, b * c}, tight) -
                                                  c * jackson_integral(fc, q, {a, b}, tight)));
                }
                // (4): reflection
                {
                    const auto fr = [&](double x) { return f(-x); };
                    const double bb = std::fabs(b);
                    err = std::max(err, std::fabs(jackson_integral(f, q, {-bb, 0.0}, tight) -
                                                  jackson_integral(fr, q, {0.0, bb}, tight)));
                }
                // (5): additivity in the limits
                err = std::max(err, std::fabs(jackson_integral(f, q, {a, c}, tight) -
                                              jackson_integral(f, q, {a, b}, tight) -
                                              jackson_integral(f, q, {b, c}, tight)));
                // (6): symmetrization
                {
                    const auto fs2 = [&](double x) { return f(x) + f(-x); };
                    const double bb = std::fabs(b);
                    err = std::max(err, std::fabs(jackson_integral(f, q, {-bb, bb}, tight) -
                                                  jackson_integral(fs2, q, {0.0, bb}, tight)));
                }
            }
        }
        out.push_back(make("jackson.prop1_suite", err, 1e-12));
    }

    // fundamental theorem: d_q of the running integral returns the integrand
    {
        double err = 0.0;
        const std::vector<std::function<double(double)>> fs = {
            [](double x) { return x * x; },
            [&](double x) { return gauss_kernel(q, x, tight); },
        };
        for (const auto& f : fs) {
            const auto F = [&](double t) { return jackson_integral(f, q, {0.0, t}, tight); };
            for (double x : symmetric_grid(0.1, 2.0, 25)) {
                err = std::max(err, std::fabs(q_derivative(F, q, x) - f(x)));
            }
        }
        out.push_back(make("jackson.fundamental_theorem", err, 1e-9));
    }

    // closed measure formula against the defining indicator series
    {
        std::mt19937 rng(777u);
        std::uniform_real_distribution<double> uni(0.0, 2.0);
        double err = 0.0;
        for (int rep = 0; rep < 25; ++rep) {
            double a = uni(rng);
            double b = uni(rng);
            if (a > b) std::swap(a, b);
            if (a == 0.0 || a == b) continue;
            err = std::max(err,
                           std::fabs(q_measure(q, {a, b}) - measure_indicator_sum(q, a, b)));
        }
        out.push_back(make("jackson.measure_vs_indicator", err, 1e-12));
    }

    // additivity over disjoint unions (component-wise indicator sums) and
    // scale covariance
    {
        std::mt19937 rng(778u);
        std::uniform_real_distribution<double> uni(0.01, 2.0);
        double err_add = 0.0;
        double err_scale = 0.0;
        for (int rep = 0; rep < 10; ++rep) {
            double v[4] = {uni(rng), uni(rng), uni(rng), uni(rng)};
            std::sort(v, v + 4);
            if (v[0] == v[1] || v[2] == v[3]) continue;
            const double lhs = q_measure(q, {v[0], v[1]}) + q_measure(q, {v[2], v[3]});
            const double rhs =
                measure_indicator_sum(q, v[0], v[1]) + measure_indicator_sum(q, v[2], v[3]);
            err_add = std::max(err_add, std::fabs(lhs - rhs));
            for (double cc : {0.5, 2.0, 3.25}) {
                err_scale = std::max(err_scale,
                                     std::fabs(q_measure(q, {cc * v[0], cc * v[1]}) -
                                               cc * q_measure(q, {v[0], v[1]})));
            }
        }
        out.push_back(make("jackson.measure_additivity", err_add, 1e-12));
        out.push_back(make("jackson.measure_scaling", err_scale, 1e-12));
    }

    // distribution-level properties
    {
        const GaussQ g(q, policy);

        out.push_back(make("gaussq.normalization", std::fabs(g.moment(0) - 1.0), 1e-10));

        double err = 0.0;
        for (int n = 0; n <= 3; ++n) {
            const double mi = g.moment(2 * n);
            const double df = q_double_factorial(q, n);
            const double wc = weighted_count(2 * n).evaluate(qd);
            err = std::max(err, rel_err(mi, df));
            err = std::max(err, rel_err(mi, wc));
            err = std::max(err, std::fabs(g.moment(2 * n + 1)));
        }
        out.push_back(make("gaussq.moment_bridge", err, 1e-9));

        // CDF monotone, symmetric, consistent with the density. The grid is
        // clipped to |x| <= 6: past that the true CDF increments sit below
        // double roundoff once q -> 1 and monotonicity is unobservable. A
        // coarser grid keeps the stable high-q route affordable.
        const double lim = std::min(g.nu(), 6.0);
        const int grid_n = qd > 0.99 ? 101 : 1000;
        double prev = -1.0;
        double err_mono = 0.0;
        double err_sym = 0.0;
        for (double x : symmetric_grid(-lim, lim, grid_n)) {
            const double F = g.cdf(x);
            if (F < prev) err_mono = std::max(err_mono, prev - F);
            prev = F;
            err_sym = std::max(err_sym, std::fabs(g.cdf(-x) + F - 1.0));
        }
        out.push_back(make("gaussq.cdf_monotone", err_mono, 1e-15));
        out.push_back(make("gaussq.cdf_symmetry", err_sym, 1e-10));

        double err_dens = 0.0;
        const auto F = [&](double t) { return g.cdf(t); };
        for (double x : symmetric_grid(0.1, 0.95 * lim, 20)) {
            err_dens = std::max(err_dens, std::fabs(q_derivative(F, q, x) - g.density(x)));
            err_dens = std::max(err_dens, std::fabs(q_derivative(F, q, -x) - g.density(-x)));
        }
        out.push_back(make("gaussq.density_cdf_consistency", err_dens, 1e-8));

        // closed partial-integral series against the direct Jackson route
        {
            double err_p = 0.0;
            const auto kern = [&](double t) { return gauss_kernel(q, t, tight); };
            const double pairs[][2] = {{0.0, 0.35 * g.nu()}, {0.2, 0.8}, {0.1, 0.95 * g.nu()}};
            for (const auto& ab : pairs) {
                if (!(ab[0] <= ab[1] && ab[1] <= g.nu())) continue;
                const double closed = g.cdf_partial_integral(ab[0], ab[1]);
                const double direct =
                    jackson_integral(kern, q, {ab[0], ab[1]}, tight) / g.c();
                err_p = std::max(err_p, std::fabs(closed - direct));
            }
            out.push_back(make("gaussq.partial_integral_two_route", err_p, 1e-10));
        }

        if (qd <= 0.99) {
            const double cs = c_q_series(q, policy);
            const double ci = c_q_integral(q, policy);
            out.push_back(make("gaussq.c_two_form", std::fabs(cs - ci) / cs, 1e-9));
        }

        if (qd == 0.0) {
            double err0 = 0.0;
            for (double x : symmetric_grid(-1.0, 1.0, 101)) {
                err0 = std::max(err0, std::fabs(g.density(x) - 0.5));
                err0 = std::max(err0, std::fabs(g.cdf(x) - (1.0 + x) / 2.0));
            }
            out.push_back(make("gaussq.q0_exact_limits", err0, 1e-14));
        }
    }

    return out;
}

std::vector<CheckResult> run_global_checks(const TruncationPolicy& policy) {
    (void)policy;
    std::vector<CheckResult> out;

    // weighted matching counts equal the symbolic odd-bracket product
    {
        int mismatches = 0;
        for (int n = 1; n <= 6; ++n) {
            QPolynomial expected = QPolynomial::monomial(0);
            for (int i = 1; i <= n; ++i) {
                expected = expected * QPolynomial::bracket(2 * i - 1);
            }
            if (!(weighted_count(2 * n) == expected)) ++mismatches;
            if (!weighted_count(2 * n - 1).is_zero()) ++mismatches;
        }
        out.push_back(make("matchcomb.closed_form", mismatches, 0.5));
    }

    // q = 1 and q = 0 specializations of the weighted counts
    {
        int mismatches = 0;
        for (int n = 1; n <= 6; ++n) {
            std::uint64_t classical = 1;
            for (int k = 2 * n - 1; k >= 3; k -= 2) classical *= static_cast<std::uint64_t>(k);
            const auto wc = weighted_count(2 * n);
            if (wc.coefficient_sum() != classical) ++mismatches;
            if (wc.coefficient(0) != 1) ++mismatches; // unique weight-0 matching
        }
        out.push_back(make("matchcomb.specializations", mismatches, 0.5));
    }

    // weighted counts evaluated at real q match the double factorial
    {
        double err = 0.0;
        for (double qv : {0.0, 0.5, 0.9}) {
            const QParam q(qv);
            for (int n = 0; n <= 5; ++n) {
                err = std::max(err, rel_err(weighted_count(2 * n).evaluate(qv),
                                            q_double_factorial(q, n)));
            }
        }
        out.push_back(make("matchcomb.evaluation_bridge", err, 1e-12));
    }

    // [n]_q increases in q toward the classical n
    {
        double err = 0.0;
        int violations = 0;
        for (int n = 1; n <= 10; ++n) {
            double prev = -1.0;
            for (double qv : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.9999, 0.9999999}) {
                const double b = q_bracket(QParam(qv), n);
                if (b < prev) ++violations;
                prev = b;
            }
            err = std::max(err, std::fabs(prev - n));
        }
        out.push_back(make("qcore.bracket_monotone_in_q", violations, 0.5));
        out.push_back(make("qcore.bracket_classical_limit", err, 1e-4));
    }

    return out;
}

} // namespace qgauss
