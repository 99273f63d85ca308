#include "qgauss/gaussq.hpp"

#include <cmath>

#include "qgauss/jackson.hpp"
#include "series_util.hpp"

namespace qgauss {

namespace detail {

namespace {

// Iteration cap for the stable positive-term routes; their step counts scale
// like |ln tol|/(1-q), an implementation detail rather than a term count of
// the cited series, so they get their own generous bound.
constexpr int kMaxStableSteps = 40000000;

// Jackson integral of x^n * kernel over [0, nu], evaluated with the kernel in
// product form. At the sample points q^m nu the kernel collapses to the
// partial product P_{m+1} = prod_{k>m}(1-q^{2k}), which yields the descending
// recurrence T_{m-1} = T_m (1-q^{2m}) / q^{n+1} for T_m = q^{m(n+1)} P_{m+1}.
// Every term is positive; cost is O(steps) overall instead of
// O(steps * factors).
double kernel_moment_integral(const QParam& q, int n) {
    const double qd = q.value();
    const double nu = q.nu();
    if (qd == 0.0) return std::pow(nu, n + 1); // b f(b) with kernel == 1
    const double nu_pow = std::pow(nu, static_cast<double>(n + 1));
    const double log_q = std::log(qd);
    if (static_cast<double>(n + 1) * log_q < -69.0) {
        // q^{n+1} < 1e-30: everything past m = 0 is negligible and the
        // descending start point would underflow; only P_1 survives.
        double p1 = 1.0;
        double f = qd * qd;
        while (f > 1e-18) {
            p1 *= 1.0 - f;
            f *= qd * qd;
        }
        return (1.0 - qd) * nu_pow * p1;
    }
    // The summand q^{m(n+1)} P_{m+1} peaks where q^{2m} = 1 - q^{n+1}; start
    // 42/((n+1)|ln q|) steps past that peak so the discarded tail is ~e-18
    // relative, and seed with the explicitly multiplied partial product
    // (P_{M+1} is nowhere near 1 when n compresses M).
    const double qn1 = std::pow(qd, static_cast<double>(n + 1));
    const double m_peak = std::log1p(-qn1) / (2.0 * log_q);
    const long M = std::max(1L, static_cast<long>(std::ceil(m_peak)) +
                                    static_cast<long>(std::ceil(-42.0 / ((n + 1) * log_q))) + 2);
    if (M > kMaxStableSteps) {
        throw truncation_error("moment: q too close to 1 for the Jackson sum");
    }
    double p_start = 1.0; // prod_{k >= M+1} (1 - q^{2k})
    {
        double f = std::pow(qd, 2.0 * static_cast<double>(M + 1));
        const double cut = 1e-18 * (1.0 - qd * qd);
        while (f > cut) {
            p_start *= 1.0 - f;
            f *= qd * qd;
        }
    }
    KahanAccumulator acc;
    double t = std::pow(qd, static_cast<double>(M) * static_cast<double>(n + 1)) * p_start;
    if (!(t > 0.0)) {
        throw truncation_error("moment: order too large for this q at double precision");
    }
    double q2m = std::pow(qd, 2.0 * static_cast<double>(M));
    for (long m = M; m >= 1; --m) {
        acc.add(t);
        t = t * (1.0 - q2m) / qn1;
        q2m /= qd * qd;
    }
    acc.add(t); // m = 0
    return (1.0 - qd) * nu_pow * acc.value();
}

// Jackson integral of the kernel over [0, y] for 0 <= y <= nu, by the same
// descending product recurrence with w = (1-q) y^2 <= 1. Stable companion to
// the closed CDF series when its alternating form cancels too hard.
double kernel_partial_integral_stable(const QParam& q, double y) {
    const double qd = q.value();
    if (y == 0.0) return 0.0;
    if (qd == 0.0) return y; // b f(b), kernel == 1
    const double w = (1.0 - qd) * y * y;
    const double log_q = std::log(qd);
    // summand q^m Pw_{m+1} peaks where w q^{2m} = 1 - q
    const double m_peak = w > 1.0 - qd ? std::log((1.0 - qd) / w) / (2.0 * log_q) : 0.0;
    const long M = std::max(1L, static_cast<long>(std::ceil(m_peak)) +
                                    static_cast<long>(std::ceil(-48.0 / log_q)) + 2);
    if (M > kMaxStableSteps) {
        throw truncation_error("cdf: q too close to 1 for the Jackson sum");
    }
    KahanAccumulator acc;
    double t = std::pow(qd, static_cast<double>(M));
    double q2m = std::pow(qd, 2.0 * static_cast<double>(M));
    for (long m = M; m >= 1; --m) {
        acc.add(t);
        t = t * (1.0 - w * q2m) / qd;
        q2m /= qd * qd;
    }
    acc.add(t);
    return (1.0 - qd) * y * acc.value();
}

} // namespace

CSeriesResult c_q_series_literal(const QParam& q, const TruncationPolicy& policy) {
    policy.validate();
    const double qd = q.value();
    if (qd == 0.0) return {2.0, true}; // only the m = 0 term survives
    const double prefactor = 2.0 * std::sqrt(1.0 - qd);
    const double tol_sum = 0.5 * policy.abs_tol / prefactor;

    // The terms span many orders of magnitude with alternating signs (the
    // largest is ~7e16 already at q = 0.99), so the summation runs in quad
    // precision and the cancellation floor is certified afterwards.
    using f128 = __float128;
    const f128 qf = qd;
    const f128 q2f = qf * qf;
    f128 sum = 0;
    f128 poch = 1;        // (1-q^2)_{q^2}^m
    f128 qp = 1;          // q^{m(m+1)}
    f128 q_odd = qf;      // q^{2m+1}
    f128 q_even = q2f;    // q^{2m+2}
    double abs_sum = 0.0;
    double sign = 1.0;
    f128 t = 1 / (1 - q_odd); // term m = 0
    for (int m = 0; m < policy.max_terms; ++m) {
        sum += sign < 0.0 ? -t : t;
        abs_sum += static_cast<double>(t);
        sign = -sign;
        qp *= q_even;
        poch *= 1 - q_even;
        q_odd *= q2f;
        q_even *= q2f;
        if (!(poch > 0)) {
            // Pochhammer underflow (q past ~1 - 7e-5): the literal route is
            // numerically dead here; report uncertified so callers switch.
            return {0.0, false};
        }
        t = qp / ((1 - q_odd) * poch);
        // Later term ratios are bounded by q^{2m+2}/((1-q^{2m+2})(1-q^{2m+3})),
        // monotone decreasing in m.
        const double qe = static_cast<double>(q_even);
        const double qo3 = static_cast<double>(q_odd) * qd * qd;
        const double rho = qe / ((1.0 - qe) * (1.0 - qo3));
        if (rho < 1.0) {
            const double tail = static_cast<double>(t) / (1.0 - rho);
            if (tail < tol_sum) {
                const double value = prefactor * static_cast<double>(sum);
                const double noise_c = cancellation_noise(abs_sum, kQuadEps) * prefactor;
                const bool certified =
                    noise_c <= std::max(kCancellationBudget, std::fabs(value) * 1e-12);
                return {value, certified};
            }
        }
    }
    throw truncation_error("c_q_series: max_terms reached before the tail bound met abs_tol");
}

double c_q_series_stable(const QParam& q, const TruncationPolicy& policy) {
    policy.validate();
    // c(q) = 2 (1-q) nu * sum_m q^m P_{m+1} = the order-0 kernel moment.
    return 2.0 * kernel_moment_integral(q, 0);
}

OddSeriesResult cdf_odd_series(const QParam& q, double x, double tail_tol, int max_terms) {
    const double qd = q.value();
    const double q2 = qd * qd;
    const double x2 = x * x;
    KahanAccumulator acc;
    double abs_sum = 0.0;
    double num = x;        // q^{n(n+1)} (q-1)^n x^{2n+1}
    double poch = 1.0;     // (1-q^2)_{q^2}^n
    double q_odd = qd;     // q^{2n+1}
    double q_even = q2;    // q^{2n+2}
    double t = num / (1.0 - q_odd);
    for (int n = 0; n < max_terms; ++n) {
        acc.add(t);
        abs_sum += std::fabs(t);
        num *= q_even * (qd - 1.0) * x2;
        poch *= 1.0 - q_even;
        q_odd *= q2;
        q_even *= q2;
        t = num / ((1.0 - q_odd) * poch);
        // sup of later term ratios; (1-q)x^2 <= 1 on the support keeps it
        // falling off like q^{2n}.
        const double rho =
            q_even * (1.0 - qd) * x2 / ((1.0 - q_even) * (1.0 - q_odd * q2));
        if (rho < 1.0) {
            const double tail = std::fabs(t) / (1.0 - rho);
            if (tail < tail_tol) {
                return {acc.value(), n + 1, tail, abs_sum};
            }
        }
    }
    throw truncation_error("cdf series: max_terms reached before the tail bound met abs_tol");
}

} // namespace detail

double c_q_series(const QParam& q, const TruncationPolicy& policy) {
    auto lit = detail::c_q_series_literal(q, policy);
    if (lit.certified) return lit.value;
    return detail::c_q_series_stable(q, policy);
}

double c_q_integral(const QParam& q, const TruncationPolicy& policy) {
    const auto kernel = [&q](double x) { return detail::gauss_kernel_product(q, x).value; };
    return 2.0 * jackson_integral(kernel, q, {0.0, q.nu()}, policy);
}

double pi_approx(const QParam& q, const TruncationPolicy& policy) {
    const double c = c_q_series(q, policy);
    return c * c / 2.0;
}

GaussQ::GaussQ(QParam q, TruncationPolicy policy) : q_(q), policy_(policy), c_(0.0) {
    policy_.validate();
    if (!(q_.value() < max_supported_q)) {
        throw domain_error("GaussQ: q beyond the supported cap 1 - 1e-5");
    }
    auto lit = detail::c_q_series_literal(q_, policy_);
    if (lit.certified) {
        c_ = lit.value;
        const double ci = c_q_integral(q_, policy_);
        const double gap = std::fabs(ci - c_) / std::fabs(c_);
        if (!(gap < 1e-9)) {
            throw consistency_error("GaussQ: closed-series and integral c(q) routes disagree");
        }
    } else {
        // Past the cancellation range of the literal alternating series
        // (q >~ 0.993). The positive-term rewrite coincides with the integral
        // route there, so the cross-check would be vacuous.
        c_ = detail::c_q_series_stable(q_, policy_);
    }
}

double GaussQ::density(double x) const {
    if (std::fabs(x) > nu()) return 0.0;
    return detail::gauss_kernel_product(q_, x).value / c_;
}

double GaussQ::cdf(double x) const {
    if (x < -nu()) return 0.0;
    if (x > nu()) return 1.0;
    const double prefactor = (1.0 - q_.value()) / c_;
    const double tail_tol = 0.5 * policy_.abs_tol / prefactor;
    auto s = detail::cdf_odd_series(q_, x, tail_tol, policy_.max_terms);
    const double noise =
        detail::cancellation_noise(s.abs_term_sum, detail::kDoubleEps) * prefactor;
    double value;
    if (noise <= detail::kCancellationBudget) {
        value = 0.5 + prefactor * s.value;
    } else {
        // Cancellation past the certificate (|x| near nu with q near 1):
        // integrate the product-form kernel instead; all terms positive.
        const double half = detail::kernel_partial_integral_stable(q_, std::fabs(x)) / c_;
        value = x < 0.0 ? 0.5 - half : 0.5 + half;
    }
    // roundoff can push the endpoints a few ulp outside [0, 1]; clamping is
    // symmetric so G(-x) + G(x) = 1 survives
    return std::min(1.0, std::max(0.0, value));
}

double GaussQ::cdf_partial_integral(double a, double b) const {
    if (!(a >= 0.0 && a <= b && b <= nu())) {
        throw domain_error("cdf_partial_integral: requires 0 <= a <= b <= nu");
    }
    if (a == b) return 0.0;
    const double qd = q_.value();
    const double q2 = qd * qd;
    const double prefactor = (1.0 - qd) / c_;
    const double tail_tol = 0.5 * policy_.abs_tol / prefactor;

    // Termwise (b^{2n+1} - a^{2n+1}) evaluation of the closed series; the
    // tail is bounded through the b-powers alone.
    detail::KahanAccumulator acc;
    double abs_sum = 0.0;
    double coeff = 1.0;   // q^{n(n+1)} (q-1)^n
    double pa = a;        // a^{2n+1}
    double pb = b;        // b^{2n+1}
    double poch = 1.0;    // (1-q^2)_{q^2}^n
    double q_odd = qd;    // q^{2n+1}
    double q_even = q2;   // q^{2n+2}
    const double b2 = b * b;
    bool done = false;
    for (int n = 0; n < policy_.max_terms && !done; ++n) {
        const double t = coeff * (pb - pa) / ((1.0 - q_odd) * poch);
        acc.add(t);
        abs_sum += std::fabs(t);
        coeff *= q_even * (qd - 1.0);
        poch *= 1.0 - q_even;
        q_odd *= q2;
        q_even *= q2;
        pa *= a * a;
        pb *= b2;
        const double next_bound = std::fabs(coeff) * pb / ((1.0 - q_odd) * poch);
        const double rho = q_even * (1.0 - qd) * b2 / ((1.0 - q_even) * (1.0 - q_odd * q2));
        if (rho < 1.0 && next_bound / (1.0 - rho) < tail_tol) done = true;
    }
    if (!done) {
        throw truncation_error(
            "cdf_partial_integral: max_terms reached before the tail bound met abs_tol");
    }
    const double noise =
        detail::cancellation_noise(abs_sum, detail::kDoubleEps) * prefactor;
    if (noise > detail::kCancellationBudget) {
        throw truncation_error("cdf_partial_integral: cancellation exceeds double precision here");
    }
    return prefactor * acc.value();
}

double GaussQ::moment(int n) const {
    if (n < 0) throw domain_error("moment: order must be nonnegative");
    if (n % 2 == 1) return 0.0; // odd integrand cancels exactly over [-nu, nu]
    return 2.0 * detail::kernel_moment_integral(q_, n) / c_;
}

double GaussQ::inverse_cdf(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        throw domain_error("inverse_cdf: u must lie strictly inside (0, 1)");
    }
    if (u == 0.5) return 0.0;
    constexpr double kTol = 1e-10;
    double lo = -nu();
    double hi = nu();
    double mid = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double f = cdf(mid);
        if (std::fabs(f - u) < kTol) return mid;
        if (f < u) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-16 * nu()) break;
    }
    if (std::fabs(cdf(mid) - u) < kTol) return mid;
    throw truncation_error("inverse_cdf: bisection failed to reach tolerance");
}

} // namespace qgauss
