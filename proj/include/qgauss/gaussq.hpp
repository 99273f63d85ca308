#pragma once

#include "qgauss/qcore.hpp"
#include "qgauss/qexp.hpp"

namespace qgauss {

/// Normalization constant c(q), the q-analogue of sqrt(2*pi), via the closed
/// alternating series
///   c(q) = 2 (1-q)^{1/2} sum_m (-1)^m q^{m(m+1)} / ((1-q^{2m+1}) (1-q^2)_{q^2}^m).
/// c(0) = 2 exactly; c(q) -> sqrt(2*pi) as q -> 1.
double c_q_series(const QParam& q, const TruncationPolicy& policy = {});

/// The same constant as the Jackson integral 2 * int_0^nu kernel d_q x.
/// Independent evaluation route; agrees with c_q_series to ~1e-12.
double c_q_integral(const QParam& q, const TruncationPolicy& policy = {});

/// c(q)^2 / 2, a q-analogue of pi; equals 2 at q = 0 and tends to pi.
double pi_approx(const QParam& q, const TruncationPolicy& policy = {});

/// The Gaussian q-distribution on [-nu, nu]: normalized kernel density, its
/// running Jackson integral (the CDF), moments, and quantiles. Immutable
/// after construction; all member calls are safe to run concurrently.
class GaussQ {
public:
    /// Supported deformation range. Beyond this the number of Jackson terms
    /// per evaluation grows like |ln tol|/(1-q) and desk-scale evaluation
    /// stops being practical.
    static constexpr double max_supported_q = 1.0 - 1e-5;

    /// Computes c(q) by the closed series and, where that series is
    /// representable at working precision, verifies it against the integral
    /// route; disagreement beyond 1e-9 relative is a consistency_error.
    explicit GaussQ(QParam q, TruncationPolicy policy = {});

    const QParam& param() const noexcept { return q_; }
    double q() const noexcept { return q_.value(); }
    double nu() const noexcept { return q_.nu(); }
    double c() const noexcept { return c_; }
    const TruncationPolicy& policy() const noexcept { return policy_; }

    /// s_q(x) = kernel(x)/c(q) on [-nu, nu], 0 outside. At q = 0 this is the
    /// uniform density 1/2 on [-1, 1].
    double density(double x) const;

    /// G_q(x): 0 below -nu, 1 above nu, and on [-nu, nu]
    ///   1/2 + ((1-q)/c(q)) sum_n q^{n(n+1)} (q-1)^n x^{2n+1}
    ///                      / ((1-q^{2n+1}) (1-q^2)_{q^2}^n).
    /// G_q(0) = 1/2 exactly; G_q(-x) + G_q(x) = 1.
    double cdf(double x) const;

    /// (1/c(q)) int_a^b kernel d_q t for 0 <= a <= b <= nu, by the closed
    /// odd-power series; agrees with the direct Jackson route to ~1e-10.
    double cdf_partial_integral(double a, double b) const;

    /// n-th moment (1/c(q)) int_{-nu}^{nu} x^n kernel d_q x. Odd moments
    /// vanish by symmetry and return exact 0; even moments equal
    /// [n-1]_q!! and are computed by Jackson integration.
    double moment(int n) const;

    /// Quantile via bisection on the monotone CDF: returns x in [-nu, nu]
    /// with |cdf(x) - u| < 1e-10. Requires 0 < u < 1; inverse_cdf(1/2) = 0.
    double inverse_cdf(double u) const;

private:
    QParam q_;
    TruncationPolicy policy_;
    double c_;
};

namespace detail {

// Odd-power CDF series S(x) = sum_n q^{n(n+1)}(q-1)^n x^{2n+1} / (...) without
// the (1-q)/c prefactor, plus the |term| sum for cancellation certificates.
struct OddSeriesResult {
    double value = 0.0;
    int terms_used = 0;
    double tail_bound = 0.0;
    double abs_term_sum = 0.0;
};
OddSeriesResult cdf_odd_series(const QParam& q, double x, double tail_tol, int max_terms);

// Literal alternating c(q) series, summed in extended precision. certified
// is false when cancellation exceeds what extended precision can deliver
// (q >~ 0.993); callers then use the stable positive-term route below.
struct CSeriesResult {
    double value = 0.0;
    bool certified = false;
};
CSeriesResult c_q_series_literal(const QParam& q, const TruncationPolicy& policy);

// Positive-term rewrite c(q) = 2 sqrt(1-q) sum_j q^j prod_{k>j} (1-q^{2k}),
// algebraically equal to both published forms and stable for all q < 1.
double c_q_series_stable(const QParam& q, const TruncationPolicy& policy);

} // namespace detail

} // namespace qgauss
