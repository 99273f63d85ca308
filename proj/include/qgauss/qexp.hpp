#pragma once

#include "qgauss/qcore.hpp"

namespace qgauss {

/// Outcome of a truncated series (or product) evaluation. On successful
/// return tail_bound < policy.abs_tol.
struct SeriesEvalReport {
    double value = 0.0;
    int terms_used = 0;
    double tail_bound = 0.0;
};

/// e_q^x = sum_n x^n / [n]_q!. Converges only for |x|(1-q) < 1; arguments
/// outside that disk are a domain error.
SeriesEvalReport e_q(const QParam& q, double x, const TruncationPolicy& policy = {});

/// E_q^x = sum_n q^{n(n-1)/2} x^n / [n]_q!. Entire in x for q < 1.
/// Satisfies e_q^x E_q^{-x} = 1 on the e_q convergence disk.
SeriesEvalReport E_q(const QParam& q, double x, const TruncationPolicy& policy = {});

/// Gaussian kernel E_{q^2}^{-q^2 x^2 / [2]_q}
///   = sum_n (-1)^n q^{n(n+1)} x^{2n} / ((1+q)^n [n]_{q^2}!).
/// The q-analogue of exp(-x^2/2); identically 1 at q = 0.
double gauss_kernel(const QParam& q, double x, const TruncationPolicy& policy = {});
SeriesEvalReport gauss_kernel_report(const QParam& q, double x,
                                     const TruncationPolicy& policy = {});

namespace detail {

// Literal power-series evaluations. Each fails with truncation_error when the
// term cap is reached, and reports the accumulated sum of |term| so callers
// can bound cancellation noise. The public wrappers above switch to the
// product forms below when that noise bound exceeds the requested tolerance.
struct LiteralSeriesResult {
    SeriesEvalReport report;
    double abs_term_sum = 0.0;
};
LiteralSeriesResult e_q_series(const QParam& q, double x, const TruncationPolicy& policy);
LiteralSeriesResult E_q_series(const QParam& q, double x, const TruncationPolicy& policy);
LiteralSeriesResult gauss_kernel_series(const QParam& q, double x,
                                        const TruncationPolicy& policy);

// Product representations (all factors well-conditioned, no cancellation):
//   E_q^x                      = prod_{k>=0} (1 + (1-q) q^k x)
//   E_{q^2}^{-q^2 x^2/[2]_q}   = prod_{k>=0} (1 - (1-q) q^{2k+2} x^2)
SeriesEvalReport E_q_product(const QParam& q, double x);
SeriesEvalReport gauss_kernel_product(const QParam& q, double x);

// True when the literal series result is certified accurate for `need_abs`.
bool cancellation_ok(double abs_term_sum, double need_abs);

} // namespace detail

} // namespace qgauss
