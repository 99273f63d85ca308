#include "qgauss/qexp.hpp"

#include <cmath>

#include "series_util.hpp"

namespace qgauss {

namespace detail {

bool cancellation_ok(double abs_term_sum, double need_abs) {
    return cancellation_noise(abs_term_sum, kDoubleEps) <= need_abs;
}

namespace {

double noise_budget(double value) {
    return std::max(kCancellationBudget, std::fabs(value) * 1e-12);
}

// Iteration cap for the product forms; within the supported q range the
// factor count stays a few million at most.
constexpr int kMaxProductFactors = 20000000;

} // namespace

LiteralSeriesResult e_q_series(const QParam& q, double x, const TruncationPolicy& policy) {
    policy.validate();
    const double qq = q.value();
    if (!(std::fabs(x) * (1.0 - qq) < 1.0)) {
        throw domain_error("e_q: |x|(1-q) >= 1 is outside the convergence disk");
    }
    KahanAccumulator acc;
    double abs_sum = 0.0;
    double term = 1.0;     // x^n / [n]_q!
    double bracket = 1.0;  // [n+1]_q while forming the next term
    double qpow = qq;      // q^{n+1}
    for (int n = 0; n < policy.max_terms; ++n) {
        acc.add(term);
        abs_sum += std::fabs(term);
        const double next = term * (x / bracket);
        bracket += qpow; // now [n+2]_q
        qpow *= qq;
        // Term ratios |x|/[m]_q decrease monotonically, so the first of them
        // bounds the whole geometric tail.
        const double r = std::fabs(x) / bracket;
        if (r < 1.0) {
            const double tail = std::fabs(next) / (1.0 - r);
            if (tail < policy.abs_tol) {
                return {{acc.value(), n + 1, tail}, abs_sum};
            }
        }
        term = next;
    }
    throw truncation_error("e_q: max_terms reached before the tail bound met abs_tol");
}

LiteralSeriesResult E_q_series(const QParam& q, double x, const TruncationPolicy& policy) {
    policy.validate();
    const double qq = q.value();
    KahanAccumulator acc;
    double abs_sum = 0.0;
    double term = 1.0;     // q^{n(n-1)/2} x^n / [n]_q!
    double bracket = 1.0;  // [n+1]_q
    double qpow = qq;      // q^{n+1}
    double qn = 1.0;       // q^n
    for (int n = 0; n < policy.max_terms; ++n) {
        acc.add(term);
        abs_sum += std::fabs(term);
        const double next = term * (qn * x / bracket);
        qn *= qq;
        bracket += qpow; // [n+2]_q
        qpow *= qq;
        const double r = qn * std::fabs(x) / bracket; // bounds all later ratios
        if (r < 1.0) {
            const double tail = std::fabs(next) / (1.0 - r);
            if (tail < policy.abs_tol) {
                return {{acc.value(), n + 1, tail}, abs_sum};
            }
        }
        term = next;
    }
    throw truncation_error("E_q: max_terms reached before the tail bound met abs_tol");
}

LiteralSeriesResult gauss_kernel_series(const QParam& q, double x,
                                        const TruncationPolicy& policy) {
    policy.validate();
    const double qq = q.value();
    const double q2 = qq * qq;
    const double x2 = x * x;
    KahanAccumulator acc;
    double abs_sum = 0.0;
    double term = 1.0;      // (-1)^n q^{n(n+1)} x^{2n} / ((1+q)^n [n]_{q^2}!)
    double bracket2 = 1.0;  // [n+1]_{q^2}
    double q2pow = q2;      // q^{2(n+1)}
    for (int n = 0; n < policy.max_terms; ++n) {
        acc.add(term);
        abs_sum += std::fabs(term);
        const double next = -term * (q2pow * x2 / ((1.0 + qq) * bracket2));
        bracket2 += q2pow; // [n+2]_{q^2}
        q2pow *= q2;
        const double r = q2pow * x2 / ((1.0 + qq) * bracket2);
        if (r < 1.0) {
            const double tail = std::fabs(next) / (1.0 - r);
            if (tail < policy.abs_tol) {
                return {{acc.value(), n + 1, tail}, abs_sum};
            }
        }
        term = next;
    }
    throw truncation_error("gauss_kernel: max_terms reached before the tail bound met abs_tol");
}

SeriesEvalReport E_q_product(const QParam& q, double x) {
    const double qq = q.value();
    double factor = (1.0 - qq) * x;
    double prod = 1.0;
    int k = 0;
    // Remaining log-product is bounded by |factor|/(1-q).
    const double cut = 0.5e-15 * (1.0 - qq);
    while (std::fabs(factor) > cut) {
        prod *= 1.0 + factor;
        factor *= qq;
        if (++k > kMaxProductFactors) {
            throw truncation_error("E_q product: factor cap exceeded (q too close to 1)");
        }
    }
    const double tail = std::fabs(prod) * 4e-16 + 1e-300;
    return {prod, k, tail};
}

SeriesEvalReport gauss_kernel_product(const QParam& q, double x) {
    const double qq = q.value();
    double factor = (1.0 - qq) * qq * qq * x * x;
    double prod = 1.0;
    int k = 0;
    const double cut = 0.5e-15 * (1.0 - qq * qq);
    while (std::fabs(factor) > cut) {
        prod *= 1.0 - factor;
        factor *= qq * qq;
        if (++k > kMaxProductFactors) {
            throw truncation_error("gauss_kernel product: factor cap exceeded");
        }
    }
    const double tail = std::fabs(prod) * 4e-16 + 1e-300;
    return {prod, k, tail};
}

} // namespace detail

SeriesEvalReport e_q(const QParam& q, double x, const TruncationPolicy& policy) {
    auto lit = detail::e_q_series(q, x, policy);
    if (detail::cancellation_ok(lit.abs_term_sum, detail::noise_budget(lit.report.value))) {
        return lit.report;
    }
    // Alternating cancellation exceeded the certificate (large negative x):
    // use e_q^x = 1 / E_q^{-x} with the well-conditioned product form.
    auto prod = detail::E_q_product(q, -x);
    const double value = 1.0 / prod.value;
    return {value, prod.terms_used, std::fabs(value) * 4e-16 + 1e-300};
}

SeriesEvalReport E_q(const QParam& q, double x, const TruncationPolicy& policy) {
    auto lit = detail::E_q_series(q, x, policy);
    if (detail::cancellation_ok(lit.abs_term_sum, detail::noise_budget(lit.report.value))) {
        return lit.report;
    }
    return detail::E_q_product(q, x);
}

SeriesEvalReport gauss_kernel_report(const QParam& q, double x,
                                     const TruncationPolicy& policy) {
    auto lit = detail::gauss_kernel_series(q, x, policy);
    if (detail::cancellation_ok(lit.abs_term_sum, detail::noise_budget(lit.report.value))) {
        return lit.report;
    }
    return detail::gauss_kernel_product(q, x);
}

double gauss_kernel(const QParam& q, double x, const TruncationPolicy& policy) {
    return gauss_kernel_report(q, x, policy).value;
}

} // namespace qgauss
