#include "qgauss/qcore.hpp"

#include <cmath>

namespace qgauss {

QParam::QParam(double q) : q_(q) {
    if (!(q >= 0.0 && q < 1.0)) {
        throw domain_error("QParam: q must satisfy 0 <= q < 1");
    }
    nu_ = 1.0 / std::sqrt(1.0 - q_);
}

void TruncationPolicy::validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
        throw domain_error("TruncationPolicy: abs_tol must be positive and finite");
    }
    if (max_terms <= 0) {
        throw domain_error("TruncationPolicy: max_terms must be positive");
    }
}

namespace {

void require_nonneg(int n, const char* what) {
    if (n < 0) {
        throw domain_error(std::string(what) + ": n must be nonnegative");
    }
}

} // namespace

double q_bracket(const QParam& q, int n) {
    require_nonneg(n, "q_bracket");
    const double qq = q.value();
    if (n == 0) return 0.0;
    if (qq == 0.0) return 1.0;
    // Direct summation for small n; the ratio (q^n - 1)/(q - 1) loses digits
    // as q -> 1, so above 64 terms use the expm1/log route instead.
    if (n <= 64) {
        double sum = 0.0;
        double p = 1.0;
        for (int i = 0; i < n; ++i) {
            sum += p;
            p *= qq;
        }
        return sum;
    }
    return -std::expm1(static_cast<double>(n) * std::log(qq)) / (1.0 - qq);
}

double q_factorial(const QParam& q, int n) {
    require_nonneg(n, "q_factorial");
    double prod = 1.0;
    for (int k = 2; k <= n; ++k) {
        prod *= q_bracket(q, k);
    }
    return prod;
}

double q_double_factorial(const QParam& q, int n) {
    require_nonneg(n, "q_double_factorial");
    double prod = 1.0;
    for (int i = 1; i <= n; ++i) {
        prod *= q_bracket(q, 2 * i - 1);
    }
    return prod;
}

double q_pochhammer(double a, double b, const QParam& q, int n) {
    require_nonneg(n, "q_pochhammer");
    const double qq = q.value();
    double prod = 1.0;
    double qi = 1.0;
    for (int i = 0; i < n; ++i) {
        prod *= a + qi * b;
        qi *= qq;
    }
    return prod;
}

double q_derivative(const std::function<double(double)>& f, const QParam& q, double x) {
    if (x == 0.0) {
        throw domain_error("q_derivative: undefined at x = 0");
    }
    const double qq = q.value();
    // At q = 0 this is exactly (f(x) - f(0)) / x.
    return (f(qq * x) - f(x)) / ((qq - 1.0) * x);
}

} // namespace qgauss
