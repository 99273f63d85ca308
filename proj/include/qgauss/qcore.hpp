#pragma once

#include <functional>

#include "qgauss/errors.hpp"

namespace qgauss {

/// Deformation parameter q, restricted to [0, 1). Construction validates the
/// range; q = 1 (the classical limit) is approached but never reached.
class QParam {
public:
    explicit QParam(double q);

    double value() const noexcept { return q_; }

    /// Support endpoint nu = (1-q)^{-1/2}; equals 1 at q = 0 and grows
    /// without bound as q -> 1.
    double nu() const noexcept { return nu_; }

private:
    double q_;
    double nu_;
};

/// Stopping contract shared by every infinite-series evaluator: stop once the
/// applicable tail bound drops below abs_tol, or fail after max_terms.
struct TruncationPolicy {
    double abs_tol = 1e-12;
    int max_terms = 100000;

    void validate() const;
};

/// [n]_q = 1 + q + ... + q^{n-1}; 0 for n = 0.
double q_bracket(const QParam& q, int n);

/// [n]_q! = [n]_q [n-1]_q ... [2]_q; 1 for n in {0, 1}.
double q_factorial(const QParam& q, int n);

/// [2n-1]_q!! = [2n-1]_q [2n-3]_q ... [3]_q [1]_q; 1 for n = 0.
/// n is the half-index: the product has n factors.
double q_double_factorial(const QParam& q, int n);

/// (a + b)_q^n = prod_{i=0}^{n-1} (a + q^i b); 1 for n = 0.
double q_pochhammer(double a, double b, const QParam& q, int n);

/// q-difference quotient (f(qx) - f(x)) / ((q-1)x). Requires x != 0; at
/// q = 0 this reduces to (f(x) - f(0)) / x.
double q_derivative(const std::function<double(double)>& f, const QParam& q, double x);

} // namespace qgauss
