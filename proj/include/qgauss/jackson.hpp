#pragma once

#include <functional>

#include "qgauss/qcore.hpp"

namespace qgauss {

/// Integration limits [a, b]. No ordering is required at construction;
/// reversed limits negate the Jackson integral. q_measure additionally
/// requires 0 <= a <= b.
struct Interval {
    double a = 0.0;
    double b = 0.0;
};

/// Jackson q-integral of f on [a, b]:
///   (1-q) sum_{n>=0} q^n (b f(q^n b) - a f(q^n a)).
/// For q = 0 the series collapses to b f(b) - a f(a). f must be finite on
/// the sample chains {q^n a} and {q^n b}; it is also sampled once at 0 (the
/// accumulation point of both chains) to anchor the tail bound.
double jackson_integral(const std::function<double(double)>& f, const QParam& q,
                        Interval iv, const TruncationPolicy& policy = {});

/// Jackson q-measure of [a, b] with 0 <= a <= b:
///   m_q[a,b] = (b - a) + q a - q^l b,
/// l the smallest integer with q^l b < a. For a = 0 the measure is b; for
/// q = 0 it is b - a. Intervals with a < 0 are unsupported.
double q_measure(const QParam& q, Interval iv);

} // namespace qgauss
