#pragma once

#include <cmath>

// Internal numerics helpers shared by the series and integration engines.

namespace qgauss::detail {

// Compensated (Kahan) accumulator; keeps summation error at O(eps * |sum|)
// independent of term count.
class KahanAccumulator {
public:
    void add(double term) noexcept {
        const double y = term - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const noexcept { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline constexpr double kDoubleEps = 0x1p-52;
inline constexpr double kQuadEps = 0x1p-112;

// Cancellation-noise budget for alternating series evaluated in double: the
// roundoff floor is O(eps * sum|term|); results are certified only when that
// floor sits an order of magnitude under the tightest downstream contract
// (1e-10 agreements), i.e. below 1e-11 absolute.
inline constexpr double kCancellationBudget = 1e-11;

inline double cancellation_noise(double abs_term_sum, double eps) noexcept {
    return 16.0 * eps * abs_term_sum;
}

} // namespace qgauss::detail
