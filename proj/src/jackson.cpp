#include "qgauss/jackson.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "series_util.hpp"

namespace qgauss {

namespace {

// Running max of the last few |f| samples along one endpoint chain. The
// integrand is a black box, so the geometric tail bound uses these recent
// magnitudes (with a safety factor) in place of a true sup.
class RecentMax {
public:
    void push(double v) noexcept {
        ring_[next_++ % ring_.size()] = v;
        count_ = std::min(count_ + 1, ring_.size());
    }
    double max() const noexcept {
        double m = 0.0;
        for (std::size_t i = 0; i < count_; ++i) m = std::max(m, ring_[i]);
        return m;
    }

private:
    std::array<double, 8> ring_{};
    std::size_t next_ = 0;
    std::size_t count_ = 0;
};

double sample(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
        throw evaluation_error("jackson_integral: integrand is not finite at a sample point");
    }
    return v;
}

} // namespace

double jackson_integral(const std::function<double(double)>& f, const QParam& q,
                        Interval iv, const TruncationPolicy& policy) {
    policy.validate();
    const double qq = q.value();
    if (iv.a == iv.b) return 0.0;
    if (qq == 0.0) {
        const double fb = iv.b != 0.0 ? sample(f, iv.b) : 0.0;
        const double fa = iv.a != 0.0 ? sample(f, iv.a) : 0.0;
        return iv.b * fb - iv.a * fa;
    }

    // Both sample chains converge to 0, so |f(0)| joins the recent-sample max
    // in the tail guard: integrands like the Gaussian kernel are vanishingly
    // small at the early samples yet climb back to f(0) as q^n -> 0, and a
    // purely windowed max would stop the sum far too early. A non-finite
    // f(0) (an integrable endpoint singularity) just drops out of the guard.
    const double f_at_zero = f(0.0);
    const double floor_mag = std::isfinite(f_at_zero) ? std::fabs(f_at_zero) : 0.0;

    detail::KahanAccumulator acc;
    RecentMax max_b, max_a;
    double qn = 1.0;
    int consecutive_small = 0;
    for (int n = 0; n < policy.max_terms; ++n) {
        double fb = 0.0, fa = 0.0;
        if (iv.b != 0.0) {
            fb = sample(f, qn * iv.b);
            max_b.push(std::max(std::fabs(fb), floor_mag));
        }
        if (iv.a != 0.0) {
            fa = sample(f, qn * iv.a);
            max_a.push(std::max(std::fabs(fa), floor_mag));
        }
        const double term = (1.0 - qq) * qn * (iv.b * fb - iv.a * fa);
        acc.add(term);
        qn *= qq;

        consecutive_small = std::fabs(term) < policy.abs_tol ? consecutive_small + 1 : 0;
        const double tail =
            4.0 * qn * (std::fabs(iv.b) * max_b.max() + std::fabs(iv.a) * max_a.max());
        if (consecutive_small >= 3 && tail < policy.abs_tol) {
            return acc.value();
        }
    }
    throw truncation_error("jackson_integral: max_terms reached before the tail bound met abs_tol");
}

double q_measure(const QParam& q, Interval iv) {
    const double a = iv.a;
    const double b = iv.b;
    if (!(a >= 0.0)) {
        throw domain_error("q_measure: intervals with a < 0 are unsupported");
    }
    if (!(a <= b)) {
        throw domain_error("q_measure: requires a <= b");
    }
    const double qq = q.value();
    if (qq == 0.0) return b - a;
    if (a == 0.0) return b;

    // Smallest integer l with q^l b < a. Start from a log estimate a couple
    // of steps low and walk up; the comparison is done on q^l b directly.
    const double lb = std::log(a / b) / std::log(qq);
    long l = std::max(0L, static_cast<long>(std::floor(lb)) - 2);
    double qlb = std::pow(qq, static_cast<double>(l)) * b;
    while (!(qlb < a)) {
        qlb *= qq;
        ++l;
    }
    return (b - a) + qq * a - qlb;
}

} // namespace qgauss
