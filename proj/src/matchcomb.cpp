#include "qgauss/matchcomb.hpp"

#include <algorithm>

namespace qgauss {

QPolynomial::QPolynomial(std::vector<std::uint64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
    normalize();
}

QPolynomial QPolynomial::monomial(int exponent, std::uint64_t coefficient) {
    QPolynomial p;
    p.add_monomial(exponent, coefficient);
    return p;
}

QPolynomial QPolynomial::bracket(int n) {
    if (n < 0) throw domain_error("QPolynomial::bracket: n must be nonnegative");
    QPolynomial p;
    p.coeffs_.assign(static_cast<std::size_t>(n), 1);
    return p;
}

void QPolynomial::add_monomial(int exponent, std::uint64_t coefficient) {
    if (exponent < 0) throw domain_error("QPolynomial: exponents must be nonnegative");
    if (coefficient == 0) return;
    if (coeffs_.size() <= static_cast<std::size_t>(exponent)) {
        coeffs_.resize(static_cast<std::size_t>(exponent) + 1, 0);
    }
    coeffs_[static_cast<std::size_t>(exponent)] += coefficient;
}

std::uint64_t QPolynomial::coefficient(int power) const {
    if (power < 0 || static_cast<std::size_t>(power) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

std::uint64_t QPolynomial::coefficient_sum() const {
    std::uint64_t s = 0;
    for (auto c : coeffs_) s += c;
    return s;
}

double QPolynomial::evaluate(double q) const {
    double v = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        v = v * q + static_cast<double>(*it);
    }
    return v;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) {
    lhs += rhs;
    return lhs;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    QPolynomial out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    out.normalize();
    return out;
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool is_canonical_matching(const Matching& m, int n) {
    if (n < 0 || n % 2 != 0) return false;
    if (m.pairs.size() != static_cast<std::size_t>(n / 2)) return false;
    std::uint32_t seen = 0;
    int prev_a = 0;
    for (const auto& [a, b] : m.pairs) {
        if (a < 1 || b > n || a >= b) return false;
        if (a <= prev_a) return false;
        prev_a = a;
        const std::uint32_t bits = (1u << (a - 1)) | (1u << (b - 1));
        if (seen & bits) return false;
        seen |= bits;
    }
    return n == 0 || seen == (n >= 32 ? ~0u : (1u << n) - 1);
}

namespace {

constexpr int kMaxGroundSet = 16;

void enumerate_rec(std::vector<int>& free_elems, Matching& current,
                   const std::function<void(const Matching&)>& visit) {
    if (free_elems.empty()) {
        visit(current);
        return;
    }
    // Pairing the smallest free element with every larger free element emits
    // matchings already in canonical a_1 < a_2 < ... order.
    const int a = free_elems.front();
    for (std::size_t i = 1; i < free_elems.size(); ++i) {
        const int b = free_elems[i];
        std::vector<int> rest;
        rest.reserve(free_elems.size() - 2);
        for (std::size_t j = 1; j < free_elems.size(); ++j) {
            if (j != i) rest.push_back(free_elems[j]);
        }
        current.pairs.emplace_back(a, b);
        enumerate_rec(rest, current, visit);
        current.pairs.pop_back();
    }
}

} // namespace

void for_each_matching(int n, const std::function<void(const Matching&)>& visit) {
    if (n < 0) throw domain_error("for_each_matching: n must be nonnegative");
    if (n > kMaxGroundSet) {
        throw domain_error("for_each_matching: ground sets beyond 16 elements are not enumerable here");
    }
    if (n % 2 != 0) return; // odd ground sets admit no perfect matching
    Matching current;
    current.pairs.reserve(static_cast<std::size_t>(n / 2));
    std::vector<int> free_elems(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) free_elems[static_cast<std::size_t>(i)] = i + 1;
    if (n == 0) {
        visit(current); // the empty matching
        return;
    }
    enumerate_rec(free_elems, current, visit);
}

std::vector<Matching> enumerate_matchings(int n) {
    std::vector<Matching> out;
    for_each_matching(n, [&](const Matching& m) { out.push_back(m); });
    return out;
}

int weight_exponent(const Matching& m) {
    const int n = 2 * static_cast<int>(m.pairs.size());
    if (!is_canonical_matching(m, n)) {
        throw domain_error("weight_exponent: matching is not in canonical form");
    }
    std::uint32_t earlier_rights = 0;
    int exponent = 0;
    for (const auto& [a, b] : m.pairs) {
        for (int j = a + 1; j < b; ++j) {
            if (!(earlier_rights & (1u << (j - 1)))) ++exponent;
        }
        earlier_rights |= 1u << (b - 1);
    }
    return exponent;
}

QPolynomial weight(const Matching& m) {
    return QPolynomial::monomial(weight_exponent(m));
}

QPolynomial weighted_count(int n) {
    QPolynomial total;
    for_each_matching(n, [&](const Matching& m) { total.add_monomial(weight_exponent(m)); });
    return total;
}

} // namespace qgauss
