#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qgauss/errors.hpp"

namespace qgauss {

/// Polynomial in q with nonnegative integer coefficients, stored densely by
/// power. The exact arithmetic side of the moment identities lives here;
/// doubles enter only through evaluate().
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<std::uint64_t> coefficients);

    static QPolynomial monomial(int exponent, std::uint64_t coefficient = 1);
    /// 1 + q + ... + q^{n-1} as an exact polynomial.
    static QPolynomial bracket(int n);

    void add_monomial(int exponent, std::uint64_t coefficient = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::uint64_t coefficient(int power) const;
    std::uint64_t coefficient_sum() const;
    const std::vector<std::uint64_t>& coefficients() const noexcept { return coeffs_; }

    double evaluate(double q) const;

    QPolynomial& operator+=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs);
    friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    void normalize();
    std::vector<std::uint64_t> coeffs_; // coeffs_[i] multiplies q^i; no trailing zeros
};

/// Perfect matching of {1,...,2n} in canonical form: pairs (a_i, b_i) with
/// a_i < b_i, listed by increasing a_i, partitioning the ground set.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
};

/// Checks the canonical-form invariants of a matching on {1,...,n}.
bool is_canonical_matching(const Matching& m, int n);

/// Visits every perfect matching of {1,...,n} in canonical form, ordered by
/// the recursion "pair the smallest free element with each larger free
/// element in turn". Visits nothing for odd n. Requires 0 <= n <= 16.
void for_each_matching(int n, const std::function<void(const Matching&)>& visit);

/// All perfect matchings of {1,...,n}; (n-1)!! of them for even n, none for
/// odd n. Requires 0 <= n <= 16.
std::vector<Matching> enumerate_matchings(int n);

/// Crossing-style weight exponent of a canonical matching: for each pair,
/// the number of ground elements strictly inside its span that are not
/// right endpoints of earlier pairs, summed over pairs.
int weight_exponent(const Matching& m);

/// omega(m) = q^{weight_exponent(m)} as an exact monomial.
QPolynomial weight(const Matching& m);

/// q-weighted cardinality |M[n], omega| = sum_m omega(m), an exact
/// polynomial in q. Equals [n-1]_q!! for even n and 0 for odd n.
QPolynomial weighted_count(int n);

} // namespace qgauss
