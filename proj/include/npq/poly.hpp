#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "npq/partition.hpp"
#include "npq/rational.hpp"

namespace npq {

/**
 * Dense univariate polynomial with exact rational coefficients,
 * coefficients_[i] = coefficient of x^i. Trailing zeros are trimmed;
 * the zero polynomial has an empty coefficient list and no degree.
 */
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRational> coefficients);

    static UniPoly constant(const BigRational& c);
    static UniPoly monomial(int power, const BigRational& c = BigRational(1));

    bool is_zero() const { return coefficients_.empty(); }
    std::optional<int> degree() const;

    /// Coefficient of x^i (zero beyond the degree).
    BigRational coefficient(int i) const;
    const std::vector<BigRational>& coefficients() const { return coefficients_; }

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator*(const UniPoly& other) const;
    UniPoly scaled(const BigRational& factor) const;

    BigRational evaluate(const BigRational& x) const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Ascending coefficient array, e.g. "[0, -1/2, 1/2]"; "[]" for zero.
    std::string to_string() const;

private:
    void trim();
    std::vector<BigRational> coefficients_;
};

/**
 * Sparse bivariate polynomial: (x-power, y-power) -> coefficient.
 * Zero coefficients are never stored.
 */
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, BigRational>& terms() const { return terms_; }
    BigRational coefficient(int i, int j) const;

    void add_term(int i, int j, const BigRational& c);

    BiPoly operator+(const BiPoly& other) const;
    BiPoly operator-(const BiPoly& other) const;
    BiPoly operator*(const BiPoly& other) const;
    BiPoly scaled(const BigRational& factor) const;

    BigRational evaluate(const BigRational& x, const BigRational& y) const;

    /// a(x) * b(y) as a bivariate polynomial.
    static BiPoly separable(const UniPoly& in_x, const UniPoly& in_y);

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    /// "{x^1 y^1: -1/2, x^2 y^2: 1/2}" in key order; "{}" for zero.
    std::string to_string() const;

private:
    std::map<Key, BigRational> terms_;
};

/// x(x-1)...(x-k+1); the constant 1 for k = 0.
UniPoly falling_factorial_poly(int k);

/// Product of the falling factorials of the parts of q; degree = weight of q.
UniPoly falling_factorial_partition_poly(const Partition& q);

/// Generalized multinomial coefficient (x choose [p]) = x^(falling |[p]|) / [p]!.
UniPoly generalized_multinomial_poly(const Partition& p);

/// Signed Stirling numbers of the first kind: s(m,i) for i = 0..m, read off
/// as the coefficients of the expanded falling factorial of degree m.
std::vector<BigRational> stirling_first(int m);

/// Stirling numbers of the second kind: S(m,l) for l = 1..m, computed by
/// converting the monomial x^m into the falling-factorial basis.
std::vector<BigInt> stirling_second(int m);

/// Substitute t = x*y: maps sum a_i t^i to sum a_i x^i y^i.
BiPoly compose_xy(const UniPoly& in_t);

}  // namespace npq
