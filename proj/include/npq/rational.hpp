#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace npq {

// Arbitrary-precision integers and rationals. Rationals are kept in
// canonical form at all times: lowest terms, denominator > 0. GMP keeps
// arithmetic results canonical as long as the operands are, so the only
// places that need care are construction and parsing.
using BigInt = mpz_class;
using BigRational = mpq_class;

/// Rational num/den in canonical form. Throws std::invalid_argument on den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

inline BigRational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}
inline BigRational make_rational(const BigInt& n) { return BigRational(n); }
inline BigRational make_rational(long n) { return BigRational(n); }

/// "num/den" when den != 1, plain "num" otherwise (GMP convention).
std::string to_string(const BigRational& r);
std::string to_string(const BigInt& n);

/// Accepts "num" or "num/den" with optional sign; canonicalizes.
/// Throws std::invalid_argument on malformed input or zero denominator.
BigRational parse_rational(std::string_view text);

BigInt factorial(unsigned long n);

/// Binomial coefficient C(n, k); zero for k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// (2k-1)!! = 1*3*...*(2k-1); the empty product 1 for k = 0.
/// Equals the (2k)-th moment of a standard Gaussian.
BigInt double_factorial_odd(unsigned long k);

/// r^e for e >= 0 (exact).
BigRational pow_rational(const BigRational& r, unsigned long e);

}  // namespace npq
