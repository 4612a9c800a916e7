#include "npq/rational.hpp"

#include <stdexcept>

namespace npq {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const BigRational& r) { return r.get_str(); }

std::string to_string(const BigInt& n) { return n.get_str(); }

BigRational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    const std::string num_s(text.substr(0, slash));
    BigInt num, den = 1;
    if (mpz_set_str(num.get_mpz_t(), num_s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        const std::string den_s(text.substr(slash + 1));
        if (den_s.empty() || mpz_set_str(den.get_mpz_t(), den_s.c_str(), 10) != 0)
            throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

BigInt factorial(unsigned long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

BigInt double_factorial_odd(unsigned long k) {
    BigInt r = 1;
    for (unsigned long j = 1; j <= k; ++j) r *= 2 * j - 1;
    return r;
}

BigRational pow_rational(const BigRational& r, unsigned long e) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), e);
    // r canonical with den > 0 implies num/den is already canonical.
    return BigRational(num, den);
}

}  // namespace npq
