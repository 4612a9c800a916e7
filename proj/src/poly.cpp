#include "npq/poly.hpp"

#include <stdexcept>

namespace npq {

UniPoly::UniPoly(std::vector<BigRational> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

void UniPoly::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

UniPoly UniPoly::constant(const BigRational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(int power, const BigRational& c) {
    if (power < 0) throw std::invalid_argument("monomial power must be >= 0");
    std::vector<BigRational> coeffs(static_cast<std::size_t>(power) + 1, BigRational(0));
    coeffs.back() = c;
    return UniPoly(std::move(coeffs));
}

std::optional<int> UniPoly::degree() const {
    if (coefficients_.empty()) return std::nullopt;
    return static_cast<int>(coefficients_.size()) - 1;
}

BigRational UniPoly::coefficient(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coefficients_.size()) return BigRational(0);
    return coefficients_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    std::vector<BigRational> out(std::max(coefficients_.size(), other.coefficients_.size()),
                                 BigRational(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) out[i] += other.coefficients_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
    return *this + other.scaled(BigRational(-1));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<BigRational> out(coefficients_.size() + other.coefficients_.size() - 1,
                                 BigRational(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            out[i + j] += coefficients_[i] * other.coefficients_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const BigRational& factor) const {
    std::vector<BigRational> out;
    out.reserve(coefficients_.size());
    for (const auto& c : coefficients_) out.emplace_back(c * factor);
    return UniPoly(std::move(out));
}

BigRational UniPoly::evaluate(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string UniPoly::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (i) s += ", ";
        s += coefficients_[i].get_str();
    }
    s += ']';
    return s;
}

BigRational BiPoly::coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigRational(0) : it->second;
}

void BiPoly::add_term(int i, int j, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator+(const BiPoly& other) const {
    BiPoly out = *this;
    for (const auto& [key, c] : other.terms_) out.add_term(key.first, key.second, c);
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& other) const {
    return *this + other.scaled(BigRational(-1));
}

BiPoly BiPoly::operator*(const BiPoly& other) const {
    BiPoly out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : other.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BiPoly BiPoly::scaled(const BigRational& factor) const {
    BiPoly out;
    if (factor == 0) return out;
    for (const auto& [key, c] : terms_) out.terms_[key] = c * factor;
    return out;
}

BigRational BiPoly::evaluate(const BigRational& x, const BigRational& y) const {
    BigRational acc(0);
    for (const auto& [key, c] : terms_)
        acc += c * pow_rational(x, static_cast<unsigned long>(key.first)) *
               pow_rational(y, static_cast<unsigned long>(key.second));
    return acc;
}

BiPoly BiPoly::separable(const UniPoly& in_x, const UniPoly& in_y) {
    BiPoly out;
    const auto& a = in_x.coefficients();
    const auto& b = in_y.coefficients();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out.add_term(static_cast<int>(i), static_cast<int>(j), a[i] * b[j]);
    return out;
}

std::string BiPoly::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) s += ", ";
        first = false;
        s += "x^" + std::to_string(key.first) + " y^" + std::to_string(key.second) + ": " +
             c.get_str();
    }
    s += '}';
    return s;
}

UniPoly falling_factorial_poly(int k) {
    if (k < 0) throw std::invalid_argument("falling_factorial_poly: k must be >= 0");
    UniPoly acc = UniPoly::constant(BigRational(1));
    for (int j = 0; j < k; ++j)
        acc = acc * UniPoly({BigRational(-j), BigRational(1)});  // (x - j)
    return acc;
}

UniPoly falling_factorial_partition_poly(const Partition& q) {
    UniPoly acc = UniPoly::constant(BigRational(1));
    for (int part : q.parts()) acc = acc * falling_factorial_poly(part);
    return acc;
}

UniPoly generalized_multinomial_poly(const Partition& p) {
    const MultiplicityVector mult(p);
    return falling_factorial_poly(mult.length())
        .scaled(make_rational(1, mult.factorial()));
}

std::vector<BigRational> stirling_first(int m) {
    if (m < 0) throw std::invalid_argument("stirling_first: m must be >= 0");
    const UniPoly ff = falling_factorial_poly(m);
    std::vector<BigRational> row(static_cast<std::size_t>(m) + 1, BigRational(0));
    for (int i = 0; i <= m; ++i) row[static_cast<std::size_t>(i)] = ff.coefficient(i);
    return row;
}

std::vector<BigInt> stirling_second(int m) {
    if (m < 1) throw std::invalid_argument("stirling_second: m must be >= 1");
    // Back-substitution against the defining relation
    // sum_l S(m,l) x^(falling l) = x^m; each x^(falling l) is monic of degree l.
    std::vector<BigInt> row(static_cast<std::size_t>(m), BigInt(0));
    UniPoly remainder = UniPoly::monomial(m);
    for (int l = m; l >= 1; --l) {
        const BigRational lead = remainder.coefficient(l);
        if (lead != 0) {
            if (lead.get_den() != 1)
                throw std::logic_error("stirling_second: non-integer connection coefficient");
            row[static_cast<std::size_t>(l) - 1] = lead.get_num();
            remainder = remainder - falling_factorial_poly(l).scaled(lead);
        }
    }
    if (!remainder.is_zero())
        throw std::logic_error("stirling_second: basis conversion left a remainder");
    return row;
}

BiPoly compose_xy(const UniPoly& in_t) {
    BiPoly out;
    const auto& coeffs = in_t.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.add_term(static_cast<int>(i), static_cast<int>(i), coeffs[i]);
    return out;
}

}  // namespace npq
