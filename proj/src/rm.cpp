#include "npq/rm.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace npq {

namespace {

// (2|[p]|-1)!! / (-2)^{|[p]|} / [p]!
BigRational partition_coefficient(const Partition& p) {
    const MultiplicityVector mult(p);
    const int len = mult.length();
    BigInt denom = mult.factorial();
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), static_cast<mp_bitcnt_t>(len));
    BigRational c = make_rational(double_factorial_odd(static_cast<unsigned long>(len)), denom);
    if (len % 2 != 0) c = -c;
    return c;
}

// 1 / ((-2)^m m!)
BigRational moment_scale(int m) {
    BigInt denom = factorial(static_cast<unsigned long>(m));
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), static_cast<mp_bitcnt_t>(m));
    BigRational s = make_rational(1, denom);
    return m % 2 == 0 ? s : BigRational(-s);
}

class BoxMullerGaussian {
public:
    explicit BoxMullerGaussian(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = ((engine_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = (engine_() >> 11) * 0x1.0p-53;        // [0, 1only)
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

BigRational rm_direct(int m, const MuVector& mu) {
    if (m < 0) throw std::invalid_argument("rm_direct: m must be >= 0");
    if (mu.empty()) throw std::invalid_argument("weight vector must be non-empty");
    BigRational acc(0);
    for (const Partition& p : enumerate_partitions(m))
        acc += partition_coefficient(p) * elementary_symmetric(p, mu);
    return acc;
}

BigRational rm_exact_moment(int m, const MuVector& mu) {
    if (m < 0) throw std::invalid_argument("rm_exact_moment: m must be >= 0");
    if (mu.empty()) throw std::invalid_argument("weight vector must be non-empty");
    const BigInt m_factorial = factorial(static_cast<unsigned long>(m));
    BigRational sum(0);
    for (const Partition& q : enumerate_partitions(m)) {
        BigInt gaussian_moment = 1;  // prod_i (2 q_i - 1)!!
        for (int part : q.parts())
            gaussian_moment *= double_factorial_odd(static_cast<unsigned long>(part));
        const BigRational multinomial = make_rational(m_factorial, factorial_product(q));
        sum += multinomial * BigRational(gaussian_moment) * monomial_symmetric(q, mu);
    }
    return moment_scale(m) * sum;
}

McEstimate rm_monte_carlo(int m, const MuVector& mu, std::uint64_t samples, std::uint64_t seed) {
    if (m < 0) throw std::invalid_argument("rm_monte_carlo: m must be >= 0");
    if (mu.empty()) throw std::invalid_argument("weight vector must be non-empty");
    if (samples < 2) throw std::invalid_argument("rm_monte_carlo: need at least 2 samples");

    std::vector<double> weights;
    weights.reserve(mu.size());
    for (const BigRational& w : mu) weights.push_back(w.get_d());
    const double scale = moment_scale(m).get_d();

    BoxMullerGaussian gaussian(seed);
    double mean = 0.0, m2 = 0.0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        double quad = 0.0;
        for (double w : weights) {
            const double z = gaussian.next();
            quad += z * z * w;
        }
        double value = scale;
        for (int e = 0; e < m; ++e) value *= quad;
        const double delta = value - mean;
        mean += delta / static_cast<double>(s + 1);
        m2 += delta * (value - mean);
    }
    const double n = static_cast<double>(samples);
    return {mean, std::sqrt(m2 / (n - 1.0) / n)};
}

RmResult rm_report(int m, const MuVector& mu, std::optional<McOptions> mc) {
    RmResult result;
    result.m = m;
    result.mu = mu;
    result.direct_value = rm_direct(m, mu);
    result.moment_value = rm_exact_moment(m, mu);
    if (result.direct_value != result.moment_value)
        throw std::logic_error("rm_report: exact computation routes disagree");

    result.abs_value = abs(result.direct_value);
    BigRational bound(0);
    for (const Partition& p : enumerate_partitions(m))
        bound += abs(partition_coefficient(p)) * abs(elementary_symmetric(p, mu));
    result.triangle_bound = bound;

    if (mc) {
        const McEstimate estimate = rm_monte_carlo(m, mu, mc->samples, mc->seed);
        result.mc_estimate = estimate.estimate;
        result.mc_stderr = estimate.std_error;
        result.seed = mc->seed;
        result.samples = mc->samples;
    }
    return result;
}

}  // namespace npq
