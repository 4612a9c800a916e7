#pragma once

#include <cstdint>
#include <optional>

#include "npq/symmetric.hpp"

namespace npq {

struct McOptions {
    std::uint64_t samples = 0;  // >= 2
    std::uint64_t seed = 0;
};

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/**
 * All computed views of R_m for one (m, mu) input. The two exact fields
 * are always equal; rm_report enforces that. abs_value and triangle_bound
 * are informational: the bound is what the naive termwise triangle
 * inequality gives on the alternating sum, typically far above |R_m|.
 */
struct RmResult {
    int m = 0;
    MuVector mu;
    BigRational direct_value;
    BigRational moment_value;
    BigRational abs_value;
    BigRational triangle_bound;
    std::optional<double> mc_estimate;
    std::optional<double> mc_stderr;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
};

/// The alternating sum over partitions:
/// sum over p |- m of (2|[p]|-1)!! / (-2)^{|[p]|} * e_p(mu) / [p]!; 1 for m = 0.
BigRational rm_direct(int m, const MuVector& mu);

/// The same value through the exact Gaussian-moment formula:
/// 1/((-2)^m m!) * sum over q |- m of m!/q! * prod_i (2 q_i - 1)!! * m_q(mu).
BigRational rm_exact_moment(int m, const MuVector& mu);

/**
 * Monte Carlo estimate of 1/((-2)^m m!) E[(Z_1^2 mu_1 + ... + Z_k^2 mu_k)^m]
 * with i.i.d. standard Gaussians drawn by Box-Muller over mt19937_64:
 * per pair of 64-bit draws u,v, with u1 = ((u>>11)+1)*2^-53 in (0,1] and
 * u2 = (v>>11)*2^-53 in [0,1), the pair sqrt(-2 ln u1)*(cos,sin)(2 pi u2).
 * Identical (seed, samples, mu, m) reproduces bit-identical output.
 * std_error is the sample standard deviation divided by sqrt(samples).
 * Requires samples >= 2.
 */
McEstimate rm_monte_carlo(int m, const MuVector& mu, std::uint64_t samples, std::uint64_t seed);

/// Runs both exact routes (plus Monte Carlo when requested) and bundles
/// them. Throws std::logic_error if the exact routes disagree, which
/// would mean an implementation bug.
RmResult rm_report(int m, const MuVector& mu, std::optional<McOptions> mc = std::nullopt);

}  // namespace npq
