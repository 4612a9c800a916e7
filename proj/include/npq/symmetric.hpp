#pragma once

#include <vector>

#include "npq/identities.hpp"
#include "npq/matrix_count.hpp"
#include "npq/partition.hpp"
#include "npq/rational.hpp"

namespace npq {

/// Finite list of exact rational weights mu_1,...,mu_k (k >= 1); entries
/// may repeat, be zero, or be negative.
using MuVector = std::vector<BigRational>;

/// e_r(mu) for r = 0..r_max via one multiplicative pass per weight.
std::vector<BigRational> elementary_symmetric_row(const MuVector& mu, int r_max);

/// e_p(mu) = product over parts of e_{p_i}(mu); 1 for the empty partition,
/// 0 as soon as any part exceeds the number of weights.
BigRational elementary_symmetric(const Partition& p, const MuVector& mu);

/// m_q(mu): sum of all distinct monomials whose exponent multiset is q;
/// 0 when q has more parts than there are weights.
BigRational monomial_symmetric(const Partition& q, const MuVector& mu);

/// For each p |- m, checks e_p(mu) == sum over q |- m of N(p,q) m_q(mu)
/// exactly. One report per p.
std::vector<IdentityReport> verify_e_to_m_expansion(int m, const MuVector& mu,
                                                    const CountTable& table);

}  // namespace npq
