#pragma once

#include <map>
#include <utility>

#include "npq/partition.hpp"
#include "npq/rational.hpp"

namespace npq {

/// Canonical (row-partition, column-partition) key; both sides always
/// carry equal weight.
using CountKey = std::pair<Partition, Partition>;

/**
 * Memo table for N(p,q) values. Entries accumulate as count() recurses,
 * so a table holds keys of several weights at once. A table is confined
 * to one computation at a time; it is not internally synchronized.
 */
using CountTable = std::map<CountKey, BigInt>;

/// Gale-Ryser feasibility: a binary matrix with row sums p and column
/// sums q exists iff the weights agree and q is dominated by conjugate(p).
bool gale_ryser_feasible(const Partition& p, const Partition& q);

/**
 * Exhaustive oracle for N(p,q): enumerates every placement of m ones in
 * the |[p]| x |[q]| grid and keeps those whose row-sum vector is exactly p
 * and column-sum vector exactly q (rows and columns in the fixed sorted
 * order the partitions give). Intended for m <= 6.
 * Throws std::invalid_argument when the weights differ.
 */
BigInt count_bruteforce(const Partition& p, const Partition& q);

/**
 * N(p,q) by column conditioning: remove the largest column and sum over
 * the ways to pick which rows receive a 1 in it, counting choices inside
 * groups of equal row sums by binomial coefficients, then recurse on the
 * reduced margins. Sub-results are memoized in `table` under canonical
 * keys. Throws std::invalid_argument when the weights differ.
 */
BigInt count(const Partition& p, const Partition& q, CountTable& table);

/// Convenience overload with a throwaway memo.
BigInt count(const Partition& p, const Partition& q);

/// N(p,q) for every ordered pair p,q |- m, computed over one triangle and
/// mirrored through N(p,q) = N(q,p). The result holds exactly the weight-m
/// pairs (the internal memo is discarded).
CountTable full_table(int m);

}  // namespace npq
