#pragma once

#include <string>
#include <vector>

#include "npq/matrix_count.hpp"
#include "npq/partition.hpp"
#include "npq/poly.hpp"

namespace npq {

/**
 * Outcome of one exact identity check. pass is true exactly when the
 * serialized lhs and rhs describe identical exact objects; failures are
 * reported, never thrown, so a sweep always completes.
 */
struct IdentityReport {
    std::string identity_id;
    int m = 0;
    std::string witness;
    std::string lhs;
    std::string rhs;
    bool pass = false;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Left side of the univariate margin identity for one column partition:
/// sum over p |- m of x^(falling |[p]|) / [p]! * N(p,q).
/// Throws std::out_of_range if the table lacks a needed entry.
UniPoly prop1_first_lhs(const Partition& q, const CountTable& table);

/// Left side of the bivariate margin identity:
/// sum over p,q |- m of (x^(falling |[p]|)/[p]!) (y^(falling |[q]|)/[q]!) N(p,q).
BiPoly prop1_second_lhs(int m, const CountTable& table);

/// For every q |- m, checks prop1_first_lhs(q) == x^(falling q) / q!
/// coefficient-wise. One report per q.
std::vector<IdentityReport> verify_prop1_first(int m, const CountTable& table);

/// Checks prop1_second_lhs(m) == compose_xy(t^(falling m) / m!) term-wise.
IdentityReport verify_prop1_second(int m, const CountTable& table);

/// Alternating multinomial sums: per q |- m the single sum equals (-1)^m,
/// and the doubly-summed form equals 1 for m = 1 and 0 for m > 1.
/// Reports: one per q, then one for the double sum.
std::vector<IdentityReport> verify_cor1(int m, const CountTable& table);

/// Stirling-first coefficient identity: for 1 <= i,j <= m the triple sum
/// over (k,l) and partitions with |[p]|=k, |[q]|=l equals 0 off the
/// diagonal and s(m,i)/m! on it; each value is also cross-checked against
/// the x^i y^j coefficient of prop1_second_lhs. Reports in row-major
/// (i,j) order.
std::vector<IdentityReport> verify_cor2(int m, const CountTable& table);

/// With q = (1,...,1) |- m, the inner sums sum over |[p]|=l of N(p,q)/[p]!
/// reproduce the Stirling numbers of the second kind, and
/// sum_l S(m,l) x^(falling l) = x^m. Single aggregated report.
IdentityReport verify_stirling_bridge(int m, const CountTable& table);

}  // namespace npq
