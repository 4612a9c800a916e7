#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "npq/matrix_count.hpp"
#include "npq/partition.hpp"

using namespace npq;

namespace {

// Literal matrix-filling oracle, independent of count_bruteforce's
// combination walk: place m ones into a rows x cols grid one row at a time,
// tracking remaining row and column budgets.
long fill_oracle(const std::vector<int>& rows, std::vector<int>& cols, std::size_t r) {
  if (r == rows.size()) {
    for (int c : cols)
      if (c != 0) return 0;
    return 1;
  }
  // choose which columns receive a one in row r (all size-rows[r] subsets)
  struct Rec {
    const std::vector<int>& rows;
    std::vector<int>& cols;
    std::size_t r;
    long total = 0;
    void go(std::size_t from, int left) {
      if (left == 0) {
        total += fill_oracle(rows, cols, r + 1);
        return;
      }
      if (from >= cols.size() || static_cast<int>(cols.size() - from) < left) return;
      if (cols[from] > 0) {
        --cols[from];
        go(from + 1, left - 1);
        ++cols[from];
      }
      go(from + 1, left);
    }
  } rec{rows, cols, r};
  rec.go(0, rows[r]);
  return rec.total;
}

long count_by_rows(const Partition& p, const Partition& q) {
  std::vector<int> cols = q.parts();
  return fill_oracle(p.parts(), cols, 0);
}

}  // namespace

TEST_CASE("brute force on hand-checkable margins") {
  CHECK(count_bruteforce(Partition({2, 1}), Partition({2, 1})) == 1);
  CHECK(count_bruteforce(Partition({1, 1}), Partition({2})) == 1);
  CHECK(count_bruteforce(Partition({2}), Partition({2})) == 0);
  CHECK(count_bruteforce(Partition({2, 1, 1}), Partition({2, 1, 1})) == 5);
  CHECK(count_bruteforce(Partition({1, 1, 1}), Partition({1, 1, 1})) == 6);
  CHECK(count_bruteforce(Partition({}), Partition({})) == 1);
  CHECK_THROWS_AS(count_bruteforce(Partition({2}), Partition({1})), std::invalid_argument);
}

TEST_CASE("brute force agrees with a literal row-filling oracle") {
  for (int m = 0; m <= 5; ++m) {
    const auto parts = enumerate_partitions(m);
    for (const auto& p : parts)
      for (const auto& q : parts)
        CHECK(count_bruteforce(p, q) == count_by_rows(p, q));
  }
}

TEST_CASE("memoized count equals brute force for all margins up to weight 6") {
  for (int m = 0; m <= 6; ++m) {
    const auto parts = enumerate_partitions(m);
    CountTable memo;
    for (const auto& p : parts)
      for (const auto& q : parts) CHECK(count(p, q, memo) == count_bruteforce(p, q));
  }
}

TEST_CASE("frozen values through the recursion") {
  CHECK(count(Partition({2, 1}), Partition({2, 1})) == 1);
  CHECK(count(Partition({2}), Partition({1, 1})) == 1);
  CHECK(count(Partition({2}), Partition({2})) == 0);
  CHECK(count(Partition({1, 1, 1}), Partition({1, 1, 1})) == 6);
  CHECK(count(Partition({}), Partition({})) == 1);
  CHECK_THROWS_AS(count(Partition({3}), Partition({1})), std::invalid_argument);
}

TEST_CASE("transpose symmetry N(p,q) = N(q,p) up to weight 8") {
  for (int m = 0; m <= 8; ++m) {
    const auto parts = enumerate_partitions(m);
    CountTable memo;
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = a; b < parts.size(); ++b)
        CHECK(count(parts[a], parts[b], memo) == count(parts[b], parts[a], memo));
  }
}

TEST_CASE("feasibility matches positivity of the brute-force count") {
  for (int m = 0; m <= 6; ++m) {
    const auto parts = enumerate_partitions(m);
    for (const auto& p : parts)
      for (const auto& q : parts)
        CHECK(gale_ryser_feasible(p, q) == (count_bruteforce(p, q) > 0));
  }
}

TEST_CASE("full_table holds exactly the weight-m pairs") {
  const CountTable t0 = full_table(0);
  REQUIRE(t0.size() == 1);
  CHECK(t0.at({Partition({}), Partition({})}) == 1);

  const CountTable t1 = full_table(1);
  REQUIRE(t1.size() == 1);
  CHECK(t1.at({Partition({1}), Partition({1})}) == 1);

  const CountTable t2 = full_table(2);
  REQUIRE(t2.size() == 4);
  CHECK(t2.at({Partition({2}), Partition({2})}) == 0);
  CHECK(t2.at({Partition({2}), Partition({1, 1})}) == 1);
  CHECK(t2.at({Partition({1, 1}), Partition({2})}) == 1);
  CHECK(t2.at({Partition({1, 1}), Partition({1, 1})}) == 2);

  for (int m = 3; m <= 6; ++m) {
    const auto parts = enumerate_partitions(m);
    const CountTable table = full_table(m);
    CHECK(table.size() == parts.size() * parts.size());
    for (const auto& [key, value] : table) {
      CHECK(key.first.weight() == m);
      CHECK(key.second.weight() == m);
      CHECK(value == count_bruteforce(key.first, key.second));
    }
  }
}

TEST_CASE("memoization is order independent") {
  const auto parts = enumerate_partitions(6);
  CountTable forward, backward;
  std::map<CountKey, BigInt> forward_values, backward_values;
  for (const auto& p : parts)
    for (const auto& q : parts) forward_values[{p, q}] = count(p, q, forward);
  for (auto p = parts.rbegin(); p != parts.rend(); ++p)
    for (auto q = parts.rbegin(); q != parts.rend(); ++q)
      backward_values[{*p, *q}] = count(*p, *q, backward);
  CHECK(forward_values == backward_values);
}

TEST_CASE("a larger spot value stays exact") {
  // All-ones margins of weight 8: 8x8 permutation matrices.
  const Partition ones({1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(count(ones, ones) == BigInt(40320));  // 8!
}
