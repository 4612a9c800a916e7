#include <doctest.h>

#include <vector>

#include "npq/identities.hpp"
#include "npq/matrix_count.hpp"
#include "npq/partition.hpp"
#include "npq/poly.hpp"

using namespace npq;

TEST_CASE("margin identity left side, frozen small cases") {
  // m = 2, q = (2): only p = (1,1) contributes (N((2),(2)) = 0,
  // N((1,1),(2)) = 1), so the sum is (x^2 - x)/2.
  const CountTable table = full_table(2);
  const UniPoly lhs_q2 = prop1_first_lhs(Partition({2}), table);
  CHECK(lhs_q2 ==
        UniPoly({make_rational(0), make_rational(-1, 2), make_rational(1, 2)}));

  // m = 2, q = (1,1): 1 * (x choose [(2)]) + 2 * (x choose [(1,1)]) = x^2.
  const UniPoly lhs_q11 = prop1_first_lhs(Partition({1, 1}), table);
  CHECK(lhs_q11 == UniPoly({make_rational(0), make_rational(0), make_rational(1)}));
}

TEST_CASE("univariate margin identity holds for all q up to weight 8") {
  for (int m = 1; m <= 8; ++m) {
    const CountTable table = full_table(m);
    for (const auto& report : verify_prop1_first(m, table)) {
      CAPTURE(report.witness);
      CHECK(report.pass);
      CHECK(report.m == m);
    }
  }
}

TEST_CASE("the left side never exceeds degree m") {
  for (int m = 1; m <= 6; ++m) {
    const CountTable table = full_table(m);
    for (const auto& q : enumerate_partitions(m)) {
      const UniPoly lhs = prop1_first_lhs(q, table);
      REQUIRE(lhs.degree().has_value());
      CHECK(*lhs.degree() == m);
    }
  }
}

TEST_CASE("bivariate margin identity holds up to weight 8") {
  for (int m = 1; m <= 8; ++m) {
    const CountTable table = full_table(m);
    const IdentityReport report = verify_prop1_second(m, table);
    CAPTURE(report.lhs);
    CHECK(report.pass);
  }
}

TEST_CASE("bivariate left side evaluates consistently with the univariate one") {
  // Summing the univariate identity against y must reproduce the bivariate
  // polynomial at sample points.
  const int m = 4;
  const CountTable table = full_table(m);
  const BiPoly both = prop1_second_lhs(m, table);
  for (int x = -2; x <= 4; ++x) {
    for (int y = -2; y <= 4; ++y) {
      BigRational expect(0);
      for (const auto& q : enumerate_partitions(m)) {
        const BigRational at_x = prop1_first_lhs(q, table).evaluate(make_rational(x));
        const BigRational weight =
            generalized_multinomial_poly(q).evaluate(make_rational(y));
        expect += at_x * weight;
      }
      CHECK(both.evaluate(make_rational(x), make_rational(y)) == expect);
    }
  }
}

TEST_CASE("alternating-sum identity, frozen case and sweep") {
  // m = 2, q = (1,1): (-1)^1 * 1!/1! * 1 + (-1)^2 * 2!/2! * 2 = 1 = (-1)^2.
  const CountTable table2 = full_table(2);
  const auto reports2 = verify_cor1(2, table2);
  for (const auto& r : reports2) CHECK(r.pass);

  for (int m = 1; m <= 8; ++m) {
    const CountTable table = full_table(m);
    for (const auto& report : verify_cor1(m, table)) {
      CAPTURE(report.witness);
      CHECK(report.pass);
    }
  }
}

TEST_CASE("coefficient-matrix identity, frozen case and sweep") {
  // m = 2, i = j = 1 entry equals s(2,1)/2! = -1/2.
  const CountTable table2 = full_table(2);
  bool saw_11 = false;
  for (const auto& r : verify_cor2(2, table2)) {
    CHECK(r.pass);
    if (r.witness == "(i,j)=(1,1)") {
      saw_11 = true;
      CHECK(r.rhs == "-1/2");
    }
  }
  CHECK(saw_11);

  for (int m = 1; m <= 6; ++m) {
    const CountTable table = full_table(m);
    for (const auto& report : verify_cor2(m, table)) {
      CAPTURE(report.witness);
      CHECK(report.pass);
    }
  }
}

TEST_CASE("block-count bridge at the all-ones margin up to weight 8") {
  // Frozen: m = 3 at l = 2 gives 3 (three ways to split {1,2,3} into 2 blocks).
  for (int m = 1; m <= 8; ++m) {
    const CountTable table = full_table(m);
    const IdentityReport report = verify_stirling_bridge(m, table);
    CAPTURE(report.lhs);
    CAPTURE(report.rhs);
    CHECK(report.pass);
  }
}

TEST_CASE("fault injection: a wrong table entry breaks at least one identity") {
  for (int m : {3, 4}) {
    const CountTable clean = full_table(m);
    for (const auto& [key, value] : clean) {
      CountTable broken = clean;
      broken[key] = value + 1;
      bool any_failed = false;
      for (const auto& r : verify_prop1_first(m, broken)) any_failed |= !r.pass;
      any_failed |= !verify_prop1_second(m, broken).pass;
      for (const auto& r : verify_cor1(m, broken)) any_failed |= !r.pass;
      for (const auto& r : verify_cor2(m, broken)) any_failed |= !r.pass;
      CAPTURE(format_partition(key.first));
      CAPTURE(format_partition(key.second));
      CHECK(any_failed);
    }
  }
}

TEST_CASE("reports carry printable exact values") {
  const CountTable table = full_table(2);
  const auto reports = verify_prop1_first(2, table);
  REQUIRE(!reports.empty());
  for (const auto& r : reports) {
    CHECK(r.identity_id == "prop1a");
    CHECK(!r.lhs.empty());
    CHECK(!r.rhs.empty());
    CHECK(!r.witness.empty());
  }
}
