#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "npq/rm.hpp"

using namespace npq;

namespace {

MuVector ints(std::initializer_list<int> values) {
  MuVector mu;
  for (int v : values) mu.push_back(make_rational(v));
  return mu;
}

BigRational random_rational(std::mt19937_64& gen) {
  const long num = static_cast<long>(gen() % 19) - 9;
  const long den = 1 + static_cast<long>(gen() % 9);
  return make_rational(BigInt(num), BigInt(den));
}

}  // namespace

TEST_CASE("hand-checked values of the alternating sum") {
  // m = 0: empty sum convention, 1 on both routes.
  CHECK(rm_direct(0, ints({5})) == 1);
  CHECK(rm_exact_moment(0, ints({5})) == 1);

  // m = 1: single partition (1), coefficient 1!!/(-2) = -1/2, e_1 = sum mu.
  CHECK(rm_direct(1, ints({1, 2, 3})) == -3);
  CHECK(rm_exact_moment(1, ints({1, 2, 3})) == -3);

  // m = 2 at mu = (1,1): p=(2) gives (3!!/4)/1 * e_2 = 3/4,
  // p=(1,1) gives (1/4)/2!... coefficient 1!!^... = 1/4 * e_(1,1) = 1/4 * 4 / 2
  // total 3/4 + ... = 1 (worked through both formulas).
  CHECK(rm_direct(2, ints({1, 1})) == 1);
  CHECK(rm_exact_moment(2, ints({1, 1})) == 1);
}

TEST_CASE("the two exact routes agree on random rational inputs") {
  std::mt19937_64 gen(17);
  for (int m = 0; m <= 6; ++m) {
    for (int trial = 0; trial < 30; ++trial) {
      const int width = 1 + static_cast<int>(gen() % 5);
      MuVector mu;
      for (int i = 0; i < width; ++i) mu.push_back(random_rational(gen));
      const BigRational a = rm_direct(m, mu);
      const BigRational b = rm_exact_moment(m, mu);
      CHECK(a == b);
    }
  }
}

TEST_CASE("homogeneity: scaling mu by c scales the value by c^m") {
  std::mt19937_64 gen(19);
  const BigRational c = make_rational(-3, 2);
  for (int m = 0; m <= 5; ++m) {
    MuVector mu;
    for (int i = 0; i < 4; ++i) mu.push_back(random_rational(gen));
    MuVector scaled_mu;
    for (const auto& v : mu) scaled_mu.push_back(BigRational(v * c));
    CHECK(rm_direct(m, scaled_mu) == BigRational(rm_direct(m, mu) * pow_rational(c, m)));
  }
}

TEST_CASE("report bundles consistent fields") {
  const RmResult result = rm_report(3, ints({1, 2}));
  CHECK(result.direct_value == result.moment_value);
  CHECK(result.abs_value == abs(BigRational(result.direct_value)));
  CHECK(result.triangle_bound >= result.abs_value);
  CHECK(!result.mc_estimate.has_value());

  const RmResult with_mc = rm_report(2, ints({1, 1}), McOptions{5000, 99});
  REQUIRE(with_mc.mc_estimate.has_value());
  REQUIRE(with_mc.mc_stderr.has_value());
  CHECK(with_mc.seed == 99);
  CHECK(with_mc.samples == 5000);
  CHECK(*with_mc.mc_stderr > 0.0);
}

TEST_CASE("Monte Carlo is deterministic per seed and varies across seeds") {
  const MuVector mu = ints({1, 2, 3});
  const McEstimate a = rm_monte_carlo(3, mu, 20000, 42);
  const McEstimate b = rm_monte_carlo(3, mu, 20000, 42);
  CHECK(a.estimate == b.estimate);  // bit identical
  CHECK(a.std_error == b.std_error);
  const McEstimate c = rm_monte_carlo(3, mu, 20000, 43);
  CHECK(a.estimate != c.estimate);
  CHECK_THROWS_AS(rm_monte_carlo(2, mu, 1, 1), std::invalid_argument);
}

TEST_CASE("Monte Carlo lands near the exact value") {
  // With 200k samples the estimate should sit within a few standard errors
  // of the exact value; check 4 sigma on a handful of fixed seeds.
  const MuVector mu{make_rational(1), make_rational(1, 2), make_rational(-1, 3)};
  for (int m = 0; m <= 4; ++m) {
    const BigRational exact = rm_direct(m, mu);
    const double target = exact.get_d();
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const McEstimate mc = rm_monte_carlo(m, mu, 200000, seed);
      const double tolerance = 4.0 * mc.std_error + 1e-12;
      if (std::abs(mc.estimate - target) <= tolerance) ++hits;
    }
    CHECK(hits >= 9);
  }
}
