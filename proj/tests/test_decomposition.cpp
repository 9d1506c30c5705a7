#include "discnorm/decomposition.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace disc;
using Catch::Matchers::WithinAbs;

namespace {

SequenceD reals(std::initializer_list<double> v) {
  SequenceD x(static_cast<Eigen::Index>(v.size()));
  std::copy(v.begin(), v.end(), x.data());
  return x;
}

}  // namespace

TEST_CASE("discrete Jordan decomposition of (1, -1)", "[decomposition]") {
  SequenceI eta(2);
  eta << 1, -1;
  const auto j = jordan_discrete(eta);
  CHECK(j.alpha == 0.5);
  CHECK(j.r == 1.0);
  CHECK(j.chi2 == reals({-0.5, 0.5, 0.5}));
  CHECK(j.chi1 == reals({0, 0, 1}));
  CHECK((j.chi2 - j.chi1).cwiseAbs().maxCoeff() == 0.5);
  CHECK(reconstruct(j) == eta.cast<double>());
}

TEST_CASE("discrete Jordan centres the walk on the midpoint of its range", "[decomposition]") {
  // Walk 0, -1, 0: centring at the half-width +1/2 would leave a gap of 3/2.
  SequenceI eta(2);
  eta << -1, 1;
  const auto j = jordan_discrete(eta);
  CHECK(j.alpha == -0.5);
  CHECK((j.chi2 - j.chi1).cwiseAbs().maxCoeff() == 0.5);
}

TEST_CASE("discrete Jordan of the zero sequence", "[decomposition]") {
  const auto j = jordan_discrete(SequenceD::Zero(5));
  CHECK(j.alpha == 0.0);
  CHECK(j.r == 0.0);
  CHECK(j.chi1.isZero());
  CHECK(j.chi2.isZero());
  CHECK(jordan_discrete(SequenceD(0)).chi1.size() == 1);
}

TEST_CASE("discrete Jordan roundtrip and bound on random input", "[decomposition][property]") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> len(0, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index n = len(rng);
    const SequenceD eta = testing::random_sequence(rng, n, -5.0, 5.0);
    const auto j = jordan_discrete(eta);
    const double r = discrepancy_naive(eta);
    CHECK_THAT(j.r, WithinAbs(r, 1e-9));
    CHECK(j.chi1(0) == 0.0);
    CHECK(j.chi2(0) == -j.alpha);
    CHECK(is_nondecreasing(j.chi1));
    CHECK(is_nondecreasing(j.chi2));
    if (n == 0) {
      CHECK(reconstruct(j).size() == 0);
      continue;
    }
    CHECK((reconstruct(j) - eta).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK((j.chi2 - j.chi1).cwiseAbs().maxCoeff() <= r / 2.0 + 1e-9);

    const SequenceI k = testing::random_int_sequence(rng, n, -5, 5);
    const auto jk = jordan_discrete(k);
    CHECK(reconstruct(jk) == k.cast<double>());
    CHECK((jk.chi2 - jk.chi1).cwiseAbs().maxCoeff() <= static_cast<double>(discrepancy_naive(k)) / 2.0);
  }
}

TEST_CASE("nondecreasing parts with a bounded gap certify the discrepancy", "[decomposition][property]") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index n = 1 + trial % 30;
    const SequenceD eta = testing::random_sequence(rng, n, -3.0, 3.0);
    auto j = jordan_discrete(eta);
    // Adding the same nondecreasing sequence to both parts keeps eta.
    SequenceD bump = testing::random_sequence(rng, n + 1, 0.0, 1.0);
    for (Eigen::Index i = 1; i <= n; ++i) bump(i) += bump(i - 1);
    j.chi1 += bump;
    j.chi2 += bump;
    CHECK((reconstruct(j) - eta).cwiseAbs().maxCoeff() <= 1e-9);
    const double bound = certified_discrepancy_bound(j.chi1, j.chi2);
    CHECK(discrepancy_naive(eta) <= bound + 1e-9);
    CHECK_THAT(bound, WithinAbs(discrepancy_naive(eta), 1e-9));
  }
  SequenceD down(2);
  down << 1.0, 0.0;
  CHECK_THROWS_AS(certified_discrepancy_bound(down, SequenceD::Zero(2)), DomainError);
}

TEST_CASE("continuous Jordan decomposition of zero", "[decomposition]") {
  const Signal f(0.0, 0.1, SequenceD::Zero(10));
  const auto j = jordan_continuous(f);
  CHECK(j.r == 0.0);
  CHECK(j.h1.isZero());
  CHECK(j.h2.isZero());
  CHECK_THROWS_AS(jordan_continuous(Signal(0.0, 1.0, SequenceD::Ones(1))), DomainError);
}

TEST_CASE("continuous Jordan decomposition of a sine", "[decomposition]") {
  const Signal f = testing::sine(10000);
  const auto j = jordan_continuous(f);
  CHECK_THAT(j.r, WithinAbs(2.0, 1e-2));
  CHECK((j.h2 - j.h1).cwiseAbs().maxCoeff() <= 1.0 + 1e-2);
  CHECK((j.h2 - j.h1).cwiseAbs().maxCoeff() <= j.r / 2.0 + 1e-9);
  CHECK(is_nondecreasing(j.h1));
  CHECK(is_nondecreasing(j.h2));
  CHECK(derivative_residual(j, f) <= 1e-9);
  // Half-mass point of whichever lobe is picked as the maximizing window.
  CHECK((std::abs(j.c_star - M_PI / 2.0) < 1e-2 || std::abs(j.c_star - 1.5 * M_PI) < 1e-2));
}

TEST_CASE("continuous Jordan of a nonnegative signal", "[decomposition]") {
  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 50; ++trial) {
    const Signal f(0.0, 0.05, testing::random_sequence(rng, 20 + trial, 0.0, 2.0));
    const auto j = jordan_continuous(f);
    const SequenceD F = cumulative_integral(f);
    CHECK(j.h1.isZero());
    CHECK_THAT(j.r, WithinAbs(F(F.size() - 1), 1e-9));
    // h2 is the cumulative integral shifted to vanish at c*.
    const SequenceD shift = (j.h2 - F).array() - (j.h2(0) - F(0));
    CHECK(shift.cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("continuous Jordan bound on random signals", "[decomposition][property]") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    const Signal f = testing::random_piecewise_linear(rng, 300, 7, 0.02, 2.0);
    const auto j = jordan_continuous(f);
    const double C = f.samples().cwiseAbs().maxCoeff();
    CHECK_THAT(j.r, WithinAbs(integral_discrepancy(f), 1e-12));
    CHECK((j.h2 - j.h1).cwiseAbs().maxCoeff() <= j.r / 2.0 + C * f.dt());
    CHECK(is_nondecreasing(j.h1));
    CHECK(is_nondecreasing(j.h2));
    CHECK(derivative_residual(j, f) <= 1e-9);
    CHECK(j.a_star <= j.c_star);
    CHECK(j.c_star <= j.b_star);
  }
}

TEST_CASE("periodic functions have period-independent discrepancy", "[decomposition][property]") {
  for (int periods = 1; periods <= 5; ++periods) {
    const Signal f = testing::sine(10000 * periods, periods);
    CHECK_THAT(jordan_continuous(f).r, WithinAbs(2.0, 1e-2));
    CHECK_THAT(range_function(f).r, WithinAbs(2.0, 1e-2));
  }
}

TEST_CASE("range function", "[decomposition]") {
  const auto zero = range_function(Signal(0.0, 1.0, SequenceD::Zero(4)));
  CHECK(zero.g.isZero());
  CHECK(zero.r == 0.0);

  const auto s = range_function(testing::sine(10000));
  CHECK_THAT(s.g.maxCoeff(), WithinAbs(2.0, 1e-2));
  CHECK(s.g.minCoeff() == 0.0);

  std::mt19937_64 rng(92);
  for (int trial = 0; trial < 100; ++trial) {
    const Signal f(0.0, 0.1, testing::random_sequence(rng, 2 + trial, -1.0, 1.0));
    const auto g = range_function(f);
    CHECK(g.g.minCoeff() == 0.0);
    CHECK(g.g.maxCoeff() - g.g.minCoeff() == integral_discrepancy(f));
    CHECK((g.gamma.array() - g.c).matrix() == g.g);
  }
  CHECK_THROWS_AS(range_function(Signal(0.0, 1.0, SequenceD::Ones(1))), DomainError);
}
