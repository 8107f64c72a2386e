#include <gtest/gtest.h>

#include <random>

#include "etlink/error.hpp"
#include "etlink/spectral.hpp"
#include "etlink/transition.hpp"
#include "oracles.hpp"

using namespace etlink;

TEST(Spectral, ExampleMatrices) {
  const auto p = spectral_data(TransitionMatrix::from_dense(oracle::example_p()));
  EXPECT_EQ(p.rho, 1.0);
  const auto a = spectral_data(TransitionMatrix::from_dense(oracle::example_a()));
  EXPECT_NEAR(a.rho, oracle::kPhi, 1e-12);
  double s = 0.0;
  for (double x : a.v) {
    EXPECT_GT(x, 0.0);
    s += x;
  }
  EXPECT_NEAR(s, 1.0, 1e-14);
  EXPECT_LE(a.residual, 1e-12 * a.rho);
}

TEST(Spectral, PeriodicMatrixConverges) {
  // The bare power iteration oscillates on a cycle; the shifted one does not.
  const auto c = spectral_data(TransitionMatrix::from_dense(DenseMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  EXPECT_EQ(c.rho, 1.0);
  for (double x : c.v) EXPECT_NEAR(x, 1.0 / 3, 1e-12);
}

TEST(Spectral, MatchesEigenOnRandomIrreducible) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 15;
    const DenseMatrix m = oracle::random_irreducible(n, 0.3, rng, trial % 2 == 0);
    const auto sd = spectral_data(TransitionMatrix::from_dense(m));
    EXPECT_NEAR(sd.rho, oracle::spectral_radius(m), 1e-9 * std::max(1.0, sd.rho));
    const auto mv = m.multiply(sd.v);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(mv[i], sd.rho * sd.v[i], 1e-10);
  }
}

TEST(Spectral, NonConvergenceThrows) {
  NumericsConfig cfg;
  cfg.power_iterations_per_node = 0;
  cfg.power_min_iterations = 2;
  std::mt19937_64 rng(5);
  const DenseMatrix m = oracle::random_irreducible(12, 0.2, rng, false);
  EXPECT_THROW(spectral_data(TransitionMatrix::from_dense(m), cfg), NumericalError);
  EXPECT_THROW(spectral_data(TransitionMatrix::from_dense(DenseMatrix(0, 0))), std::invalid_argument);
}

TEST(Isoradial, ExamplePairReductions) {
  const DenseMatrix p = oracle::example_p();
  for (const auto& e : oracle::expected_pair_reductions()) {
    const std::size_t s[] = {static_cast<std::size_t>(e.i), static_cast<std::size_t>(e.j)};
    const auto r = isoradial_reduction(p, s, 1.0);
    EXPECT_NEAR(r.entries(0, 0), e.ii, 1e-12);
    EXPECT_NEAR(r.entries(0, 1), e.ij, 1e-12);
    EXPECT_NEAR(r.entries(1, 0), e.ji, 1e-12);
    EXPECT_NEAR(r.entries(1, 1), e.jj, 1e-12);
    EXPECT_EQ(r.subset, (std::vector<std::size_t>{s[0], s[1]}));
    EXPECT_EQ(r.source_rho, 1.0);
  }
}

TEST(Isoradial, SubsetOrderPermutesResult) {
  const DenseMatrix p = oracle::example_p();
  const std::size_t fwd[] = {0, 2};
  const std::size_t rev[] = {2, 0};
  const auto a = isoradial_reduction(p, fwd, 1.0).entries;
  const auto b = isoradial_reduction(p, rev, 1.0).entries;
  EXPECT_NEAR(a(0, 1), b(1, 0), 1e-15);
  EXPECT_NEAR(a(0, 0), b(1, 1), 1e-15);
}

TEST(Isoradial, FullSubsetIsIdentityMap) {
  const DenseMatrix p = oracle::example_p();
  const std::size_t all[] = {0, 1, 2, 3};
  EXPECT_EQ(isoradial_reduction(p, all, 1.0).entries, p);
}

TEST(Isoradial, PreservesSpectralRadiusAndIsSequential) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + trial % 6;
    const DenseMatrix m = oracle::random_irreducible(n, 0.35, rng, trial % 2 == 1);
    const double rho = spectral_data(TransitionMatrix::from_dense(m)).rho;
    const std::vector<std::size_t> big{0, 1, 2, 3};
    const std::vector<std::size_t> small{1, 3};
    const auto direct = isoradial_reduction(m, small, rho);
    EXPECT_NEAR(oracle::spectral_radius(direct.entries), rho, 1e-8);
    EXPECT_NEAR(oracle::spectral_radius(isoradial_reduction(m, big, rho).entries), rho, 1e-8);
    const std::vector<std::vector<std::size_t>> chain{big, small};
    const auto seq = sequential_reduction(m, chain, rho);
    EXPECT_LT(max_abs_diff(seq.entries, direct.entries), 1e-10);
    EXPECT_EQ(seq.subset, small);
    // Reductions of nonnegative irreducible matrices stay nonnegative.
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) EXPECT_GE(direct.entries(r, c), -1e-12);
  }
}

TEST(Isoradial, InputValidation) {
  const DenseMatrix p = oracle::example_p();
  const std::size_t out_of_range[] = {0, 9};
  const std::size_t repeated[] = {1, 1};
  EXPECT_THROW(isoradial_reduction(p, out_of_range, 1.0), std::invalid_argument);
  EXPECT_THROW(isoradial_reduction(p, repeated, 1.0), std::invalid_argument);
  EXPECT_THROW(isoradial_reduction(p, {}, 1.0), std::invalid_argument);
  EXPECT_THROW(isoradial_reduction(DenseMatrix(2, 3), out_of_range, 1.0), std::invalid_argument);
  const std::vector<std::vector<std::size_t>> not_nested{{0, 1}, {2}};
  EXPECT_THROW(sequential_reduction(p, not_nested, 1.0), std::invalid_argument);
  const std::vector<std::vector<std::size_t>> not_strict{{0, 1}, {1, 0}};
  EXPECT_THROW(sequential_reduction(p, not_strict, 1.0), std::invalid_argument);
  EXPECT_THROW(sequential_reduction(p, {}, 1.0), std::invalid_argument);
}

TEST(Isoradial, ShiftAtEigenvalueOfBlockThrows) {
  // Node 2 is a sink with a loop of weight 1 = rho, so M_CC - rho I is singular.
  const DenseMatrix m{{0, 1, 0}, {0, 0, 1}, {0, 0, 1}};
  const std::size_t s[] = {0, 1};
  EXPECT_THROW(isoradial_reduction(m, s, 1.0), NumericalError);
}
