#include <gtest/gtest.h>

#include <random>

#include "etlink/dense.hpp"
#include "etlink/error.hpp"
#include "oracles.hpp"

using etlink::DenseMatrix;
using etlink::LuFactorization;

TEST(DenseMatrix, Basics) {
  const DenseMatrix a{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(a.rows(), 2u);
  EXPECT_EQ(a.cols(), 3u);
  EXPECT_FALSE(a.square());
  EXPECT_EQ(a(1, 2), 6.0);
  EXPECT_EQ(a.max_abs(), 6.0);
  const DenseMatrix t = a.transpose();
  EXPECT_EQ(t(2, 1), 6.0);
  EXPECT_EQ(t(0, 1), 4.0);
  const auto y = a.multiply(std::vector<double>{1, 1, 1});
  EXPECT_EQ(y, (std::vector<double>{6, 15}));
  const DenseMatrix p = a.multiply(t);
  EXPECT_EQ(p, (DenseMatrix{{14, 32}, {32, 77}}));
  EXPECT_EQ(DenseMatrix::identity(2), (DenseMatrix{{1, 0}, {0, 1}}));
}

TEST(DenseMatrix, SubmatrixFollowsIndexOrder) {
  const DenseMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  const std::size_t rows[] = {2, 0};
  const std::size_t cols[] = {1};
  const DenseMatrix s = a.submatrix(rows, cols);
  EXPECT_EQ(s, (DenseMatrix{{8}, {2}}));
}

TEST(DenseMatrix, RaggedInitializerThrows) {
  EXPECT_THROW((DenseMatrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST(DenseMatrix, MaxAbsDiff) {
  EXPECT_EQ(etlink::max_abs_diff(DenseMatrix{{1, 2}}, DenseMatrix{{1.5, -1}}), 3.0);
  EXPECT_THROW(etlink::max_abs_diff(DenseMatrix(1, 2), DenseMatrix(2, 1)), std::invalid_argument);
}

TEST(LuFactorization, SolvesAgainstEigen) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
    DenseMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = u(rng);
    std::vector<double> b(n);
    for (auto& x : b) x = u(rng);
    const LuFactorization lu(a);
    const auto x = lu.solve(b);
    const Eigen::VectorXd ref =
        oracle::to_eigen(a).fullPivLu().solve(Eigen::Map<const Eigen::VectorXd>(b.data(), n));
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(x[i], ref(i), 1e-9);

    const DenseMatrix inv = lu.inverse();
    EXPECT_LT(etlink::max_abs_diff(a.multiply(inv), DenseMatrix::identity(n)), 1e-10);

    DenseMatrix rhs(n, 3);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < 3; ++c) rhs(r, c) = u(rng);
    const DenseMatrix sol = lu.solve(rhs);
    EXPECT_LT(etlink::max_abs_diff(a.multiply(sol), rhs), 1e-10);
  }
}

TEST(LuFactorization, NeedsPivoting) {
  const DenseMatrix a{{0, 1}, {1, 0}};
  const auto x = LuFactorization(a).solve(std::vector<double>{2, 3});
  EXPECT_EQ(x, (std::vector<double>{3, 2}));
}

TEST(LuFactorization, SingularThrows) {
  EXPECT_THROW(LuFactorization(DenseMatrix{{1, 2}, {2, 4}}), etlink::NumericalError);
  EXPECT_THROW(LuFactorization(DenseMatrix(3, 3)), etlink::NumericalError);
}

TEST(LuFactorization, RejectsNonSquareAndWrongSizes) {
  EXPECT_THROW(LuFactorization(DenseMatrix(2, 3)), std::invalid_argument);
  const LuFactorization lu(DenseMatrix::identity(2));
  EXPECT_THROW(lu.solve(std::vector<double>{1, 2, 3}), std::invalid_argument);
}
