#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "etlink/dense.hpp"
#include "etlink/transition.hpp"

namespace etlink {

// Tolerances shared by the spectral and effective-transition code.
struct NumericsConfig {
  // Power iteration stops once ||Mv - rho v||_inf <= power_tol * max(1, rho).
  double power_tol = 1e-12;
  // Iteration cap is max(power_iterations_per_node * n, power_min_iterations).
  std::size_t power_iterations_per_node = 100;
  std::size_t power_min_iterations = 1000;
  // Relative residual accepted from the shifted block solve.
  double solve_residual_tol = 1e-10;
};

// Perron data of a nonnegative irreducible matrix.
struct SpectralData {
  double rho = 0.0;
  std::vector<double> v;  // positive, sums to 1
  double residual = 0.0;  // ||Mv - rho v||_inf
  std::size_t iterations = 0;
};

// Power iteration on M + I (the shift makes the iteration matrix primitive).
// For row-stochastic M the radius is snapped to exactly 1 when it lands
// within power_tol of it. Throws NumericalError on non-convergence.
SpectralData spectral_data(const TransitionMatrix& m, const NumericsConfig& cfg = {});

// Isoradial reduction of M over the index list `subset`:
//   M_SS - M_SC (M_CC - rho I)^{-1} M_CS,  C = complement of S.
// Rows/columns of the result follow the order of `subset`.
struct ReducedMatrix {
  DenseMatrix entries;
  std::vector<std::size_t> subset;
  double source_rho = 0.0;
};

ReducedMatrix isoradial_reduction(const DenseMatrix& m, std::span<const std::size_t> subset,
                                  double rho, const NumericsConfig& cfg = {});

// Applies isoradial_reduction along N ⊇ chain[0] ⊃ chain[1] ⊃ ... with rho
// held fixed. Subsets are given as indices of the original matrix.
ReducedMatrix sequential_reduction(const DenseMatrix& m,
                                   std::span<const std::vector<std::size_t>> chain, double rho,
                                   const NumericsConfig& cfg = {});

}  // namespace etlink
