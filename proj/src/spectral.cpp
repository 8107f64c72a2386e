#include "etlink/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "etlink/error.hpp"
#include "etlink/kernels.hpp"

namespace etlink {

SpectralData spectral_data(const TransitionMatrix& m, const NumericsConfig& cfg) {
  const std::size_t n = m.n();
  if (n == 0) throw std::invalid_argument("spectral_data: empty matrix");
  const auto& k = kernels::active();
  const bool stochastic = m.row_stochastic(cfg.power_tol);
  const std::size_t cap =
      std::max(cfg.power_iterations_per_node * n, cfg.power_min_iterations);

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> y(n);
  SpectralData out;
  double residual = 0.0;
  for (std::size_t it = 0; it <= cap; ++it) {
    m.multiply(x, y);
    const double rho = k.sum(y.data(), n);
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - rho * x[i]));
    if (residual <= cfg.power_tol * std::max(1.0, rho)) {
      out.rho = rho;
      out.iterations = it;
      break;
    }
    if (it == cap) {
      std::ostringstream msg;
      msg << "power iteration did not converge in " << cap << " iterations (residual "
          << residual << ")";
      throw NumericalError(msg.str());
    }
    // x <- (M + I) x / (1 + rho), which keeps sum(x) = 1.
    const double inv = 1.0 / (1.0 + rho);
    for (std::size_t i = 0; i < n; ++i) x[i] = (x[i] + y[i]) * inv;
    const double s = k.sum(x.data(), n);
    for (double& v : x) v /= s;
  }
  if (stochastic && std::abs(out.rho - 1.0) < cfg.power_tol) {
    out.rho = 1.0;
    m.multiply(x, y);
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - x[i]));
  }
  out.residual = residual;
  out.v = std::move(x);
  return out;
}

namespace {

void validate_subset(std::span<const std::size_t> subset, std::size_t n) {
  if (subset.empty()) throw std::invalid_argument("isoradial reduction: empty subset");
  std::vector<char> seen(n, 0);
  for (std::size_t s : subset) {
    if (s >= n) throw std::invalid_argument("isoradial reduction: index out of range");
    if (seen[s]) throw std::invalid_argument("isoradial reduction: repeated index");
    seen[s] = 1;
  }
}

}  // namespace

ReducedMatrix isoradial_reduction(const DenseMatrix& m, std::span<const std::size_t> subset,
                                  double rho, const NumericsConfig& cfg) {
  if (!m.square()) throw std::invalid_argument("isoradial reduction: matrix not square");
  const std::size_t n = m.rows();
  validate_subset(subset, n);

  std::vector<char> in_subset(n, 0);
  for (std::size_t s : subset) in_subset[s] = 1;
  std::vector<std::size_t> rest;
  rest.reserve(n - subset.size());
  for (std::size_t i = 0; i < n; ++i)
    if (!in_subset[i]) rest.push_back(i);

  ReducedMatrix out;
  out.subset.assign(subset.begin(), subset.end());
  out.source_rho = rho;
  out.entries = m.submatrix(subset, subset);
  if (rest.empty()) return out;

  DenseMatrix shifted = m.submatrix(rest, rest);
  for (std::size_t i = 0; i < rest.size(); ++i) shifted(i, i) -= rho;
  const DenseMatrix rhs = m.submatrix(rest, subset);
  const LuFactorization lu(shifted);
  const DenseMatrix x = lu.solve(rhs);

  // Relative residual of the block solve.
  const DenseMatrix bx = shifted.multiply(x);
  const double resid = max_abs_diff(bx, rhs);
  const double scale = shifted.max_abs() * x.max_abs() + rhs.max_abs();
  if (resid > cfg.solve_residual_tol * std::max(scale, 1e-300)) {
    std::ostringstream msg;
    msg << "isoradial reduction: shifted block solve residual " << resid << " too large";
    throw NumericalError(msg.str());
  }

  const DenseMatrix left = m.submatrix(subset, rest);
  const DenseMatrix corr = left.multiply(x);
  for (std::size_t r = 0; r < subset.size(); ++r)
    for (std::size_t c = 0; c < subset.size(); ++c) out.entries(r, c) -= corr(r, c);
  return out;
}

ReducedMatrix sequential_reduction(const DenseMatrix& m,
                                   std::span<const std::vector<std::size_t>> chain, double rho,
                                   const NumericsConfig& cfg) {
  if (!m.square()) throw std::invalid_argument("sequential reduction: matrix not square");
  if (chain.empty()) throw std::invalid_argument("sequential reduction: empty chain");

  ReducedMatrix current;
  current.entries = m;
  current.subset.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) current.subset[i] = i;
  current.source_rho = rho;

  for (std::size_t step = 0; step < chain.size(); ++step) {
    const auto& next = chain[step];
    // Positions of `next` inside the current subset.
    std::vector<std::size_t> local;
    local.reserve(next.size());
    for (std::size_t idx : next) {
      const auto it = std::find(current.subset.begin(), current.subset.end(), idx);
      if (it == current.subset.end())
        throw std::invalid_argument("sequential reduction: chain is not nested");
      local.push_back(static_cast<std::size_t>(it - current.subset.begin()));
    }
    if (step > 0 && next.size() >= current.subset.size())
      throw std::invalid_argument("sequential reduction: chain is not strictly nested");
    ReducedMatrix reduced = isoradial_reduction(current.entries, local, rho, cfg);
    reduced.subset = next;
    current = std::move(reduced);
  }
  return current;
}

}  // namespace etlink
