#include "etlink/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "etlink/error.hpp"
#include "etlink/kernels.hpp"

namespace etlink {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("DenseMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::submatrix(std::span<const std::size_t> rows,
                                   std::span<const std::size_t> cols) const {
  DenseMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double* src = data_.data() + rows[r] * cols_;
    double* dst = out.data() + r * cols.size();
    for (std::size_t c = 0; c < cols.size(); ++c) dst[c] = src[cols[c]];
  }
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) throw std::invalid_argument("DenseMatrix::multiply: size mismatch");
  std::vector<double> y(rows_);
  kernels::active().gemv(data_.data(), rows_, cols_, cols_, x.data(), y.data());
  return y;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
  if (rhs.rows_ != cols_) throw std::invalid_argument("DenseMatrix::multiply: shape mismatch");
  const auto& k = kernels::active();
  DenseMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    double* dst = out.data() + r * rhs.cols_;
    for (std::size_t m = 0; m < cols_; ++m) {
      const double a = (*this)(r, m);
      if (a != 0.0) k.axpy(dst, rhs.data() + m * rhs.cols_, a, rhs.cols_);
    }
  }
  return out;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

LuFactorization::LuFactorization(DenseMatrix a, double singular_tol)
    : lu_(std::move(a)), perm_(lu_.rows()) {
  if (!lu_.square()) throw std::invalid_argument("LuFactorization: matrix not square");
  const std::size_t n = lu_.rows();
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
  const double threshold = singular_tol * std::max(lu_.max_abs(), 1e-300);
  const auto& k = kernels::active();

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(lu_(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(lu_(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (!(best > threshold)) {
      throw NumericalError("LU factorization: matrix is singular to working precision (column " +
                           std::to_string(col) + ")");
    }
    if (piv != col) {
      std::swap_ranges(lu_.row(col).begin(), lu_.row(col).end(), lu_.row(piv).begin());
      std::swap(perm_[col], perm_[piv]);
    }
    const double pivot = lu_(col, col);
    const double* prow = lu_.data() + col * n + col + 1;
    for (std::size_t r = col + 1; r < n; ++r) {
      double& l = lu_(r, col);
      if (l == 0.0) continue;
      l /= pivot;
      k.axpy(lu_.data() + r * n + col + 1, prow, -l, n - col - 1);
    }
  }
}

void LuFactorization::solve_in_place(std::span<double> b) const {
  const std::size_t n = size();
  if (b.size() != n) throw std::invalid_argument("LuFactorization::solve: size mismatch");
  const auto& k = kernels::active();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = b[perm_[i]];
  for (std::size_t i = 0; i < n; ++i) y[i] -= k.dot(lu_.data() + i * n, y.data(), i);
  for (std::size_t i = n; i-- > 0;) {
    const double s = k.dot(lu_.data() + i * n + i + 1, y.data() + i + 1, n - i - 1);
    y[i] = (y[i] - s) / lu_(i, i);
  }
  std::copy(y.begin(), y.end(), b.begin());
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
  std::vector<double> x(b.begin(), b.end());
  solve_in_place(x);
  return x;
}

DenseMatrix LuFactorization::solve(const DenseMatrix& b) const {
  const std::size_t n = size();
  if (b.rows() != n) throw std::invalid_argument("LuFactorization::solve: shape mismatch");
  const std::size_t m = b.cols();
  const auto& k = kernels::active();
  // Row-oriented substitution keeps every update a contiguous axpy.
  DenseMatrix x(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = b.row(perm_[i]);
    std::copy(src.begin(), src.end(), x.row(i).begin());
  }
  for (std::size_t i = 0; i < n; ++i) {
    double* xi = x.data() + i * m;
    for (std::size_t j = 0; j < i; ++j) {
      const double l = lu_(i, j);
      if (l != 0.0) k.axpy(xi, x.data() + j * m, -l, m);
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double* xi = x.data() + i * m;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double u = lu_(i, j);
      if (u != 0.0) k.axpy(xi, x.data() + j * m, -u, m);
    }
    const double inv = 1.0 / lu_(i, i);
    for (std::size_t c = 0; c < m; ++c) xi[c] *= inv;
  }
  return x;
}

DenseMatrix LuFactorization::inverse() const { return solve(DenseMatrix::identity(size())); }

}  // namespace etlink
