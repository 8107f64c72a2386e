#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace etlink {

// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  // Rows indexed by `rows`, columns indexed by `cols`, in the given order.
  DenseMatrix submatrix(std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols) const;

  DenseMatrix transpose() const;

  // y = A x
  std::vector<double> multiply(std::span<const double> x) const;
  DenseMatrix multiply(const DenseMatrix& rhs) const;

  double max_abs() const;
  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// max |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

// LU factorization with partial pivoting, PA = LU.
class LuFactorization {
 public:
  // Throws NumericalError if a pivot falls below `singular_tol` times the
  // largest entry of the input.
  explicit LuFactorization(DenseMatrix a, double singular_tol = 1e-14);

  std::size_t size() const { return lu_.rows(); }

  void solve_in_place(std::span<double> b) const;
  std::vector<double> solve(std::span<const double> b) const;

  // Solves A X = B for every column of B.
  DenseMatrix solve(const DenseMatrix& b) const;

  DenseMatrix inverse() const;

 private:
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;
};

}  // namespace etlink
