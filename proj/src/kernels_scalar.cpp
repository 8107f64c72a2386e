#include "kernels_impl.hpp"

namespace etlink::kernels::detail {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double* y, const double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sum_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

void gemv_scalar(const double* a, std::size_t rows, std::size_t cols, std::size_t lda,
                 const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_scalar(a + r * lda, x, cols);
}

void gamma_mask_scalar(const std::uint16_t* ik, const std::uint16_t* kj,
                       const std::uint16_t* jk, const std::uint16_t* ki,
                       std::uint16_t bound, std::uint8_t* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const unsigned fwd = unsigned{ik[k]} + unsigned{kj[k]};
    const unsigned bwd = unsigned{jk[k]} + unsigned{ki[k]};
    out[k] = (fwd <= bound && bwd <= bound) ? 1 : 0;
  }
}

}  // namespace etlink::kernels::detail
