#pragma once

#include <cstddef>
#include <cstdint>

namespace etlink::kernels::detail {

double dot_scalar(const double* x, const double* y, std::size_t n);
void axpy_scalar(double* y, const double* x, double a, std::size_t n);
double sum_scalar(const double* x, std::size_t n);
void gemv_scalar(const double* a, std::size_t rows, std::size_t cols, std::size_t lda,
                 const double* x, double* y);
void gamma_mask_scalar(const std::uint16_t* ik, const std::uint16_t* kj,
                       const std::uint16_t* jk, const std::uint16_t* ki,
                       std::uint16_t bound, std::uint8_t* out, std::size_t n);

#if defined(ETLINK_HAVE_AVX2_TU)
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double* y, const double* x, double a, std::size_t n);
double sum_avx2(const double* x, std::size_t n);
void gemv_avx2(const double* a, std::size_t rows, std::size_t cols, std::size_t lda,
               const double* x, double* y);
void gamma_mask_avx2(const std::uint16_t* ik, const std::uint16_t* kj,
                     const std::uint16_t* jk, const std::uint16_t* ki,
                     std::uint16_t bound, std::uint8_t* out, std::size_t n);
#endif

}  // namespace etlink::kernels::detail
