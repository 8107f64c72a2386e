// Compiled with -mavx2 -mfma; only reached after a CPUID check.
#include "kernels_impl.hpp"

#include <immintrin.h>

namespace etlink::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  if (i + 4 <= n) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    i += 4;
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_avx2(double* y, const double* x, double a, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yv));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
  }
  if (i + 4 <= n) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    i += 4;
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i];
  return acc;
}

void gemv_avx2(const double* a, std::size_t rows, std::size_t cols, std::size_t lda,
               const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_avx2(a + r * lda, x, cols);
}

void gamma_mask_avx2(const std::uint16_t* ik, const std::uint16_t* kj,
                     const std::uint16_t* jk, const std::uint16_t* ki,
                     std::uint16_t bound, std::uint8_t* out, std::size_t n) {
  const __m256i bv = _mm256_set1_epi16(static_cast<short>(bound));
  const __m128i one = _mm_set1_epi8(1);
  std::size_t k = 0;
  for (; k + 16 <= n; k += 16) {
    const auto load = [k](const std::uint16_t* p) {
      return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + k));
    };
    const __m256i fwd = _mm256_adds_epu16(load(ik), load(kj));
    const __m256i bwd = _mm256_adds_epu16(load(jk), load(ki));
    // x <= bound  <=>  max(x, bound) == bound  (unsigned)
    const __m256i ok_f = _mm256_cmpeq_epi16(_mm256_max_epu16(fwd, bv), bv);
    const __m256i ok_b = _mm256_cmpeq_epi16(_mm256_max_epu16(bwd, bv), bv);
    const __m256i ok = _mm256_and_si256(ok_f, ok_b);
    const __m128i packed = _mm_packs_epi16(_mm256_castsi256_si128(ok),
                                           _mm256_extracti128_si256(ok, 1));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + k), _mm_and_si128(packed, one));
  }
  if (k < n) gamma_mask_scalar(ik + k, kj + k, jk + k, ki + k, bound, out + k, n - k);
}

}  // namespace etlink::kernels::detail
