#pragma once

// Data-parallel inner loops used by the dense solver, the power iteration
// and the l-step pair loop. Each kernel has a scalar reference version and,
// on x86-64, an AVX2/FMA version. The active table is chosen once at startup
// from CPUID and can be overridden with ETLINK_KERNELS=scalar|avx2 or
// force_backend().

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace etlink::kernels {

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  Backend backend;

  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);

  // y[i] += a * x[i]
  void (*axpy)(double* y, const double* x, double a, std::size_t n);

  // sum_i x[i]
  double (*sum)(const double* x, std::size_t n);

  // y = A x, A row-major with leading dimension lda.
  void (*gemv)(const double* a, std::size_t rows, std::size_t cols, std::size_t lda,
               const double* x, double* y);

  // out[k] = 1 if ik[k] + kj[k] <= bound and jk[k] + ki[k] <= bound, else 0.
  // Sums saturate, so the 0xFFFF "unreachable" sentinel never passes.
  void (*gamma_mask)(const std::uint16_t* ik, const std::uint16_t* kj,
                     const std::uint16_t* jk, const std::uint16_t* ki,
                     std::uint16_t bound, std::uint8_t* out, std::size_t n);
};

const KernelTable& scalar_table();

// Returns nullptr when the backend was not compiled in or the CPU lacks it.
const KernelTable* table_for(Backend backend);

bool backend_available(Backend backend);

const KernelTable& active();

// Not thread-safe with respect to concurrent kernel use; intended for tests
// and benchmarks. Throws std::invalid_argument if the backend is unavailable.
void force_backend(Backend backend);

std::string_view backend_name(Backend backend);

}  // namespace etlink::kernels
