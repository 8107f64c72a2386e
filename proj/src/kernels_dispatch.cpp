#include "etlink/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace etlink::kernels {

namespace {

const KernelTable kScalar{
    Backend::Scalar,         detail::dot_scalar,  detail::axpy_scalar,
    detail::sum_scalar,      detail::gemv_scalar, detail::gamma_mask_scalar,
};

#if defined(ETLINK_HAVE_AVX2_TU)
const KernelTable kAvx2{
    Backend::Avx2,         detail::dot_avx2,  detail::axpy_avx2,
    detail::sum_avx2,      detail::gemv_avx2, detail::gamma_mask_avx2,
};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable& detect() {
  const char* env = std::getenv("ETLINK_KERNELS");
  if (env != nullptr && std::string(env) == "scalar") return kScalar;
  if (const KernelTable* t = table_for(Backend::Avx2)) return *t;
  return kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{&detect()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* table_for(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return &kScalar;
    case Backend::Avx2:
#if defined(ETLINK_HAVE_AVX2_TU)
      if (cpu_has_avx2()) return &kAvx2;
#endif
      return nullptr;
  }
  return nullptr;
}

bool backend_available(Backend backend) { return table_for(backend) != nullptr; }

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

void force_backend(Backend backend) {
  const KernelTable* t = table_for(backend);
  if (t == nullptr) {
    throw std::invalid_argument("kernel backend not available: " +
                                std::string(backend_name(backend)));
  }
  current().store(t, std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace etlink::kernels
