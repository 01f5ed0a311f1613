#include <cstdlib>
#include <string_view>

#include "ugsb/kernels/kernels.hpp"

namespace ugsb::kernels {

#if defined(UGSB_HAVE_AVX2_KERNELS)
const KernelTable& avx2_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(UGSB_HAVE_AVX2_KERNELS)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = []() -> const KernelTable& {
    const char* forced = std::getenv("UGSB_KERNELS");
    if (forced && std::string_view(forced) == "scalar") return scalar_kernels();
    if (const KernelTable* fast = avx2_kernels()) return *fast;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace ugsb::kernels
