#include <cstdlib>
#include <string_view>

#include "mstv/kernels.hpp"

namespace mstv::simd {

const KernelTable& active_kernels() noexcept {
  static const KernelTable& table = [] () -> const KernelTable& {
    const char* env = std::getenv("MSTV_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelTable* avx2 = avx2_kernels()) return *avx2;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace mstv::simd
