#include "gallai/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace gallai::kernels {

namespace {

const Kernels& select() {
  const char* forced = std::getenv("GALLAI_KERNELS");
  if (forced != nullptr) {
    if (std::strcmp(forced, "scalar") == 0) return scalar_kernels;
    if (std::strcmp(forced, "avx2") == 0 && avx2_kernels() != nullptr) return *avx2_kernels();
    if (std::strcmp(forced, "neon") == 0 && neon_kernels() != nullptr) return *neon_kernels();
    return scalar_kernels;
  }
  if (const Kernels* k = avx2_kernels()) return *k;
  if (const Kernels* k = neon_kernels()) return *k;
  return scalar_kernels;
}

}  // namespace

const Kernels& active() {
  static const Kernels& chosen = select();
  return chosen;
}

}  // namespace gallai::kernels
