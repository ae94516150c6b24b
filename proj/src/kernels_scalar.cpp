#include "gallai/kernels.hpp"

namespace gallai::kernels {

namespace {

int rainbow_scan_scalar(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t uv, int n) {
  for (int w = 0; w < n; ++w) {
    const std::uint8_t ca = a[w];
    const std::uint8_t cb = b[w];
    if (ca != 0 && cb != 0 && ca != cb && ca != uv && cb != uv) return w;
  }
  return -1;
}

std::uint64_t color_mask_scalar(const std::uint8_t* row, std::uint8_t color, int n) {
  std::uint64_t mask = 0;
  for (int w = 0; w < n; ++w) {
    if (row[w] == color) mask |= std::uint64_t{1} << w;
  }
  return mask;
}

}  // namespace

const Kernels scalar_kernels{rainbow_scan_scalar, color_mask_scalar, "scalar"};

}  // namespace gallai::kernels
