// NEON variants of the row-scan kernels (aarch64 baseline).

#include "gallai/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace gallai::kernels {

namespace {

int rainbow_scan_neon(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t uv, int n) {
  const uint8x16_t vuv = vdupq_n_u8(uv);
  const uint8x16_t zero = vdupq_n_u8(0);
  int w = 0;
  for (; w + 16 <= n; w += 16) {
    const uint8x16_t va = vld1q_u8(a + w);
    const uint8x16_t vb = vld1q_u8(b + w);
    uint8x16_t bad = vceqq_u8(va, vb);
    bad = vorrq_u8(bad, vceqq_u8(va, vuv));
    bad = vorrq_u8(bad, vceqq_u8(vb, vuv));
    bad = vorrq_u8(bad, vceqq_u8(va, zero));
    bad = vorrq_u8(bad, vceqq_u8(vb, zero));
    // Narrow each lane to 4 bits so the 16 lanes fit one 64-bit scalar.
    const uint8x8_t nib = vshrn_n_u16(vreinterpretq_u16_u8(bad), 4);
    const std::uint64_t packed = vget_lane_u64(vreinterpret_u64_u8(nib), 0);
    const std::uint64_t good = ~packed;
    if (good != 0) return w + __builtin_ctzll(good) / 4;
  }
  for (; w < n; ++w) {
    const std::uint8_t ca = a[w];
    const std::uint8_t cb = b[w];
    if (ca != 0 && cb != 0 && ca != cb && ca != uv && cb != uv) return w;
  }
  return -1;
}

std::uint64_t color_mask_neon(const std::uint8_t* row, std::uint8_t color, int n) {
  const uint8x16_t vc = vdupq_n_u8(color);
  std::uint64_t mask = 0;
  int w = 0;
  for (; w + 16 <= n; w += 16) {
    const uint8x16_t hit = vceqq_u8(vld1q_u8(row + w), vc);
    const uint8x8_t nib = vshrn_n_u16(vreinterpretq_u16_u8(hit), 4);
    std::uint64_t packed = vget_lane_u64(vreinterpret_u64_u8(nib), 0);
    std::uint64_t bits = 0;
    for (int i = 0; i < 16; ++i) {
      if ((packed >> (4 * i)) & 1) bits |= std::uint64_t{1} << i;
    }
    mask |= bits << w;
  }
  for (; w < n; ++w) {
    if (row[w] == color) mask |= std::uint64_t{1} << w;
  }
  return mask;
}

const Kernels neon{rainbow_scan_neon, color_mask_neon, "neon"};

}  // namespace

const Kernels* neon_kernels() { return &neon; }

}  // namespace gallai::kernels

#else

namespace gallai::kernels {

const Kernels* neon_kernels() { return nullptr; }

}  // namespace gallai::kernels

#endif
