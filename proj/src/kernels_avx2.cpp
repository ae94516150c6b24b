// AVX2 variants of the row-scan kernels. This translation unit is compiled
// with -mavx2; the dispatcher only routes here after a cpuid check.

#include "gallai/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace gallai::kernels {

namespace {

int rainbow_scan_avx2(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t uv, int n) {
  const __m256i vuv = _mm256_set1_epi8(static_cast<char>(uv));
  const __m256i zero = _mm256_setzero_si256();
  int w = 0;
  for (; w + 32 <= n; w += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    // A lane is "bad" when it cannot witness three distinct colors.
    __m256i bad = _mm256_cmpeq_epi8(va, vb);
    bad = _mm256_or_si256(bad, _mm256_cmpeq_epi8(va, vuv));
    bad = _mm256_or_si256(bad, _mm256_cmpeq_epi8(vb, vuv));
    bad = _mm256_or_si256(bad, _mm256_cmpeq_epi8(va, zero));
    bad = _mm256_or_si256(bad, _mm256_cmpeq_epi8(vb, zero));
    const std::uint32_t good = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(bad));
    if (good != 0) return w + __builtin_ctz(good);
  }
  for (; w < n; ++w) {
    const std::uint8_t ca = a[w];
    const std::uint8_t cb = b[w];
    if (ca != 0 && cb != 0 && ca != cb && ca != uv && cb != uv) return w;
  }
  return -1;
}

std::uint64_t color_mask_avx2(const std::uint8_t* row, std::uint8_t color, int n) {
  const __m256i vc = _mm256_set1_epi8(static_cast<char>(color));
  std::uint64_t mask = 0;
  int w = 0;
  for (; w + 32 <= n; w += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + w));
    const std::uint32_t hits =
        static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, vc)));
    mask |= static_cast<std::uint64_t>(hits) << w;
  }
  for (; w < n; ++w) {
    if (row[w] == color) mask |= std::uint64_t{1} << w;
  }
  return mask;
}

const Kernels avx2{rainbow_scan_avx2, color_mask_avx2, "avx2"};

}  // namespace

const Kernels* avx2_kernels() {
  return __builtin_cpu_supports("avx2") ? &avx2 : nullptr;
}

}  // namespace gallai::kernels

#else

namespace gallai::kernels {

const Kernels* avx2_kernels() { return nullptr; }

}  // namespace gallai::kernels

#endif
