#pragma once

#include <cstdint>

namespace gallai::kernels {

// Scans two color rows for an index w where a[w], b[w] and uv are three
// distinct nonzero colors; returns the smallest such w in [0, n), or -1.
// A zero entry means "no edge" and never participates.
using RainbowScanFn = int (*)(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t uv,
                              int n);

// Returns a bitmask of the positions w in [0, n) with row[w] == color. n <= 64.
using ColorMaskFn = std::uint64_t (*)(const std::uint8_t* row, std::uint8_t color, int n);

struct Kernels {
  RainbowScanFn rainbow_scan;
  ColorMaskFn color_mask;
  const char* name;
};

// Scalar reference implementation; always available, used as the equivalence
// oracle for the vector variants.
extern const Kernels scalar_kernels;

// Vector variants; null when the CPU (or build) does not support them.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

// The kernel set selected at startup: best supported variant, overridable
// with GALLAI_KERNELS=scalar|avx2|neon.
const Kernels& active();

}  // namespace gallai::kernels
