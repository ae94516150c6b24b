#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/formulas.hpp"
#include "gallai/verify.hpp"

namespace gallai {

inline constexpr const char* kToolVersion = "gallai-0.1.0";
inline constexpr int kCertificateVersion = 1;

// The archival exchange format: a plain-text, line-oriented, human-diffable
// record of a coloring, the per-color forbidden targets, the claims made
// about the coloring, and the verification that backs the claims. Claims and
// verification appear together or not at all.
struct Certificate {
  int version = kCertificateVersion;
  int n = 0;
  int k = 0;
  Provenance provenance = Provenance::Proven;
  std::vector<std::string> color_names;  // size k, or empty when unnamed
  std::vector<TargetSpec> targets;       // size k, or empty when untargeted
  std::vector<Color> edges;              // triangular array, edge-index order

  struct Claims {
    bool gallai = true;
    std::vector<int> absent;  // colors claimed free of their target, ascending
    bool operator==(const Claims&) const = default;
  };
  std::optional<Claims> claims;

  struct Verification {
    std::string verdict;
    std::string tool;
    std::uint64_t nodes = 0;
    bool operator==(const Verification&) const = default;
  };
  std::optional<Verification> verification;

  ColoredComplete coloring() const;

  bool operator==(const Certificate&) const = default;
};

// Deterministic rendering: fixed field order, LF line ends, edges sorted
// lexicographically by (u, v). parse(serialize(x)) == x.
std::string serialize(const Certificate& cert);

// Strict parser. Structural problems raise SyntaxError; well-formed text
// with bad content (duplicate or missing edges, colors out of range,
// inconsistent counts) raises SemanticError.
Certificate parse_certificate(std::string_view text);

// Default palette names (red, blue, green, ...) for k colors.
std::vector<std::string> default_color_names(int k);

// Assembles the certificate for a verified extremal witness.
Certificate witness_certificate(const GRInstance& inst, const ColoredComplete& coloring,
                                const VerdictReport& report);

// Certificate carrying just a coloring (no targets, claims or verification).
Certificate coloring_certificate(const ColoredComplete& coloring);

// Re-verifies a certificate's claims from scratch: gallai flag against a
// rainbow scan, absence claims against the exact searches. Certificates
// without claims verify vacuously after structural validation.
VerdictReport check_certificate(const Certificate& cert);

}  // namespace gallai
