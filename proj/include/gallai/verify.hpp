#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/formulas.hpp"

namespace gallai {

enum class Verdict { Verified, Refuted, ExhaustedBudget };

const char* verdict_name(Verdict v);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t millis = 0;
};

// Outcome of a verification run. Refuted reports carry a concrete
// counterexample (a rainbow triangle, an embedding, or a whole coloring);
// Verified is reserved for complete, budget-respecting enumeration.
struct VerdictReport {
  std::string claim;
  Verdict verdict = Verdict::Verified;
  std::optional<std::array<int, 3>> rainbow;
  std::optional<Embedding> embedding;
  std::optional<ColoredComplete> witness;
  SearchStats stats;
};

struct EngineOptions {
  std::uint64_t node_budget = 100'000'000;
  int threads = 1;
};

// Default node budget, overridable via the GALLAI_BUDGET environment
// variable (used by the CLI when --budget is absent).
std::uint64_t default_node_budget();

// Checks the "bad coloring" property: no rainbow triangle and no
// monochromatic targets[j-1] in color j for any j. |targets| must equal c's
// palette size.
VerdictReport check_bad_coloring(const ColoredComplete& c, std::span<const TargetSpec> targets);

// Exhaustively decides whether every 2-coloring of K_N contains t1 in color 1
// or t2 in color 2. Enumerates edge-by-edge with lex-min canonicity pruning
// under vertex permutations; Verified only on complete exhaustion. N is
// capped (kRamsey2Cap) because the enumeration is meant for small closures.
VerdictReport exhaustive_ramsey2(const TargetSpec& t1, const TargetSpec& t2, int N,
                                 EngineOptions opt = {});

inline constexpr int kRamsey2Cap = 8;

// Searches the Gallai k-colorings of K_N for one avoiding targets[j-1] in
// color j for all j. Refuted-style result (witness attached) when one is
// found; Verified when the pruned enumeration provably exhausts the space;
// ExhaustedBudget otherwise.
VerdictReport search_bad_gallai(int N, std::span<const TargetSpec> targets,
                                EngineOptions opt = {});

// Composite check of one Gallai-Ramsey point: certifies the extremal witness
// at gr_value-1 and runs the exhaustive search at gr_value.
struct GrPointReport {
  int gr = 0;
  VerdictReport lower;
  VerdictReport upper;
  Verdict overall = Verdict::ExhaustedBudget;
};

GrPointReport verify_gr_point(const GRInstance& inst, EngineOptions opt = {});

// Number of k-colorings of K_N that are lexicographically minimal under
// vertex permutations (one per isomorphism class). Cross-check hook for the
// symmetry pruning.
std::uint64_t count_canonical_colorings(int N, int k, EngineOptions opt = {});

}  // namespace gallai
