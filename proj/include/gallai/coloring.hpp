#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gallai/errors.hpp"

namespace gallai {

using Color = std::uint8_t;  // 1..k on edges; 0 marks "unassigned" internally

// An edge coloring of the complete graph K_n with a declared palette 1..k.
// Colors are stored once per unordered pair in a flat upper-triangular array
// whose index order is (0,1),(0,2),(1,2),(0,3),... so that all edges inside
// {0..v} precede any edge touching v+1. A redundant n*n byte matrix mirrors
// the triangle so per-vertex rows are contiguous for the scan kernels.
//
// Instances are write-once: builders call set_color, everything else treats
// the coloring as immutable and may share it across threads.
class ColoredComplete {
 public:
  static constexpr int kMaxVertices = 64;
  static constexpr int kMaxColors = 250;

  ColoredComplete(int n, int k, Color fill = 1);

  int order() const { return n_; }
  int colors() const { return k_; }
  int edge_count() const { return n_ * (n_ - 1) / 2; }

  Color color(int u, int v) const { return tri_[edge_index(u, v)]; }
  void set_color(int u, int v, Color c);

  // Row u of the square mirror; entry w is color(u,w), 0 on the diagonal.
  const Color* row(int u) const { return rows_.data() + static_cast<std::size_t>(u) * n_; }

  std::span<const Color> triangle() const { return tri_; }

  // Triangular index; order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
  static int edge_index(int u, int v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
  }
  static std::pair<int, int> edge_from_index(int e);

  // Distinct colors actually appearing on edges, ascending.
  std::vector<int> used_colors() const;

  bool operator==(const ColoredComplete& other) const {
    return n_ == other.n_ && k_ == other.k_ && tri_ == other.tri_;
  }

 private:
  int n_;
  int k_;
  std::vector<Color> tri_;
  std::vector<Color> rows_;
};

struct EdgeColor {
  int u;
  int v;
  int color;
};

// Validating constructor: every unordered pair exactly once, colors in 1..k.
ColoredComplete make_coloring(int n, int k, std::span<const EdgeColor> edges);

// Smallest rainbow triangle (three pairwise distinct edge colors) in
// lexicographic (v1,v2,v3) order, or nullopt. The coloring is a Gallai
// coloring iff the result is nullopt.
std::optional<std::array<int, 3>> find_rainbow_triangle(const ColoredComplete& c);

enum class TargetKind { Path, EvenCycle, Matching };

// A forbidden monochromatic target: a path P_order, an even cycle C_order, or
// a matching of order/2 disjoint edges.
struct TargetSpec {
  TargetKind kind;
  int order;

  static TargetSpec path(int order);
  static TargetSpec even_cycle(int order);
  static TargetSpec matching(int size);  // order = 2 * size

  int matching_size() const { return order / 2; }

  std::string to_string() const;            // "P5", "C10", "M3"
  static TargetSpec parse(std::string_view s);

  bool operator==(const TargetSpec&) const = default;
};

// A vertex sequence witnessing a monochromatic target: path order for paths,
// cycle order (wraparound edge implied) for cycles, consecutive pairs for
// matchings.
struct Embedding {
  TargetSpec target;
  int color;
  std::vector<int> vertices;
};

// Re-checks the embedding against the coloring: distinct vertices, right
// count, and every required edge in the stated color.
bool embedding_valid(const ColoredComplete& c, const Embedding& e);

struct SubstitutionResult {
  ColoredComplete coloring;
  // Half-open vertex ranges of the blocks, one per base vertex.
  std::vector<std::pair<int, int>> blocks;
};

// Blow-up: replaces vertex i of the base by parts[i]; edges inside block i
// copy parts[i], edges between blocks i and j take base.color(i,j). The
// result palette is the max of all input palettes.
SubstitutionResult substitute(const ColoredComplete& base,
                              std::span<const ColoredComplete> parts);

}  // namespace gallai
