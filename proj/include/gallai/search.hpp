#pragma once

#include <cstdint>
#include <optional>

#include "gallai/coloring.hpp"

namespace gallai {

struct SearchLimits {
  std::uint64_t node_budget = 100'000'000;
};

// Exact monochromatic subgraph search on the single-color subgraph of c.
// Results are definitive: nullopt means no embedding exists. A search that
// would need more than the node budget throws Error{BudgetExceeded} instead
// of guessing. Returned embeddings are the lexicographically least vertex
// sequences, so identical inputs give identical witnesses.

// m-vertex path, all edges in the given color. m > c.order() returns nullopt.
std::optional<Embedding> find_mono_path(const ColoredComplete& c, int color, int m,
                                        SearchLimits limits = {});

// len-cycle, len even and >= 4.
std::optional<Embedding> find_mono_cycle(const ColoredComplete& c, int color, int len,
                                         SearchLimits limits = {});

// size vertex-disjoint edges in the color.
std::optional<Embedding> find_mono_matching(const ColoredComplete& c, int color, int size,
                                            SearchLimits limits = {});

// Dispatch over the three target kinds.
std::optional<Embedding> has_target(const ColoredComplete& c, int color, const TargetSpec& t,
                                    SearchLimits limits = {});

// Size of a maximum matching of the color class (general graphs, blossom
// contraction). Exposed for the matching-duality checks.
int max_matching_size(const ColoredComplete& c, int color);

namespace detail {

// Mask-level cores used both by the public searches and by the enumeration
// engine, which maintains its own adjacency masks. adj[v] is the neighbor
// bitmask of v; n <= 64.
bool path_exists(const std::uint64_t* adj, int n, int m, std::uint64_t* budget);
bool cycle_exists(const std::uint64_t* adj, int n, int len, std::uint64_t* budget);
int max_matching_masks(const std::uint64_t* adj, int n);

// Anchored variants: a path of m vertices containing the edge (u,v), and a
// cycle of len vertices using the edge (u,v). When a class was target-free
// before (u,v) appeared, these decide exactly whether it is target-free now.
bool path_exists_through(const std::uint64_t* adj, int n, int m, int u, int v,
                         std::uint64_t* budget);
bool cycle_exists_through(const std::uint64_t* adj, int n, int len, int u, int v,
                          std::uint64_t* budget);

}  // namespace detail

}  // namespace gallai
