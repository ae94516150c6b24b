#include "gallai/decompose.hpp"

#include <algorithm>
#include <numeric>

namespace gallai {

namespace {

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<std::vector<int>> dsu_parts(Dsu& d, int n) {
  std::vector<std::vector<int>> by_root(n);
  for (int v = 0; v < n; ++v) by_root[d.find(v)].push_back(v);
  std::vector<std::vector<int>> parts;
  for (auto& p : by_root) {
    if (!p.empty()) parts.push_back(std::move(p));
  }
  return parts;
}

// Orders parts by decreasing size, ties by least vertex.
void canonical_order(std::vector<std::vector<int>>& parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
}

// Finest partition whose parts are pairwise monochromatic with all
// inter-part colors in {a, b}: vertices joined by any other color are forced
// together, and any two parts seeing two colors are forced together. Both
// rules are sound for every valid partition, so the fixpoint is the unique
// finest one.
std::vector<std::vector<int>> closure_partition(const ColoredComplete& c, int a, int b) {
  const int n = c.order();
  Dsu d(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int col = c.color(u, v);
      if (col != a && col != b) d.unite(u, v);
    }
  }
  std::vector<int> between(static_cast<std::size_t>(n) * n);
  bool changed = true;
  while (changed) {
    changed = false;
    std::fill(between.begin(), between.end(), 0);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        int r1 = d.find(u);
        int r2 = d.find(v);
        if (r1 == r2) continue;
        if (r1 > r2) std::swap(r1, r2);
        const std::size_t idx = static_cast<std::size_t>(r1) * n + r2;
        const int col = c.color(u, v);
        if (between[idx] == 0) {
          between[idx] = col;
        } else if (between[idx] != col) {
          d.unite(u, v);
          changed = true;
        }
      }
    }
  }
  return dsu_parts(d, n);
}

}  // namespace

std::vector<int> smallest_module(const ColoredComplete& c, std::span<const int> seed) {
  if (seed.empty()) throw Error(ErrorCode::InvalidArgument, "seed must be nonempty");
  const int n = c.order();
  std::vector<char> in(n, 0);
  for (int v : seed) {
    if (v < 0 || v >= n) throw Error(ErrorCode::VertexOutOfRange, "seed vertex out of range");
    in[v] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int w = 0; w < n; ++w) {
      if (in[w]) continue;
      int seen = 0;
      for (int v = 0; v < n; ++v) {
        if (!in[v]) continue;
        const int col = c.color(w, v);
        if (seen == 0) {
          seen = col;
        } else if (seen != col) {
          in[w] = 1;
          grew = true;
          break;
        }
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

ColoredComplete reduced_coloring(const ColoredComplete& c,
                                 const std::vector<std::vector<int>>& parts) {
  const int p = static_cast<int>(parts.size());
  if (p < 2) throw Error(ErrorCode::TooSmall, "reduced coloring needs at least two parts");
  ColoredComplete out(p, c.colors());
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      int col = 0;
      for (int u : parts[i]) {
        for (int v : parts[j]) {
          const int cur = c.color(u, v);
          if (col == 0) {
            col = cur;
          } else if (col != cur) {
            throw Error(ErrorCode::NotMonochromaticBetween,
                        "parts " + std::to_string(i) + " and " + std::to_string(j));
          }
        }
      }
      out.set_color(i, j, static_cast<Color>(col));
    }
  }
  return out;
}

GallaiPartition gallai_partition(const ColoredComplete& c) {
  const int n = c.order();
  if (n < 2) throw Error(ErrorCode::TooSmall, "partition needs at least two vertices");
  if (auto tri = find_rainbow_triangle(c)) {
    throw Error(ErrorCode::NotGallai, "rainbow triangle (" + std::to_string((*tri)[0]) + "," +
                                          std::to_string((*tri)[1]) + "," +
                                          std::to_string((*tri)[2]) + ")");
  }

  const std::vector<int> used = c.used_colors();
  std::vector<std::vector<int>> best;
  if (used.size() <= 2) {
    for (int v = 0; v < n; ++v) best.push_back({v});
  } else {
    for (std::size_t ai = 0; ai < used.size(); ++ai) {
      for (std::size_t bi = ai + 1; bi < used.size(); ++bi) {
        auto parts = closure_partition(c, used[ai], used[bi]);
        if (parts.size() < 2) continue;
        canonical_order(parts);
        if (best.empty() || parts.size() > best.size() ||
            (parts.size() == best.size() && parts < best)) {
          best = std::move(parts);
        }
      }
    }
    if (best.empty())
      throw Error(ErrorCode::NotGallai, "no Gallai partition exists; input cannot be Gallai");
  }
  canonical_order(best);
  ColoredComplete reduced = reduced_coloring(c, best);
  std::vector<int> inter = reduced.used_colors();
  return GallaiPartition{std::move(best), std::move(reduced), std::move(inter)};
}

PartitionReport validate_partition(const ColoredComplete& c, const GallaiPartition& g) {
  PartitionReport report;
  const int n = c.order();
  const auto add = [&report](PartitionViolation kind, std::string detail) {
    report.issues.push_back({kind, std::move(detail)});
  };

  if (g.parts.size() < 2) add(PartitionViolation::TooFewParts, "p = " + std::to_string(g.parts.size()));

  std::vector<int> owner(n, -1);
  bool cover_ok = true;
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    if (g.parts[i].empty()) {
      add(PartitionViolation::EmptyPart, "part " + std::to_string(i));
      cover_ok = false;
      continue;
    }
    for (int v : g.parts[i]) {
      if (v < 0 || v >= n) {
        add(PartitionViolation::VertexOutOfRange,
            "vertex " + std::to_string(v) + " in part " + std::to_string(i));
        cover_ok = false;
      } else if (owner[v] != -1) {
        add(PartitionViolation::Overlap, "vertex " + std::to_string(v) + " in parts " +
                                             std::to_string(owner[v]) + " and " + std::to_string(i));
        cover_ok = false;
      } else {
        owner[v] = static_cast<int>(i);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (owner[v] == -1) {
      add(PartitionViolation::IncompleteCover, "vertex " + std::to_string(v) + " uncovered");
      cover_ok = false;
    }
  }
  if (!cover_ok) return report;

  const int p = static_cast<int>(g.parts.size());
  std::vector<int> actual_inter;
  bool mono_ok = true;
  std::vector<std::vector<int>> pair_color(p, std::vector<int>(p, 0));
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      int col = 0;
      bool mono = true;
      for (int u : g.parts[i]) {
        for (int v : g.parts[j]) {
          const int cur = c.color(u, v);
          if (col == 0) {
            col = cur;
          } else if (col != cur) {
            mono = false;
          }
        }
      }
      if (!mono) {
        add(PartitionViolation::NotMonochromaticBetween,
            "parts " + std::to_string(i) + " and " + std::to_string(j));
        mono_ok = false;
      } else {
        pair_color[i][j] = col;
        if (std::find(actual_inter.begin(), actual_inter.end(), col) == actual_inter.end())
          actual_inter.push_back(col);
      }
    }
  }
  std::sort(actual_inter.begin(), actual_inter.end());

  if (mono_ok) {
    if (actual_inter.size() > 2)
      add(PartitionViolation::TooManyInterColors,
          std::to_string(actual_inter.size()) + " colors between parts");
    if (g.inter_colors != actual_inter)
      add(PartitionViolation::InterColorsMismatch, "declared inter colors differ from actual");
    if (g.reduced.order() != p) {
      add(PartitionViolation::ReducedMismatch, "reduced order != p");
    } else {
      for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
          if (g.reduced.color(i, j) != pair_color[i][j]) {
            add(PartitionViolation::ReducedMismatch,
                "reduced edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
          }
        }
      }
    }
  }
  return report;
}

}  // namespace gallai
