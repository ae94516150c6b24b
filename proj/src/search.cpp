#include "gallai/search.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <vector>

#include "gallai/kernels.hpp"

namespace gallai {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void consume(std::uint64_t* budget) {
  if (*budget == 0)
    throw Error(ErrorCode::BudgetExceeded, "search node budget exhausted");
  --*budget;
}

// Vertices reachable from `from` through unvisited vertices (result includes
// `from` itself).
std::uint64_t reachable_from(const std::uint64_t* adj, int from, std::uint64_t visited) {
  std::uint64_t res = bit(from);
  std::uint64_t frontier = bit(from);
  while (frontier != 0) {
    std::uint64_t next = 0;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj[v];
    }
    next &= ~visited & ~res;
    res |= next;
    frontier = next;
  }
  return res;
}

// Connected components of the mask graph; returns the component mask of each
// vertex.
std::vector<std::uint64_t> components(const std::uint64_t* adj, int n) {
  std::vector<std::uint64_t> comp(n, 0);
  std::uint64_t assigned = 0;
  for (int v = 0; v < n; ++v) {
    if (assigned & bit(v)) continue;
    const std::uint64_t cc = reachable_from(adj, v, 0);
    std::uint64_t rest = cc;
    while (rest != 0) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      comp[u] = cc;
    }
    assigned |= cc;
  }
  return comp;
}

// Maximum matching in a general graph via blossom contraction.
class BlossomMatcher {
 public:
  BlossomMatcher(const std::uint64_t* adj, int n) : n_(n), g_(n) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t m = adj[v];
      while (m != 0) {
        const int u = std::countr_zero(m);
        m &= m - 1;
        g_[v].push_back(u);
      }
    }
  }

  int solve() {
    match_.assign(n_, -1);
    int res = 0;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      const int u = find_path(v);
      if (u == -1) continue;
      ++res;
      for (int w = u; w != -1;) {
        const int pw = p_[w];
        const int next = match_[pw];
        match_[w] = pw;
        match_[pw] = w;
        w = next;
      }
    }
    return res;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = p_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = p_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child, std::vector<char>& in_blossom) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = 1;
      in_blossom[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    p_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      for (const int to : g_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          const int cur_base = lca(v, to);
          std::vector<char> in_blossom(n_, 0);
          mark_path(v, cur_base, to, in_blossom);
          mark_path(to, cur_base, v, in_blossom);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> g_;
  std::vector<int> match_, p_, base_;
  std::vector<char> used_;
};

// Backtracking path search over mask adjacency. Sequences are explored in
// lexicographic order, so the first complete path is the least embedding.
// Failed (visited, last) states are memoized; the remaining demand is a
// function of the state, which keeps the memo sound.
class PathSearcher {
 public:
  PathSearcher(const std::uint64_t* adj, int n, int m, std::uint64_t* budget)
      : adj_(adj), n_(n), m_(m), budget_(budget) {}

  bool run(std::vector<int>* out) {
    if (m_ > n_) return false;
    if (m_ == 1) {
      if (out != nullptr) out->assign(1, 0);
      return true;
    }
    const auto comp = components(adj_, n_);
    int best_comp = 0;
    for (int v = 0; v < n_; ++v) best_comp = std::max(best_comp, std::popcount(comp[v]));
    if (best_comp < m_) return false;
    if (2 * BlossomMatcher(adj_, n_).solve() + 1 < m_) return false;
    for (int s = 0; s < n_; ++s) {
      if (std::popcount(comp[s]) < m_) continue;
      seq_.assign(1, s);
      if (dfs(s, bit(s))) {
        if (out != nullptr) *out = seq_;
        return true;
      }
    }
    return false;
  }

 private:
  bool dfs(int last, std::uint64_t visited) {
    consume(budget_);
    const int depth = static_cast<int>(seq_.size());
    if (depth == m_) return true;
    const std::uint64_t reach = reachable_from(adj_, last, visited);
    if (std::popcount(reach) - 1 < m_ - depth) return false;
    std::uint64_t cand = adj_[last] & ~visited;
    while (cand != 0) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      const std::uint64_t nvis = visited | bit(w);
      const auto it = failed_.find(nvis);
      if (it != failed_.end() && (it->second & bit(w)) != 0) continue;
      seq_.push_back(w);
      if (dfs(w, nvis)) return true;
      seq_.pop_back();
      failed_[nvis] |= bit(w);
    }
    return false;
  }

  const std::uint64_t* adj_;
  int n_;
  int m_;
  std::uint64_t* budget_;
  std::vector<int> seq_;
  std::unordered_map<std::uint64_t, std::uint64_t> failed_;
};

// Cycle search: fix the least cycle vertex s, walk only vertices above s and
// accept on an edge back to s. Both traversal directions are enumerated; the
// lex order of exploration returns the least of the two, so the first hit is
// the canonical embedding.
class CycleSearcher {
 public:
  CycleSearcher(const std::uint64_t* adj, int n, int len, std::uint64_t* budget)
      : adj_(adj), n_(n), len_(len), budget_(budget) {}

  bool run(std::vector<int>* out) {
    if (len_ > n_ || len_ < 3) return false;
    const auto comp = components(adj_, n_);
    if (2 * BlossomMatcher(adj_, n_).solve() < len_) return false;
    for (int s = 0; s + len_ <= n_; ++s) {
      if (std::popcount(comp[s]) < len_) continue;
      s_ = s;
      above_ = ~(bit(s) | (bit(s) - 1));
      failed_.clear();
      seq_.assign(1, s);
      if (dfs(s, bit(s))) {
        if (out != nullptr) *out = seq_;
        return true;
      }
    }
    return false;
  }

 private:
  bool dfs(int last, std::uint64_t visited) {
    consume(budget_);
    const int depth = static_cast<int>(seq_.size());
    if (depth == len_) return (adj_[last] & bit(s_)) != 0;
    const std::uint64_t reach = reachable_from(adj_, last, visited) & (above_ | bit(s_));
    if (std::popcount(reach) - 1 < len_ - depth) return false;
    // The closing vertex must be an unvisited neighbor of s reachable from here.
    if ((reach & adj_[s_] & ~visited) == 0) return false;
    std::uint64_t cand = adj_[last] & ~visited & above_;
    while (cand != 0) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      const std::uint64_t nvis = visited | bit(w);
      const auto it = failed_.find(nvis);
      if (it != failed_.end() && (it->second & bit(w)) != 0) continue;
      seq_.push_back(w);
      if (dfs(w, nvis)) return true;
      seq_.pop_back();
      failed_[nvis] |= bit(w);
    }
    return false;
  }

  const std::uint64_t* adj_;
  int n_;
  int len_;
  std::uint64_t* budget_;
  int s_ = 0;
  std::uint64_t above_ = 0;
  std::vector<int> seq_;
  std::unordered_map<std::uint64_t, std::uint64_t> failed_;
};

// Cycle through the edge (u,v): a u-to-v path on exactly len vertices, the
// closing edge being (v,u) itself. v is reserved from the start so it can
// only appear as the final vertex.
class AnchoredCycleSearcher {
 public:
  AnchoredCycleSearcher(const std::uint64_t* adj, int n, int len, int u, int v,
                        std::uint64_t* budget)
      : adj_(adj), n_(n), len_(len), u_(u), v_(v), budget_(budget) {}

  bool run() {
    if (len_ > n_ || len_ < 3) return false;
    return dfs(u_, bit(u_) | bit(v_), 1);
  }

 private:
  bool dfs(int last, std::uint64_t visited, int cnt) {
    consume(budget_);
    if (cnt == len_ - 1) return (adj_[last] & bit(v_)) != 0;
    const std::uint64_t reach = reachable_from(adj_, last, visited & ~bit(v_));
    if ((reach & bit(v_)) == 0) return false;
    if (std::popcount(reach) - 1 < len_ - cnt) return false;
    std::uint64_t cand = adj_[last] & ~visited;
    while (cand != 0) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      const std::uint64_t nvis = visited | bit(w);
      const auto it = failed_.find(nvis);
      if (it != failed_.end() && (it->second & bit(w)) != 0) continue;
      if (dfs(w, nvis, cnt + 1)) return true;
      failed_[nvis] |= bit(w);
    }
    return false;
  }

  const std::uint64_t* adj_;
  int n_;
  int len_;
  int u_;
  int v_;
  std::uint64_t* budget_;
  std::unordered_map<std::uint64_t, std::uint64_t> failed_;
};

// Path of m vertices containing the edge (u,v): a left arm grown from u and
// a right arm grown from v over disjoint vertices. The memo keys are sound
// because |visited| determines how much of the path remains on either side.
class AnchoredPathSearcher {
 public:
  AnchoredPathSearcher(const std::uint64_t* adj, int n, int m, int u, int v,
                       std::uint64_t* budget)
      : adj_(adj), n_(n), m_(m), u_(u), v_(v), budget_(budget) {}

  bool run() {
    if (m_ > n_ || m_ < 2) return false;
    return left(u_, bit(u_) | bit(v_), 1);
  }

 private:
  bool left(int last, std::uint64_t visited, int cnt) {
    consume(budget_);
    if (right(v_, visited, m_ - cnt)) return true;
    if (cnt == m_ - 1) return false;
    std::uint64_t cand = adj_[last] & ~visited;
    while (cand != 0) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      const std::uint64_t nvis = visited | bit(w);
      const auto it = left_failed_.find(nvis);
      if (it != left_failed_.end() && (it->second & bit(w)) != 0) continue;
      if (left(w, nvis, cnt + 1)) return true;
      left_failed_[nvis] |= bit(w);
    }
    return false;
  }

  bool right(int last, std::uint64_t visited, int need) {
    consume(budget_);
    if (need == 1) return true;
    const std::uint64_t reach = reachable_from(adj_, last, visited);
    if (std::popcount(reach) < need) return false;
    std::uint64_t cand = adj_[last] & ~visited;
    while (cand != 0) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      const std::uint64_t nvis = visited | bit(w);
      const auto it = right_failed_.find(nvis);
      if (it != right_failed_.end() && (it->second & bit(w)) != 0) continue;
      if (right(w, nvis, need - 1)) return true;
      right_failed_[nvis] |= bit(w);
    }
    return false;
  }

  const std::uint64_t* adj_;
  int n_;
  int m_;
  int u_;
  int v_;
  std::uint64_t* budget_;
  std::unordered_map<std::uint64_t, std::uint64_t> left_failed_;
  std::unordered_map<std::uint64_t, std::uint64_t> right_failed_;
};

std::vector<std::uint64_t> color_adjacency(const ColoredComplete& c, int color) {
  const auto& kern = kernels::active();
  std::vector<std::uint64_t> adj(c.order());
  for (int v = 0; v < c.order(); ++v) {
    adj[v] = kern.color_mask(c.row(v), static_cast<Color>(color), c.order());
  }
  return adj;
}

void require_color(const ColoredComplete& c, int color) {
  if (color < 1 || color > c.colors())
    throw Error(ErrorCode::ColorOutOfRange,
                "color " + std::to_string(color) + " outside 1.." + std::to_string(c.colors()));
}

}  // namespace

namespace detail {

bool path_exists(const std::uint64_t* adj, int n, int m, std::uint64_t* budget) {
  return PathSearcher(adj, n, m, budget).run(nullptr);
}

bool cycle_exists(const std::uint64_t* adj, int n, int len, std::uint64_t* budget) {
  return CycleSearcher(adj, n, len, budget).run(nullptr);
}

int max_matching_masks(const std::uint64_t* adj, int n) {
  return BlossomMatcher(adj, n).solve();
}

bool path_exists_through(const std::uint64_t* adj, int n, int m, int u, int v,
                         std::uint64_t* budget) {
  return AnchoredPathSearcher(adj, n, m, u, v, budget).run();
}

bool cycle_exists_through(const std::uint64_t* adj, int n, int len, int u, int v,
                          std::uint64_t* budget) {
  return AnchoredCycleSearcher(adj, n, len, u, v, budget).run();
}

}  // namespace detail

std::optional<Embedding> find_mono_path(const ColoredComplete& c, int color, int m,
                                        SearchLimits limits) {
  require_color(c, color);
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "path order must be >= 1");
  const auto adj = color_adjacency(c, color);
  std::uint64_t budget = limits.node_budget;
  std::vector<int> seq;
  if (!PathSearcher(adj.data(), c.order(), m, &budget).run(&seq)) return std::nullopt;
  return Embedding{TargetSpec{TargetKind::Path, m}, color, std::move(seq)};
}

std::optional<Embedding> find_mono_cycle(const ColoredComplete& c, int color, int len,
                                         SearchLimits limits) {
  require_color(c, color);
  if (len % 2 != 0) throw Error(ErrorCode::OddLength, "cycle length must be even");
  if (len < 4) throw Error(ErrorCode::InvalidArgument, "cycle length must be >= 4");
  const auto adj = color_adjacency(c, color);
  std::uint64_t budget = limits.node_budget;
  std::vector<int> seq;
  if (!CycleSearcher(adj.data(), c.order(), len, &budget).run(&seq)) return std::nullopt;
  return Embedding{TargetSpec{TargetKind::EvenCycle, len}, color, std::move(seq)};
}

std::optional<Embedding> find_mono_matching(const ColoredComplete& c, int color, int size,
                                            SearchLimits) {
  require_color(c, color);
  if (size < 1) throw Error(ErrorCode::InvalidArgument, "matching size must be >= 1");
  const int n = c.order();
  if (2 * size > n) return std::nullopt;
  auto adj = color_adjacency(c, color);
  if (BlossomMatcher(adj.data(), n).solve() < size) return std::nullopt;

  // Greedy lex-least selection: an edge is kept exactly when the rest of the
  // graph still carries a large enough matching.
  std::vector<int> verts;
  std::vector<std::uint64_t> rest(adj);
  int left = size;
  std::uint64_t used = 0;
  while (left > 0) {
    bool advanced = false;
    for (int u = 0; u < n && !advanced; ++u) {
      if (used & bit(u)) continue;
      std::uint64_t nb = adj[u] & ~used & ~(bit(u) | (bit(u) - 1));
      while (nb != 0) {
        const int v = std::countr_zero(nb);
        nb &= nb - 1;
        const std::uint64_t nused = used | bit(u) | bit(v);
        for (int w = 0; w < n; ++w) rest[w] = adj[w] & ~nused;
        std::uint64_t drop = nused;
        while (drop != 0) {
          rest[std::countr_zero(drop)] = 0;
          drop &= drop - 1;
        }
        if (BlossomMatcher(rest.data(), n).solve() >= left - 1) {
          verts.push_back(u);
          verts.push_back(v);
          used = nused;
          --left;
          advanced = true;
          break;
        }
      }
    }
    if (!advanced) return std::nullopt;  // unreachable once the size check passed
  }
  return Embedding{TargetSpec{TargetKind::Matching, 2 * size}, color, std::move(verts)};
}

std::optional<Embedding> has_target(const ColoredComplete& c, int color, const TargetSpec& t,
                                    SearchLimits limits) {
  switch (t.kind) {
    case TargetKind::Path:
      return find_mono_path(c, color, t.order, limits);
    case TargetKind::EvenCycle:
      return find_mono_cycle(c, color, t.order, limits);
    case TargetKind::Matching:
      return find_mono_matching(c, color, t.matching_size(), limits);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown target kind");
}

int max_matching_size(const ColoredComplete& c, int color) {
  require_color(c, color);
  const auto adj = color_adjacency(c, color);
  return BlossomMatcher(adj.data(), c.order()).solve();
}

}  // namespace gallai
