#include "gallai/construct.hpp"

#include <algorithm>
#include <random>

#include "gallai/search.hpp"

namespace gallai {

namespace {

// Deterministic bounded draw; mt19937_64 is fully specified, and avoiding
// std distributions keeps streams identical across standard libraries.
struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::uint64_t next(std::uint64_t bound) { return engine() % bound; }
};

ColoredComplete random_two_colored(int n, int k, Rng& rng) {
  const int a = 1 + static_cast<int>(rng.next(static_cast<std::uint64_t>(k)));
  const int b = 1 + static_cast<int>(rng.next(static_cast<std::uint64_t>(k)));
  ColoredComplete c(n, k);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      c.set_color(u, v, static_cast<Color>(rng.next(2) == 0 ? a : b));
    }
  }
  return c;
}

ColoredComplete random_gallai_rec(int n, int k, int depth, Rng& rng) {
  if (n == 1) return ColoredComplete(1, k);
  if (depth <= 0 || n == 2) return random_two_colored(n, k, rng);

  const int p = 2 + static_cast<int>(rng.next(static_cast<std::uint64_t>(n - 1)));
  // Random composition of n into p positive parts: p-1 distinct cut points.
  std::vector<int> cuts;
  while (static_cast<int>(cuts.size()) < p - 1) {
    const int cut = 1 + static_cast<int>(rng.next(static_cast<std::uint64_t>(n - 1)));
    if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end()) cuts.push_back(cut);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);

  const ColoredComplete base = random_two_colored(p, k, rng);
  std::vector<ColoredComplete> parts;
  int prev = 0;
  for (int cut : cuts) {
    parts.push_back(random_gallai_rec(cut - prev, k, depth - 1, rng));
    prev = cut;
  }
  return substitute(base, parts).coloring;
}

}  // namespace

ColoredComplete random_gallai(int n, int k, int depth, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  Rng rng(seed);
  return random_gallai_rec(n, k, depth, rng);
}

ColoredComplete lower_bound_witness(const GRInstance& inst) {
  const int gr = gr_value(inst);
  const int total = gr - 1;
  const int k = inst.k();
  const std::vector<TargetSpec> targets = targets_of(inst);

  // Base clique in color 1, one vertex short of hosting the color-1 target;
  // then for each further color j a clique of i_j fresh vertices joined to
  // everything older in color j. Every added vertex uses a single color on
  // its back edges, so no rainbow triangle can appear.
  const bool odd_top = inst.top == TopKind::OddPath && inst.i[0] == inst.n - 1;
  const int n_star = odd_top ? inst.n + 1 : inst.n;
  ColoredComplete c(total, k);
  int placed = 2 + std::min(inst.i[0], n_star - 2) + inst.i[0];
  for (int j = 2; j <= k; ++j) {
    const int add = inst.i[j - 1];
    for (int v = placed; v < placed + add; ++v) {
      for (int u = 0; u < v; ++u) {
        c.set_color(u, v, static_cast<Color>(j));
      }
    }
    placed += add;
  }
  if (placed != total)
    throw Error(ErrorCode::ConstructionInvalid, "construction size mismatch");

  if (find_rainbow_triangle(c))
    throw Error(ErrorCode::ConstructionInvalid, "construction produced a rainbow triangle");
  for (int j = 1; j <= k; ++j) {
    if (has_target(c, j, targets[j - 1]))
      throw Error(ErrorCode::ConstructionInvalid,
                  "construction contains " + targets[j - 1].to_string() + " in color " +
                      std::to_string(j));
  }
  return c;
}

}  // namespace gallai
