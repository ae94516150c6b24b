#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gallai/construct.hpp"
#include "gallai/search.hpp"
#include "gallai/verify.hpp"
#include "test_util.hpp"

using namespace gallai;

namespace {

// Count of lex-minimal colorings by brute force over all k^E colorings and
// all vertex permutations.
std::uint64_t brute_canonical_count(int n, int k) {
  const int E = n * (n - 1) / 2;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::uint64_t total = 1;
  for (int e = 0; e < E; ++e) total *= k;

  std::uint64_t count = 0;
  std::vector<int> col(E);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int e = 0; e < E; ++e) {
      col[e] = static_cast<int>(rest % k);
      rest /= k;
    }
    bool minimal = true;
    for (const auto& p : perms) {
      for (int e = 0; e < E; ++e) {
        const auto [u, v] = ColoredComplete::edge_from_index(e);
        const int mapped = col[ColoredComplete::edge_index(p[u], p[v])];
        if (mapped != col[e]) {
          minimal &= mapped > col[e];
          break;
        }
      }
      if (!minimal) break;
    }
    if (minimal) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("check_bad_coloring validates and refutes") {
  const GRInstance inst = make_instance(5, {4, 4}, TopKind::EvenCycle);
  const ColoredComplete w = lower_bound_witness(inst);
  const auto targets = targets_of(inst);
  CHECK(check_bad_coloring(w, targets).verdict == Verdict::Verified);

  const std::vector<TargetSpec> c10{TargetSpec::even_cycle(10)};
  const auto refuted = check_bad_coloring(testutil::mono(10), c10);
  CHECK(refuted.verdict == Verdict::Refuted);
  REQUIRE(refuted.embedding.has_value());
  CHECK(embedding_valid(testutil::mono(10), *refuted.embedding));

  // Recoloring two spokes into the base clique closes a color-1 C10.
  ColoredComplete tampered = w;
  tampered.set_color(0, 9, 1);
  tampered.set_color(1, 9, 1);
  const auto broken = check_bad_coloring(tampered, targets);
  CHECK(broken.verdict == Verdict::Refuted);
  REQUIRE(broken.embedding.has_value());
  CHECK(broken.embedding->target == TargetSpec::even_cycle(10));

  // A rainbow triangle refutes regardless of targets.
  const GRInstance inst3 = make_instance(5, {4, 4, 1}, TopKind::EvenCycle);
  ColoredComplete w3 = lower_bound_witness(inst3);
  w3.set_color(0, 9, 3);  // base-block vertex pair (0,9) is color 1/2 territory
  w3.set_color(1, 9, 2);
  const auto rb = check_bad_coloring(w3, targets_of(inst3));
  CHECK(rb.verdict == Verdict::Refuted);
}

TEST_CASE("exhaustive ramsey2 at the path-cycle points") {
  const TargetSpec p3 = TargetSpec::path(3);
  const TargetSpec p4 = TargetSpec::path(4);
  const TargetSpec c6 = TargetSpec::even_cycle(6);

  CHECK(exhaustive_ramsey2(p3, c6, 6).verdict == Verdict::Verified);
  const auto below = exhaustive_ramsey2(p3, c6, 5);
  CHECK(below.verdict == Verdict::Refuted);
  REQUIRE(below.witness.has_value());
  const std::vector<TargetSpec> ts{p3, c6};
  CHECK(check_bad_coloring(*below.witness, ts).verdict == Verdict::Verified);

  CHECK(exhaustive_ramsey2(p4, c6, 7).verdict == Verdict::Verified);
  CHECK(exhaustive_ramsey2(p4, c6, 6).verdict == Verdict::Refuted);

  CHECK(exhaustive_ramsey2(p3, p3, 3).verdict == Verdict::Verified);
  const auto k2 = exhaustive_ramsey2(p3, p3, 2);
  CHECK(k2.verdict == Verdict::Refuted);
  CHECK(k2.witness->order() == 2);

  CHECK_THROWS_AS(static_cast<void>(exhaustive_ramsey2(p3, c6, kRamsey2Cap + 1)), Error);

  EngineOptions tiny;
  tiny.node_budget = 4;
  CHECK_THROWS_AS(static_cast<void>(exhaustive_ramsey2(p4, c6, 7, tiny)), Error);
}

TEST_CASE("search_bad_gallai on tiny closed points") {
  const TargetSpec p3 = TargetSpec::path(3);
  const std::vector<TargetSpec> three{p3, p3, p3};
  CHECK(search_bad_gallai(3, three).verdict == Verdict::Verified);

  const std::vector<TargetSpec> two{p3, p3};
  const auto found = search_bad_gallai(2, two);
  CHECK(found.verdict == Verdict::Refuted);
  REQUIRE(found.witness.has_value());
  CHECK(found.witness->order() == 2);

  const std::vector<TargetSpec> upper{TargetSpec::path(5), p3};
  CHECK(search_bad_gallai(5, upper).verdict == Verdict::Verified);
}

TEST_CASE("search_bad_gallai finds the extremal witness size") {
  const GRInstance inst = make_instance(5, {4, 4}, TopKind::EvenCycle);
  const auto targets = targets_of(inst);
  const auto report = search_bad_gallai(gr_value(inst) - 1, targets);
  CHECK(report.verdict == Verdict::Refuted);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->order() == 13);
  CHECK(check_bad_coloring(*report.witness, targets).verdict == Verdict::Verified);
}

TEST_CASE("budget exhaustion is reported, never converted to Verified") {
  const GRInstance inst = make_instance(5, {4, 4, 4}, TopKind::EvenCycle);
  const auto targets = targets_of(inst);
  EngineOptions opt;
  opt.node_budget = 2000;
  const auto report = search_bad_gallai(18, targets, opt);
  CHECK(report.verdict == Verdict::ExhaustedBudget);
}

TEST_CASE("verify_gr_point on fully closable points") {
  const auto p33 = verify_gr_point(make_instance(5, {0, 0}, TopKind::EvenCycle));
  CHECK(p33.gr == 3);
  CHECK(p33.lower.verdict == Verdict::Verified);
  CHECK(p33.upper.verdict == Verdict::Verified);
  CHECK(p33.overall == Verdict::Verified);

  const auto p53 = verify_gr_point(make_instance(3, {1, 0}, TopKind::EvenCycle));
  CHECK(p53.gr == 5);
  CHECK(p53.overall == Verdict::Verified);
}

TEST_CASE("verify_gr_point reports partial verification under budget") {
  EngineOptions opt;
  opt.node_budget = 1000;
  const auto report = verify_gr_point(make_instance(5, {4, 4, 4}, TopKind::EvenCycle), opt);
  CHECK(report.lower.verdict == Verdict::Verified);
  CHECK(report.upper.verdict == Verdict::ExhaustedBudget);
  CHECK(report.overall == Verdict::ExhaustedBudget);
}

TEST_CASE("canonical counts match brute force") {
  CHECK(count_canonical_colorings(3, 2) == brute_canonical_count(3, 2));
  CHECK(count_canonical_colorings(4, 2) == brute_canonical_count(4, 2));
  CHECK(count_canonical_colorings(5, 2) == brute_canonical_count(5, 2));
  CHECK(count_canonical_colorings(4, 3) == brute_canonical_count(4, 3));
}

TEST_CASE("canonical 2-coloring counts equal the graph counts up to isomorphism") {
  // 2-colorings of K_n up to vertex permutation correspond to graphs on n
  // unlabeled vertices: 1, 2, 4, 11, 34, 156, 1044, ...
  const std::uint64_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_canonical_colorings(n, 2) == expected[n - 1]);
  }
}

namespace {

bool naive_is_bad(const ColoredComplete& c, std::span<const TargetSpec> targets,
                  bool require_gallai) {
  if (require_gallai && testutil::naive_rainbow(c)) return false;
  for (int j = 1; j <= c.colors(); ++j) {
    const TargetSpec& t = targets[j - 1];
    switch (t.kind) {
      case TargetKind::Path:
        if (testutil::naive_has_path(c, j, t.order)) return false;
        break;
      case TargetKind::EvenCycle:
        if (testutil::naive_has_cycle(c, j, t.order)) return false;
        break;
      case TargetKind::Matching:
        if (testutil::naive_max_matching(c, j) >= t.matching_size()) return false;
        break;
    }
  }
  return true;
}

// Exhaustive ground truth over every k-coloring of K_n.
bool brute_bad_exists(int n, std::span<const TargetSpec> targets, bool require_gallai) {
  const int k = static_cast<int>(targets.size());
  const int E = n * (n - 1) / 2;
  std::uint64_t total = 1;
  for (int e = 0; e < E; ++e) total *= k;
  for (std::uint64_t code = 0; code < total; ++code) {
    ColoredComplete c(n, k);
    std::uint64_t rest = code;
    for (int e = 0; e < E; ++e) {
      const auto [u, v] = ColoredComplete::edge_from_index(e);
      c.set_color(u, v, static_cast<Color>(1 + rest % k));
      rest /= k;
    }
    if (naive_is_bad(c, targets, require_gallai)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("ramsey2 verdicts match brute-force enumeration") {
  const std::vector<std::pair<TargetSpec, TargetSpec>> pairs{
      {TargetSpec::path(3), TargetSpec::path(3)},
      {TargetSpec::path(4), TargetSpec::path(3)},
      {TargetSpec::path(5), TargetSpec::path(4)},
      {TargetSpec::matching(2), TargetSpec::path(3)},
      {TargetSpec::path(3), TargetSpec::even_cycle(6)},
  };
  for (const auto& [t1, t2] : pairs) {
    for (int N = 2; N <= 5; ++N) {
      const std::vector<TargetSpec> ts{t1, t2};
      const bool bad_exists = brute_bad_exists(N, ts, false);
      const auto report = exhaustive_ramsey2(t1, t2, N);
      CHECK(report.verdict == (bad_exists ? Verdict::Refuted : Verdict::Verified));
    }
  }
}

TEST_CASE("bad-gallai verdicts match brute-force enumeration") {
  const TargetSpec p3 = TargetSpec::path(3);
  const TargetSpec p5 = TargetSpec::path(5);
  const TargetSpec m2 = TargetSpec::matching(2);
  const std::vector<std::vector<TargetSpec>> sets{
      {p3, p3, p3},
      {p5, p3, p3},
      {m2, p3, p3},
      {p5, p5, p3},
  };
  for (const auto& ts : sets) {
    for (int N = 2; N <= 5; ++N) {
      const bool bad_exists = brute_bad_exists(N, ts, true);
      const auto report = search_bad_gallai(N, ts);
      CHECK(report.verdict == (bad_exists ? Verdict::Refuted : Verdict::Verified));
      if (report.witness) {
        CHECK(naive_is_bad(*report.witness, ts, true));
      }
    }
  }
}

TEST_CASE("search results are deterministic and thread-count independent") {
  const GRInstance inst = make_instance(5, {4, 4}, TopKind::EvenCycle);
  const auto targets = targets_of(inst);
  const auto a = search_bad_gallai(13, targets);
  const auto b = search_bad_gallai(13, targets);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(*a.witness == *b.witness);

  EngineOptions threaded;
  threaded.threads = 2;
  const auto c = search_bad_gallai(13, targets, threaded);
  CHECK(c.verdict == a.verdict);
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == *a.witness);

  const auto r1 = exhaustive_ramsey2(TargetSpec::path(4), TargetSpec::even_cycle(6), 7);
  const auto r2 = exhaustive_ramsey2(TargetSpec::path(4), TargetSpec::even_cycle(6), 7, threaded);
  CHECK(r1.verdict == r2.verdict);
}

TEST_CASE("agreement between formula and exhaustive search on small points") {
  // Every path-cycle point with value <= 7 verifies at the formula value and
  // refutes one below.
  for (int n = 3; n <= 3; ++n) {
    for (int m = 3; m <= 2 * n; ++m) {
      const int r = r_path_cycle(m, n);
      if (r > 7) continue;
      const TargetSpec pm = TargetSpec::path(m);
      const TargetSpec c2n = TargetSpec::even_cycle(2 * n);
      CHECK(exhaustive_ramsey2(pm, c2n, r).verdict == Verdict::Verified);
      CHECK(exhaustive_ramsey2(pm, c2n, r - 1).verdict == Verdict::Refuted);
    }
  }
}

TEST_CASE("nontrivial points close completely") {
  // Two-color cycle point: the full enumeration of Gallai (= all) 2-colorings
  // of K_8 confirms the closed form 3n-1 at n=3.
  const auto c6c6 = verify_gr_point(make_instance(3, {2, 2}, TopKind::EvenCycle));
  CHECK(c6c6.gr == 8);
  CHECK(c6c6.gr == r2_even_cycle(3));
  CHECK(c6c6.overall == Verdict::Verified);

  // The same target pair (P7, P7) reached through two different instances
  // must close at the same value.
  const auto p7_as_path = verify_gr_point(make_instance(4, {2, 2}, TopKind::EvenCycle));
  const auto p7_as_top = verify_gr_point(make_instance(3, {2, 2}, TopKind::OddPath));
  CHECK(p7_as_path.gr == 9);
  CHECK(p7_as_top.gr == 9);
  CHECK(p7_as_path.overall == Verdict::Verified);
  CHECK(p7_as_top.overall == Verdict::Verified);

  // Three-color points where rainbow pruning carries real weight.
  const auto mixed = verify_gr_point(make_instance(3, {2, 1, 1}, TopKind::EvenCycle));
  CHECK(mixed.gr == 8);
  CHECK(mixed.overall == Verdict::Verified);

  const auto c6k3 = verify_gr_point(make_instance(3, {2, 2, 2}, TopKind::EvenCycle));
  CHECK(c6k3.gr == 10);
  CHECK(c6k3.gr == gr_k_family(3, 3, Family::EvenCycle));
  CHECK(c6k3.overall == Verdict::Verified);

  // The next two-color cycle point: all 2-colorings of K_11 exhausted.
  const auto c8c8 = verify_gr_point(make_instance(4, {3, 3}, TopKind::EvenCycle));
  CHECK(c8c8.gr == 11);
  CHECK(c8c8.gr == r2_even_cycle(4));
  CHECK(c8c8.overall == Verdict::Verified);
}

TEST_CASE("matching points close at the family value") {
  // Matchings appear as verification targets only; the value (n-1)k+n+1
  // still pins both sides of the search.
  const TargetSpec m3 = TargetSpec::matching(3);
  const std::vector<TargetSpec> ts{m3, m3};
  const int value = gr_k_family(3, 2, Family::Matching);
  CHECK(value == 8);
  CHECK(search_bad_gallai(value, ts).verdict == Verdict::Verified);
  const auto below = search_bad_gallai(value - 1, ts);
  CHECK(below.verdict == Verdict::Refuted);
  REQUIRE(below.witness.has_value());
  CHECK(check_bad_coloring(*below.witness, ts).verdict == Verdict::Verified);
}

TEST_CASE("verify_gr_point agrees with gr_value on every tiny instance") {
  // All instances with gr_value <= 6 and k <= 3 close completely.
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= 3; ++k) {
      std::vector<int> iv(k, 0);
      const auto walk = [&](auto&& self, int pos, int maxval) -> void {
        if (pos == k) {
          for (const TopKind top : {TopKind::EvenCycle, TopKind::OddPath}) {
            const GRInstance inst = make_instance(n, iv, top);
            if (gr_value(inst) > 6) continue;
            const auto report = verify_gr_point(inst);
            CHECK(report.overall == Verdict::Verified);
          }
          return;
        }
        for (int v = 0; v <= maxval; ++v) {
          iv[pos] = v;
          self(self, pos + 1, v);
        }
      };
      walk(walk, 0, n - 1);
    }
  }
}
