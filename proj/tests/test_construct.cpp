#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gallai/construct.hpp"
#include "gallai/search.hpp"
#include "gallai/verify.hpp"
#include "test_util.hpp"

using namespace gallai;

TEST_CASE("single-color witness is a clique one vertex short of its target") {
  const GRInstance inst = make_instance(5, {4}, TopKind::EvenCycle);
  const ColoredComplete w = lower_bound_witness(inst);
  CHECK(w.order() == 9);
  CHECK(w.used_colors() == std::vector<int>{1});
  CHECK_FALSE(find_mono_cycle(w, 1, 10).has_value());
  CHECK(find_mono_path(w, 1, 9).has_value());  // sharp: one more vertex would close it
}

TEST_CASE("two-color even-cycle witness at thirteen vertices") {
  const GRInstance inst = make_instance(5, {4, 4}, TopKind::EvenCycle);
  const ColoredComplete w = lower_bound_witness(inst);
  CHECK(w.order() == 13);
  CHECK_FALSE(find_rainbow_triangle(w).has_value());
  CHECK_FALSE(find_mono_cycle(w, 1, 10).has_value());
  CHECK_FALSE(find_mono_cycle(w, 2, 10).has_value());
}

TEST_CASE("three-color witness for n=6 has 21 vertices") {
  const GRInstance inst = make_instance(6, {5, 5, 5}, TopKind::EvenCycle);
  const ColoredComplete w = lower_bound_witness(inst);
  CHECK(w.order() == gr_k_family(6, 3, Family::EvenCycle) - 1);
  CHECK(w.order() == 21);
  for (int j = 1; j <= 3; ++j) {
    CHECK_FALSE(find_mono_cycle(w, j, 12).has_value());
  }
}

TEST_CASE("odd-path top gets the extra vertex and stays sharp") {
  const GRInstance inst = make_instance(5, {4}, TopKind::OddPath);
  const ColoredComplete w = lower_bound_witness(inst);
  CHECK(w.order() == 10);
  CHECK_FALSE(find_mono_path(w, 1, 11).has_value());
  CHECK(find_mono_path(w, 1, 10).has_value());
}

TEST_CASE("witness construction is deterministic") {
  const GRInstance inst = make_instance(6, {5, 3, 1}, TopKind::EvenCycle);
  CHECK(lower_bound_witness(inst) == lower_bound_witness(inst));
}

TEST_CASE("witness certification across a parameter grid") {
  std::mt19937_64 rng(31337);
  int checked = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const TopKind top : {TopKind::EvenCycle, TopKind::OddPath}) {
      for (int k = 1; k <= 5; ++k) {
        for (int rep = 0; rep < 3; ++rep) {
          std::vector<int> iv(k);
          for (int j = 0; j < k; ++j) iv[j] = static_cast<int>(rng() % n);
          std::sort(iv.rbegin(), iv.rend());
          const GRInstance inst = make_instance(n, iv, top);
          const ColoredComplete w = lower_bound_witness(inst);
          CHECK(w.order() == gr_value(inst) - 1);
          const auto report = check_bad_coloring(w, targets_of(inst));
          CHECK(report.verdict == Verdict::Verified);
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 4 * 2 * 5 * 3);
}

TEST_CASE("random gallai basics") {
  CHECK(random_gallai(1, 3, 2, 5).order() == 1);

  const ColoredComplete flat = random_gallai(10, 5, 0, 9);
  CHECK(flat.used_colors().size() <= 2);

  const ColoredComplete deep = random_gallai(24, 4, 3, 7);
  CHECK(deep.order() == 24);
  CHECK(deep.colors() == 4);
  CHECK_FALSE(find_rainbow_triangle(deep).has_value());
  CHECK_FALSE(testutil::naive_rainbow(deep).has_value());
}

TEST_CASE("random gallai is deterministic in the seed") {
  CHECK(random_gallai(15, 4, 2, 123) == random_gallai(15, 4, 2, 123));
  CHECK_FALSE(random_gallai(15, 4, 2, 123) == random_gallai(15, 4, 2, 124));
}

TEST_CASE("random gallai never produces rainbow triangles") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 10'000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const int k = 1 + static_cast<int>(rng() % 5);
    const int depth = static_cast<int>(rng() % 4);
    const ColoredComplete c = random_gallai(n, k, depth, rng());
    CHECK_FALSE(testutil::naive_rainbow(c).has_value());
  }
}
