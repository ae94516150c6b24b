#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gallai/formulas.hpp"

using namespace gallai;

TEST_CASE("gr_value on pinned instances") {
  CHECK(gr_value(make_instance(5, {4, 4, 4}, TopKind::EvenCycle)) == 18);
  CHECK(gr_value(make_instance(6, {5, 5}, TopKind::EvenCycle)) == 17);
  CHECK(gr_value(make_instance(6, {5, 5}, TopKind::EvenCycle)) == r2_even_cycle(6));
  CHECK(gr_value(make_instance(5, {0, 0, 0}, TopKind::EvenCycle)) == 3);
  CHECK(gr_value(make_instance(5, {4}, TopKind::EvenCycle)) == 10);
  CHECK(gr_value(make_instance(5, {4}, TopKind::OddPath)) == 11);
  CHECK(gr_value(make_instance(3, {1, 0}, TopKind::EvenCycle)) == 5);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(static_cast<void>(make_instance(2, {1}, TopKind::EvenCycle)), Error);
  CHECK_THROWS_AS(static_cast<void>(make_instance(5, {}, TopKind::EvenCycle)), Error);
  CHECK_THROWS_AS(static_cast<void>(make_instance(5, {2, 3}, TopKind::EvenCycle)), Error);
  CHECK_THROWS_AS(static_cast<void>(make_instance(5, {5}, TopKind::EvenCycle)), Error);
  CHECK_THROWS_AS(static_cast<void>(make_instance(5, {-1}, TopKind::EvenCycle)), Error);
  try {
    static_cast<void>(make_instance(5, {2, 3}, TopKind::EvenCycle));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidIVector);
  }
}

TEST_CASE("family values") {
  CHECK(gr_k_family(6, 3, Family::EvenCycle) == 22);
  CHECK(gr_k_family(5, 1, Family::OddPath) == 11);
  CHECK(gr_k_family(6, 2, Family::EvenCycle) == r2_even_cycle(6));
  CHECK(gr_k_family(1, 7, Family::OddPath) == 3);  // P_3 is constant in k
  for (int k = 1; k <= 10; ++k) {
    CHECK(gr_k_family(5, k, Family::EvenCycle) == 4 * k + 6);
    CHECK(gr_k_family(5, k, Family::EvenPath) == 4 * k + 6);
    CHECK(gr_k_family(5, k, Family::Matching) == 4 * k + 6);
    CHECK(gr_k_family(5, k, Family::OddPath) == 4 * k + 7);
  }
  CHECK_THROWS_AS(static_cast<void>(gr_k_family(2, 3, Family::EvenCycle)), Error);
  CHECK_THROWS_AS(static_cast<void>(gr_k_family(0, 3, Family::OddPath)), Error);
  CHECK(family_validated(6, Family::EvenCycle));
  CHECK_FALSE(family_validated(7, Family::EvenCycle));
}

TEST_CASE("two-color Ramsey formulas") {
  CHECK(r2_even_cycle(3) == 8);
  CHECK(r2_even_cycle(5) == 14);
  CHECK(r2_even_cycle(6) == 17);
  CHECK(r_path_cycle(3, 3) == 6);
  CHECK(r_path_cycle(7, 5) == 12);
  for (int n = 3; n <= 8; ++n) {
    CHECK(r_path_cycle(2 * n, n) == r2_even_cycle(n));
  }
  CHECK_THROWS_AS(static_cast<void>(r2_even_cycle(2)), Error);
  CHECK_THROWS_AS(static_cast<void>(r_path_cycle(2, 4)), Error);
  CHECK_THROWS_AS(static_cast<void>(r_path_cycle(9, 4)), Error);
}

TEST_CASE("gr_value is strictly increasing in each entry") {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k <= 4; ++k) {
      // Walk all non-increasing vectors by recursion.
      std::vector<int> iv(k, 0);
      const auto walk = [&](auto&& self, int pos, int maxval) -> void {
        if (pos == k) {
          const GRInstance inst = make_instance(n, iv, TopKind::EvenCycle);
          const int base = gr_value(inst);
          for (int j = 0; j < k; ++j) {
            std::vector<int> bumped = iv;
            bumped[j] += 1;
            std::sort(bumped.rbegin(), bumped.rend());
            if (bumped[0] > n - 1) continue;
            CHECK(gr_value(make_instance(n, bumped, TopKind::EvenCycle)) > base);
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

TEST_CASE("k=1 value equals the order of the single target") {
  for (int n = 3; n <= 8; ++n) {
    for (int i1 = 0; i1 <= n - 2; ++i1) {
      CHECK(gr_value(make_instance(n, {i1}, TopKind::EvenCycle)) == 2 * i1 + 3);
    }
    CHECK(gr_value(make_instance(n, {n - 1}, TopKind::EvenCycle)) == 2 * n);
    CHECK(gr_value(make_instance(n, {n - 1}, TopKind::OddPath)) == 2 * n + 1);
  }
}

TEST_CASE("all-top instances match the family formula") {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; k <= 6; ++k) {
      const std::vector<int> iv(k, n - 1);
      CHECK(gr_value(make_instance(n, iv, TopKind::EvenCycle)) ==
            gr_k_family(n, k, Family::EvenCycle));
      CHECK(gr_value(make_instance(n, iv, TopKind::OddPath)) ==
            gr_k_family(n, k, Family::OddPath));
    }
  }
}

TEST_CASE("k=2 values agree with the path-cycle Ramsey formula") {
  for (int n = 3; n <= 6; ++n) {
    for (int i2 = 0; i2 <= n - 2; ++i2) {
      const int gr = gr_value(make_instance(n, {n - 1, i2}, TopKind::EvenCycle));
      CHECK(gr == r_path_cycle(2 * i2 + 3, n));
    }
    CHECK(gr_value(make_instance(n, {n - 1, n - 1}, TopKind::EvenCycle)) == r2_even_cycle(n));
  }
}

TEST_CASE("provenance flags") {
  CHECK(gr_provenance(make_instance(5, {4, 4}, TopKind::EvenCycle)) == Provenance::Proven);
  CHECK(gr_provenance(make_instance(3, {2, 1}, TopKind::EvenCycle)) == Provenance::Proven);
  CHECK(gr_provenance(make_instance(7, {6, 6}, TopKind::EvenCycle)) == Provenance::Conjectural);
}

TEST_CASE("targets of an instance") {
  const auto targets = targets_of(make_instance(5, {4, 3, 0}, TopKind::EvenCycle));
  REQUIRE(targets.size() == 3);
  CHECK(targets[0] == TargetSpec::even_cycle(10));
  CHECK(targets[1] == TargetSpec::path(9));
  CHECK(targets[2] == TargetSpec::path(3));
  const auto odd = targets_of(make_instance(5, {4}, TopKind::OddPath));
  CHECK(odd[0] == TargetSpec::path(11));
}
