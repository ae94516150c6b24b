#pragma once

#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

enum class TopKind { EvenCycle, OddPath };

// Parameters of a Gallai-Ramsey instance over the family
//   target_j = P_{2*i_j+3} for i_j <= n-2,
//   target_j = C_{2n} or P_{2n+1} (per top) for i_j = n-1.
// i is non-increasing with entries in 0..n-1; color j gets target i_{j}.
struct GRInstance {
  int n = 3;
  std::vector<int> i;
  TopKind top = TopKind::EvenCycle;

  int k() const { return static_cast<int>(i.size()); }
};

// Validates and normalizes (throws InvalidIVector on bad input).
GRInstance make_instance(int n, std::vector<int> i, TopKind top);

// 3 + min{i_1, n*-2} + sum_j i_j, where n* = n+1 exactly when the largest
// target is the odd path P_{2n+1}, else n.
int gr_value(const GRInstance& inst);

enum class Provenance { Proven, Conjectural };

// Values for n in {3,4,5,6} are proven; larger n evaluates the conjectured
// closed form and must be reported as such.
Provenance gr_provenance(const GRInstance& inst);

// The per-color forbidden targets of the instance.
std::vector<TargetSpec> targets_of(const GRInstance& inst);

enum class Family { EvenCycle, EvenPath, Matching, OddPath };

// (n-1)k + n + 1 for even cycles / even paths / matchings (n >= 3),
// (n-1)k + n + 2 for odd paths (n >= 1).
int gr_k_family(int n, int k, Family family);

// Whether (n, family) lies inside the proven range (n <= 6).
bool family_validated(int n, Family family);

// R_2(C_{2n}) = 3n - 1 for n >= 3.
int r2_even_cycle(int n);

// R(P_m, C_{2n}) = 2n + floor(m/2) - 1 for 2n >= m >= 3.
int r_path_cycle(int m, int n);

}  // namespace gallai
