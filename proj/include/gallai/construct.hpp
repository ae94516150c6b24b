#pragma once

#include <cstdint>

#include "gallai/coloring.hpp"
#include "gallai/formulas.hpp"

namespace gallai {

// A certified extremal coloring on gr_value(inst) - 1 vertices with k colors:
// rainbow-free and free of target_j in color j for every j. The construction
// checks its own output and throws ConstructionInvalid rather than return an
// uncertified coloring. Deterministic.
ColoredComplete lower_bound_witness(const GRInstance& inst);

// A random Gallai coloring built by recursive substitution of random
// 2-colored bases; rainbow-freeness is structural. Deterministic in the seed.
// depth = 0 produces a plain random 2-colored K_n.
ColoredComplete random_gallai(int n, int k, int depth, std::uint64_t seed);

}  // namespace gallai
