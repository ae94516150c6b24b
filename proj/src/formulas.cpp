#include "gallai/formulas.hpp"

#include <algorithm>

namespace gallai {

namespace {

void validate(const GRInstance& inst) {
  if (inst.n < 3) throw Error(ErrorCode::InvalidIVector, "n must be >= 3");
  if (inst.i.empty()) throw Error(ErrorCode::InvalidIVector, "need at least one entry");
  for (std::size_t j = 0; j < inst.i.size(); ++j) {
    if (inst.i[j] < 0 || inst.i[j] > inst.n - 1)
      throw Error(ErrorCode::InvalidIVector,
                  "entry " + std::to_string(inst.i[j]) + " outside 0..n-1");
    if (j > 0 && inst.i[j] > inst.i[j - 1])
      throw Error(ErrorCode::InvalidIVector, "entries must be non-increasing");
  }
}

int n_star(const GRInstance& inst) {
  const bool odd_path_top = inst.top == TopKind::OddPath && inst.i[0] == inst.n - 1;
  return odd_path_top ? inst.n + 1 : inst.n;
}

}  // namespace

GRInstance make_instance(int n, std::vector<int> i, TopKind top) {
  GRInstance inst{n, std::move(i), top};
  validate(inst);
  return inst;
}

int gr_value(const GRInstance& inst) {
  validate(inst);
  int sum = 0;
  for (int ij : inst.i) sum += ij;
  return 3 + std::min(inst.i[0], n_star(inst) - 2) + sum;
}

Provenance gr_provenance(const GRInstance& inst) {
  return inst.n <= 6 ? Provenance::Proven : Provenance::Conjectural;
}

std::vector<TargetSpec> targets_of(const GRInstance& inst) {
  validate(inst);
  std::vector<TargetSpec> out;
  out.reserve(inst.i.size());
  for (int ij : inst.i) {
    if (ij <= inst.n - 2) {
      out.push_back(TargetSpec::path(2 * ij + 3));
    } else if (inst.top == TopKind::EvenCycle) {
      out.push_back(TargetSpec::even_cycle(2 * inst.n));
    } else {
      out.push_back(TargetSpec::path(2 * inst.n + 1));
    }
  }
  return out;
}

int gr_k_family(int n, int k, Family family) {
  if (k < 1) throw Error(ErrorCode::RangeViolation, "k must be >= 1");
  if (family == Family::OddPath) {
    if (n < 1) throw Error(ErrorCode::RangeViolation, "odd-path family needs n >= 1");
    return (n - 1) * k + n + 2;
  }
  if (n < 3) throw Error(ErrorCode::RangeViolation, "family needs n >= 3");
  return (n - 1) * k + n + 1;
}

bool family_validated(int n, Family) { return n <= 6; }

int r2_even_cycle(int n) {
  if (n < 3) throw Error(ErrorCode::RangeViolation, "n must be >= 3");
  return 3 * n - 1;
}

int r_path_cycle(int m, int n) {
  if (n < 3 || m < 3 || m > 2 * n)
    throw Error(ErrorCode::RangeViolation, "need 2n >= m >= 3 and n >= 3");
  return 2 * n + m / 2 - 1;
}

}  // namespace gallai
