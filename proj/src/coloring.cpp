#include "gallai/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "gallai/kernels.hpp"

namespace gallai {

ColoredComplete::ColoredComplete(int n, int k, Color fill) : n_(n), k_(k) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "vertex count must be >= 1");
  if (n > kMaxVertices)
    throw Error(ErrorCode::TooLarge,
                "vertex count " + std::to_string(n) + " exceeds the supported maximum " +
                    std::to_string(kMaxVertices));
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "color count must be >= 1");
  if (k > kMaxColors) throw Error(ErrorCode::TooLarge, "color count exceeds palette limit");
  if (fill < 1 || fill > k) throw Error(ErrorCode::ColorOutOfRange, "fill color outside 1..k");
  tri_.assign(static_cast<std::size_t>(edge_count()), fill);
  rows_.assign(static_cast<std::size_t>(n_) * n_, fill);
  for (int v = 0; v < n_; ++v) rows_[static_cast<std::size_t>(v) * n_ + v] = 0;
}

void ColoredComplete::set_color(int u, int v, Color c) {
  if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loops have no color");
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(ErrorCode::VertexOutOfRange, "vertex outside 0..n-1");
  if (c < 1 || c > k_) throw Error(ErrorCode::ColorOutOfRange, "color outside 1..k");
  tri_[static_cast<std::size_t>(edge_index(u, v))] = c;
  rows_[static_cast<std::size_t>(u) * n_ + v] = c;
  rows_[static_cast<std::size_t>(v) * n_ + u] = c;
}

std::pair<int, int> ColoredComplete::edge_from_index(int e) {
  const int v = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * e)) / 2.0);
  // Guard against rounding at triangular-number boundaries.
  int vv = v;
  while (vv * (vv - 1) / 2 > e) --vv;
  while ((vv + 1) * vv / 2 <= e) ++vv;
  return {e - vv * (vv - 1) / 2, vv};
}

std::vector<int> ColoredComplete::used_colors() const {
  std::vector<bool> seen(static_cast<std::size_t>(k_) + 1, false);
  for (Color c : tri_) seen[c] = true;
  std::vector<int> out;
  for (int c = 1; c <= k_; ++c) {
    if (seen[c]) out.push_back(c);
  }
  return out;
}

ColoredComplete make_coloring(int n, int k, std::span<const EdgeColor> edges) {
  ColoredComplete c(n, k);
  std::vector<bool> covered(static_cast<std::size_t>(c.edge_count()), false);
  for (const EdgeColor& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    if (e.color < 1 || e.color > k)
      throw Error(ErrorCode::ColorOutOfRange,
                  "color " + std::to_string(e.color) + " on edge (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ")");
    const int idx = ColoredComplete::edge_index(e.u, e.v);
    if (covered[idx])
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") listed twice");
    covered[idx] = true;
    c.set_color(e.u, e.v, static_cast<Color>(e.color));
  }
  for (int idx = 0; idx < c.edge_count(); ++idx) {
    if (!covered[idx]) {
      auto [u, v] = ColoredComplete::edge_from_index(idx);
      throw Error(ErrorCode::MissingEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") missing");
    }
  }
  return c;
}

std::optional<std::array<int, 3>> find_rainbow_triangle(const ColoredComplete& c) {
  const int n = c.order();
  const auto& kern = kernels::active();
  for (int u = 0; u + 2 < n; ++u) {
    const Color* row_u = c.row(u);
    for (int v = u + 1; v + 1 < n; ++v) {
      const Color uv = row_u[v];
      const int hit = kern.rainbow_scan(row_u + v + 1, c.row(v) + v + 1, uv, n - v - 1);
      if (hit >= 0) return std::array<int, 3>{u, v, v + 1 + hit};
    }
  }
  return std::nullopt;
}

TargetSpec TargetSpec::path(int order) {
  if (order < 3) throw Error(ErrorCode::InvalidArgument, "path target needs order >= 3");
  return {TargetKind::Path, order};
}

TargetSpec TargetSpec::even_cycle(int order) {
  if (order % 2 != 0) throw Error(ErrorCode::OddLength, "cycle target must have even order");
  if (order < 6) throw Error(ErrorCode::InvalidArgument, "cycle target needs order >= 6");
  return {TargetKind::EvenCycle, order};
}

TargetSpec TargetSpec::matching(int size) {
  if (size < 1) throw Error(ErrorCode::InvalidArgument, "matching target needs size >= 1");
  return {TargetKind::Matching, 2 * size};
}

std::string TargetSpec::to_string() const {
  switch (kind) {
    case TargetKind::Path:
      return "P" + std::to_string(order);
    case TargetKind::EvenCycle:
      return "C" + std::to_string(order);
    case TargetKind::Matching:
      return "M" + std::to_string(order / 2);
  }
  return "?";
}

TargetSpec TargetSpec::parse(std::string_view s) {
  if (s.size() < 2) throw Error(ErrorCode::SyntaxError, "target too short: '" + std::string(s) + "'");
  int value = 0;
  const auto res = std::from_chars(s.data() + 1, s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw Error(ErrorCode::SyntaxError, "bad target number in '" + std::string(s) + "'");
  switch (s[0]) {
    case 'P':
    case 'p':
      return path(value);
    case 'C':
    case 'c':
      return even_cycle(value);
    case 'M':
    case 'm':
      return matching(value);
    default:
      throw Error(ErrorCode::SyntaxError, "unknown target kind '" + std::string(s) + "'");
  }
}

bool embedding_valid(const ColoredComplete& c, const Embedding& e) {
  const auto& vs = e.vertices;
  if (static_cast<int>(vs.size()) != e.target.order) return false;
  std::uint64_t seen = 0;
  for (int v : vs) {
    if (v < 0 || v >= c.order()) return false;
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (seen & bit) return false;
    seen |= bit;
  }
  const auto edge_ok = [&](int a, int b) { return c.color(vs[a], vs[b]) == e.color; };
  switch (e.target.kind) {
    case TargetKind::Path:
      for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (!edge_ok(static_cast<int>(i), static_cast<int>(i + 1))) return false;
      }
      return true;
    case TargetKind::EvenCycle:
      for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (!edge_ok(static_cast<int>(i), static_cast<int>(i + 1))) return false;
      }
      return edge_ok(static_cast<int>(vs.size()) - 1, 0);
    case TargetKind::Matching:
      for (std::size_t i = 0; i + 1 < vs.size(); i += 2) {
        if (!edge_ok(static_cast<int>(i), static_cast<int>(i + 1))) return false;
      }
      return true;
  }
  return false;
}

SubstitutionResult substitute(const ColoredComplete& base,
                              std::span<const ColoredComplete> parts) {
  if (parts.empty()) throw Error(ErrorCode::EmptyPartsList, "substitution needs parts");
  if (static_cast<int>(parts.size()) != base.order())
    throw Error(ErrorCode::InvalidArgument, "need exactly one part per base vertex");

  int total = 0;
  int k = base.colors();
  for (const ColoredComplete& p : parts) {
    total += p.order();
    k = std::max(k, p.colors());
  }

  ColoredComplete out(total, k);
  std::vector<std::pair<int, int>> blocks;
  blocks.reserve(parts.size());
  int offset = 0;
  for (const ColoredComplete& p : parts) {
    blocks.emplace_back(offset, offset + p.order());
    for (int u = 0; u < p.order(); ++u) {
      for (int v = u + 1; v < p.order(); ++v) {
        out.set_color(offset + u, offset + v, p.color(u, v));
      }
    }
    offset += p.order();
  }
  for (int i = 0; i < base.order(); ++i) {
    for (int j = i + 1; j < base.order(); ++j) {
      const Color c = base.color(i, j);
      for (int u = blocks[i].first; u < blocks[i].second; ++u) {
        for (int v = blocks[j].first; v < blocks[j].second; ++v) {
          out.set_color(u, v, c);
        }
      }
    }
  }
  return {std::move(out), std::move(blocks)};
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptyPartsList: return "EmptyPartsList";
    case ErrorCode::NotGallai: return "NotGallai";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotMonochromaticBetween: return "NotMonochromaticBetween";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::InvalidIVector: return "InvalidIVector";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::ConstructionInvalid: return "ConstructionInvalid";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace gallai
