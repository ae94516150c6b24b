#pragma once

#include <string>
#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

// A partition of the vertex set into p >= 2 modules with at most two colors
// on edges between parts. parts are sorted vertex lists, ordered by
// decreasing size, ties by least vertex. reduced is the p-vertex coloring
// whose edge (i,j) carries the unique color between parts i and j.
struct GallaiPartition {
  std::vector<std::vector<int>> parts;
  ColoredComplete reduced;
  std::vector<int> inter_colors;  // ascending, size <= 2 when valid
};

// Inclusion-minimal module containing seed: closes seed under "some outside
// vertex sees two colors into the set". Result is sorted.
std::vector<int> smallest_module(const ColoredComplete& c, std::span<const int> seed);

// A maximum-p Gallai partition of a rainbow-free coloring. Computed as the
// finest merge-closure over every candidate pair of inter-part colors; among
// maximum-p partitions the one with the lexicographically least part list
// wins. Throws NotGallai / TooSmall.
GallaiPartition gallai_partition(const ColoredComplete& c);

// p-vertex coloring with edge (i,j) carrying the unique inter-part color.
// Throws NotMonochromaticBetween when some pair of parts sees two colors.
ColoredComplete reduced_coloring(const ColoredComplete& c,
                                 const std::vector<std::vector<int>>& parts);

enum class PartitionViolation {
  EmptyPart,
  VertexOutOfRange,
  Overlap,
  IncompleteCover,
  TooFewParts,
  NotMonochromaticBetween,
  TooManyInterColors,
  InterColorsMismatch,
  ReducedMismatch,
};

struct PartitionIssue {
  PartitionViolation kind;
  std::string detail;
};

struct PartitionReport {
  std::vector<PartitionIssue> issues;
  bool valid() const { return issues.empty(); }
};

// Checks every partition invariant and reports all violations as data; an
// empty report means the partition is valid for c.
PartitionReport validate_partition(const ColoredComplete& c, const GallaiPartition& g);

}  // namespace gallai
