#pragma once

#include <vector>

#include "json.hpp"

#include "hurwitz/errors.hpp"

namespace hurwitz {

// A partition of `total` into weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;
  int total = 0;

  int length() const { return static_cast<int>(parts.size()); }
  bool operator==(const Partition&) const = default;
};

// Normalizes raw parts (any order) into a Partition of d.
// Throws NonPositivePart / SumMismatch.
Partition validate_partition(std::vector<int> parts, int d);

// chi(source) = sum of partition lengths + d * (2 - n), target fixed to the
// sphere (chi = 2).
int riemann_hurwitz_chi(int d, const std::vector<Partition>& partitions);

// Branch datum over the sphere: degree, n >= 3 partitions of the degree, and
// the cached source Euler characteristic (even, <= 2).
struct BranchDatum {
  int degree = 0;
  std::vector<Partition> partitions;
  int source_chi = 0;

  int branching_points() const { return static_cast<int>(partitions.size()); }
  bool operator==(const BranchDatum&) const = default;
};

BranchDatum validate_branch_datum(int d, const std::vector<std::vector<int>>& partitions);

// Degree 3h, partitions (3,...,3), (3,...,3), (4,2,3,...,3); h >= 2.
// The non-realizable family.
BranchDatum theorem_family_datum(int h);

// Degree 3h, partitions (3,...,3) three times; h >= 1. Realizable, same
// degrees and source torus as the family above; used as positive control.
BranchDatum control_family_datum(int h);

// JSON schema: {"degree": <int>, "partitions": [[<int>,...],...]}.
// Input partitions may be unsorted; output is always sorted descending.
BranchDatum datum_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json datum_to_json(const BranchDatum& datum);

}  // namespace hurwitz
