#pragma once

// Serial reference implementations, deliberately independent of the engine
// code paths: the realizability oracle enumerates BOTH sigma1 and sigma2 over
// their full cycle-type classes by filtering all of S_d, and the loop oracle
// generates every closed dual walk before filtering by the simplicity
// predicate. Used by the tests and the benchmark; only practical for small
// degrees.

#include <optional>
#include <vector>

#include "hurwitz/core_model.hpp"
#include "hurwitz/homology.hpp"
#include "hurwitz/search.hpp"

namespace hurwitz {

struct NaiveDecision {
  bool realizable = false;
  std::optional<Constellation> witness;
};

NaiveDecision naive_decide(const BranchDatum& datum);

// All simple loops with exactly n steps, canonical forms, sorted.
std::vector<DualLoop> naive_simple_loops(const Dessin& dessin, int n);

}  // namespace hurwitz
