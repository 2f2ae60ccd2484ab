#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "hurwitz/core_model.hpp"
#include "hurwitz/perm.hpp"

namespace hurwitz {

// n permutations of equal degree; a witness of realizability when the
// compose-chain sigma1 o sigma2 o ... o sigman is the identity, the cycle
// types match the branch datum, and the joint action is transitive.
struct Constellation {
  int degree = 0;
  std::vector<Permutation> sigmas;
};

struct SearchOptions {
  bool use_centralizer_reduction = true;
  int parallelism_hint = 1;
};

struct VerificationReport {
  bool product_is_identity = false;
  std::vector<bool> cycle_type_match;
  bool transitive = false;

  bool pass() const {
    if (!product_is_identity || !transitive) return false;
    for (bool b : cycle_type_match) {
      if (!b) return false;
    }
    return true;
  }
};

// Three independent checks of a claimed witness against its datum.
VerificationReport verify_witness(const BranchDatum& datum, const Constellation& c);

struct Decision {
  bool realizable = false;
  std::optional<Constellation> witness;
  std::uint64_t candidates_examined = 0;
  bool reduction_used = false;
  // Which datum position was frozen to the canonical representative
  // (smallest centralizer order, ties by input position).
  int sigma1_position = 0;
};

// Exhaustive decision for n = 3 data: one permutation frozen canonical, the
// second scanned over its conjugacy class in lexicographic order, the third
// derived as the inverse of their product. The reported witness carries the
// lexicographically least accepted scan candidate and is returned in datum
// order.
Decision decide_realizability(const BranchDatum& datum, const SearchOptions& opts = {});

struct CountResult {
  std::uint64_t constellations = 0;
  std::uint64_t candidates_examined = 0;
  bool reduction_used = false;
  int sigma1_position = 0;
  // Lexicographically least accepted candidate, when any exist.
  std::optional<Constellation> witness;
};

// Number of accepted scan candidates with sigma1 frozen, no early exit. With
// centralizer reduction the same total is recovered by summing orbit sizes of
// the accepted orbit minima.
CountResult count_constellations(const BranchDatum& datum, const SearchOptions& opts = {});

// Witness JSON: {"degree": d, "sigma": [ [[cycle],...], ... ]} with canonical
// cycle ordering, fixed points included.
nlohmann::ordered_json witness_to_json(const Constellation& c);
Constellation witness_from_json(const nlohmann::ordered_json& j);

// Decision JSON: {"realizable": bool, "witness": <witness|null>,
// "candidates_examined": int, "reduced": bool}.
nlohmann::ordered_json decision_to_json(const Decision& decision);

}  // namespace hurwitz
