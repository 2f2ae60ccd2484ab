#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hurwitz/core_model.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

// A bijection of {0..d-1}, stored as its image sequence.
class Permutation {
 public:
  // Identity of the given degree.
  explicit Permutation(int degree);
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;

  // Lexicographic order on image sequences.
  auto operator<=>(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

// r(x) = p(q(x)) -- apply the right factor first. The constellation condition
// sigma1 o sigma2 o ... o sigman = identity is read with this convention
// everywhere in the project.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Weakly decreasing cycle lengths, fixed points included as 1s.
Partition cycle_type(const Permutation& p);

// Disjoint cycles in canonical form: each cycle rotated so its minimum
// element comes first, cycles sorted by (length descending, minimum
// ascending), fixed points included.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  bool operator==(const CycleDecomposition&) const = default;
};
CycleDecomposition cycle_decomposition(const Permutation& p);

// "(0 1 2 3)(4 5)"; fixed points omitted; the identity prints as "()".
std::string cycle_string(const Permutation& p);

// JSON form: canonical cycles as arrays of arrays, fixed points included.
nlohmann::ordered_json cycles_to_json(const Permutation& p);
// Accepts cycles with fixed points omitted; elements must lie in {0..d-1}.
Permutation permutation_from_cycles(const std::vector<std::vector<int>>& cycles, int degree);

// Cycles laid out as consecutive integer blocks in descending part order,
// e.g. [4,2] -> (0 1 2 3)(4 5). The conjugacy-class representative.
Permutation canonical_of_type(const Partition& pi);

// True iff the generated group acts transitively on {0..d-1}; union-find over
// all cycles of all generators.
bool is_transitive(std::span<const Permutation> perms, int degree);

// |centralizer of any permutation of type pi| = prod over part values k of
// k^{m_k} * m_k!.
std::uint64_t centralizer_order(const Partition& pi);

// d! / centralizer_order; exact only for d <= 20 (throws Unsupported beyond).
std::uint64_t conjugacy_class_size(const Partition& pi);

// Generators of the centralizer of canonical_of_type(pi): one rotation per
// cycle of length >= 2, one block swap per adjacent pair of equal-length
// cycles.
std::vector<Permutation> centralizer_generators(const Partition& pi);

// Visits every permutation of cycle type pi exactly once, in lexicographic
// order of image sequences. The visitor returns false to stop early.
void enumerate_of_type(const Partition& pi, const std::function<bool(const Permutation&)>& visit);

}  // namespace hurwitz
