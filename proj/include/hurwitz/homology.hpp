#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hurwitz/dessin.hpp"

namespace hurwitz {

// One node per face, one dual edge per dessin edge joining the faces on its
// two sides; each end carries the side position in that face's boundary walk.
struct DualEdgeEnds {
  int face_wb = 0;
  int pos_wb = 0;
  int face_bw = 0;
  int pos_bw = 0;
};

struct DualGraph {
  int node_count = 0;
  std::vector<DualEdgeEnds> edges;
  // Per face: (edge, end) incidences, end 0 = white->black side, 1 = the
  // other; sorted by (edge, end).
  std::vector<std::vector<std::pair<int, int>>> incident;
};

DualGraph dual_graph(const Dessin& dessin);

// Bit per dessin edge.
using EdgeSet = std::vector<std::uint64_t>;

// Fundamental cycles of a spanning tree of the primal graph (white and black
// vertices, dessin edges); count = d - l1 - l2 + 1. The flag flips the edge
// scan order, giving a different tree for the well-definedness check.
std::vector<EdgeSet> primal_cycle_basis(const Dessin& dessin, bool reverse_edge_order = false);

// A step traverses one dual edge: dir 0 leaves the face holding the
// white->black side and arrives through the black->white side, dir 1 the
// reverse.
struct LoopStep {
  int edge = 0;
  int dir = 0;
  bool operator==(const LoopStep&) const = default;
  auto operator<=>(const LoopStep&) const = default;
};

// A closed walk in the dual graph, one chord per visited face. Simplicity:
// no dual edge twice, chord endpoints pairwise distinct within every face,
// chords pairwise non-interleaved around the face polygon.
struct DualLoop {
  std::vector<LoopStep> steps;
  bool operator==(const DualLoop&) const = default;
  auto operator<=>(const DualLoop&) const = default;
};

// Chord cut by step i across the face it enters: from the side where the
// loop arrives to the side where step i+1 departs.
struct Chord {
  int face = 0;
  int entry_pos = 0;
  int exit_pos = 0;
};

struct Letter {
  int face_size = 0;  // 2k
  int offset = 0;     // (exit - entry) mod 2k, never 0
  std::string name;   // named letter for 4/6/8-gons, P<2k>_<o> otherwise
};

struct CrossingWord {
  std::vector<Letter> letters;
};

DualLoop reverse_loop(const DualLoop& loop);
// Lexicographically least rotation/reversal; starts at the minimal edge with
// dir 0.
DualLoop canonical_loop(const DualLoop& loop);

// Caches the dual graph and cycle basis for repeated queries on one dessin.
class HomologyContext {
 public:
  explicit HomologyContext(const Dessin& dessin);

  const Dessin& dessin() const { return dessin_; }
  const DualGraph& dual() const { return dual_; }
  const std::vector<EdgeSet>& basis() const { return basis_; }

  // Throws MalformedLoop when the simplicity invariants fail.
  std::vector<Chord> validate(const DualLoop& loop) const;

  // GF(2) intersection with every basis cycle is even. Exact triviality test
  // on sphere and torus dessins; detects Z/2-nontriviality in higher genus.
  bool is_loop_trivial(const DualLoop& loop) const;

  CrossingWord loop_word(const DualLoop& loop) const;

  // Every simple loop with exactly n steps, one canonical representative per
  // rotation/reversal class, in lexicographic order of step sequences.
  void enumerate_simple_loops(int n, const std::function<bool(const DualLoop&)>& visit) const;
  std::vector<DualLoop> simple_loops(int n) const;

  // Least n <= max_len carrying a non-trivial simple loop, plus the first
  // such loop in enumeration order.
  std::optional<std::pair<int, DualLoop>> min_nontrivial_loop(int max_len) const;

 private:
  Dessin dessin_;
  DualGraph dual_;
  std::vector<EdgeSet> basis_;
};

bool is_loop_trivial(const Dessin& dessin, const DualLoop& loop);
std::vector<DualLoop> enumerate_simple_loops(const Dessin& dessin, int n);
std::optional<std::pair<int, DualLoop>> min_nontrivial_loop(const Dessin& dessin, int max_len);
CrossingWord loop_word(const Dessin& dessin, const DualLoop& loop);

struct FaceInfo {
  int id = 0;
  int size = 0;  // 2k
  bool embedded = false;
};

struct LoopCensusRow {
  int length = 0;
  std::uint64_t simple = 0;
  std::uint64_t nontrivial = 0;
};

struct AnalysisReport {
  int degree = 0;
  int chi = 0;
  int genus = 0;
  std::vector<FaceInfo> faces;
  std::optional<int> systole;
  std::optional<DualLoop> systole_loop;
  std::vector<LoopCensusRow> census;
};

AnalysisReport analyze_dessin(const Dessin& dessin, int max_loop_len);

// {"steps": [[edge, dir], ...], "word": [...], "trivial": bool}
nlohmann::ordered_json loop_to_json(const HomologyContext& ctx, const DualLoop& loop);
nlohmann::ordered_json analysis_to_json(const Dessin& dessin, const AnalysisReport& report);

}  // namespace hurwitz
