#include "hurwitz/homology.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hurwitz {

namespace {

EdgeSet make_edge_set(int d) { return EdgeSet(static_cast<size_t>((d + 63) / 64), 0); }

void flip_bit(EdgeSet& s, int e) {
  s[static_cast<size_t>(e) / 64] ^= (std::uint64_t{1} << (static_cast<size_t>(e) % 64));
}

bool even_intersection(const EdgeSet& a, const EdgeSet& b) {
  int parity = 0;
  for (size_t i = 0; i < a.size(); ++i) parity ^= std::popcount(a[i] & b[i]) & 1;
  return parity == 0;
}

int departure_face(const Dessin& dd, const LoopStep& s) {
  return s.dir == 0 ? dd.face_of_wb_side(s.edge) : dd.face_of_bw_side(s.edge);
}
int departure_pos(const Dessin& dd, const LoopStep& s) {
  return s.dir == 0 ? dd.wb_side_position(s.edge) : dd.bw_side_position(s.edge);
}
int arrival_face(const Dessin& dd, const LoopStep& s) {
  return s.dir == 0 ? dd.face_of_bw_side(s.edge) : dd.face_of_wb_side(s.edge);
}
int arrival_pos(const Dessin& dd, const LoopStep& s) {
  return s.dir == 0 ? dd.bw_side_position(s.edge) : dd.wb_side_position(s.edge);
}

// x strictly inside the cyclic arc from a forward to b (positions mod size).
bool in_open_arc(int x, int a, int b, int size) {
  int span = (b - a + size) % size;
  int off = (x - a + size) % size;
  return off > 0 && off < span;
}

bool chords_cross(const Chord& c1, const Chord& c2, int size) {
  bool in1 = in_open_arc(c2.entry_pos, c1.entry_pos, c1.exit_pos, size);
  bool in2 = in_open_arc(c2.exit_pos, c1.entry_pos, c1.exit_pos, size);
  return in1 != in2;
}

std::string letter_name(int face_size, int offset) {
  if (face_size == 4 && offset == 2) return "S";
  if (face_size == 6) {
    if (offset == 3) return "H_d";
    if (offset == 2) return "H_r";
    if (offset == 4) return "H_l";
  }
  if (face_size == 8) {
    if (offset == 4) return "O_d";
    if (offset == 3) return "O_r";
    if (offset == 5) return "O_l";
    if (offset == 2) return "O_R";
    if (offset == 6) return "O_L";
  }
  return "P" + std::to_string(face_size) + "_" + std::to_string(offset);
}

}  // namespace

DualGraph dual_graph(const Dessin& dessin) {
  DualGraph g;
  g.node_count = dessin.face_count();
  g.incident.resize(static_cast<size_t>(g.node_count));
  for (int e = 0; e < dessin.edge_count(); ++e) {
    DualEdgeEnds ends;
    ends.face_wb = dessin.face_of_wb_side(e);
    ends.pos_wb = dessin.wb_side_position(e);
    ends.face_bw = dessin.face_of_bw_side(e);
    ends.pos_bw = dessin.bw_side_position(e);
    g.incident[static_cast<size_t>(ends.face_wb)].push_back({e, 0});
    g.incident[static_cast<size_t>(ends.face_bw)].push_back({e, 1});
    g.edges.push_back(ends);
  }
  for (auto& inc : g.incident) std::sort(inc.begin(), inc.end());
  return g;
}

std::vector<EdgeSet> primal_cycle_basis(const Dessin& dessin, bool reverse_edge_order) {
  int d = dessin.edge_count();
  int whites = static_cast<int>(dessin.white_vertices().size());
  int blacks = static_cast<int>(dessin.black_vertices().size());
  int n_vertices = whites + blacks;

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n_vertices));
  auto add_edge = [&](int e) {
    int u = dessin.white_vertex_of(e);
    int v = whites + dessin.black_vertex_of(e);
    adj[static_cast<size_t>(u)].push_back({e, v});
    adj[static_cast<size_t>(v)].push_back({e, u});
  };
  if (reverse_edge_order) {
    for (int e = d - 1; e >= 0; --e) add_edge(e);
  } else {
    for (int e = 0; e < d; ++e) add_edge(e);
  }

  std::vector<int> parent_vertex(static_cast<size_t>(n_vertices), -1);
  std::vector<int> parent_edge(static_cast<size_t>(n_vertices), -1);
  std::vector<int> depth(static_cast<size_t>(n_vertices), -1);
  std::vector<char> edge_in_tree(static_cast<size_t>(d), 0);
  std::vector<int> queue{0};
  depth[0] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (auto [e, v] : adj[static_cast<size_t>(u)]) {
      if (depth[static_cast<size_t>(v)] >= 0) continue;
      depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(u)] + 1;
      parent_vertex[static_cast<size_t>(v)] = u;
      parent_edge[static_cast<size_t>(v)] = e;
      edge_in_tree[static_cast<size_t>(e)] = 1;
      queue.push_back(v);
    }
  }
  for (int v = 0; v < n_vertices; ++v) {
    if (depth[static_cast<size_t>(v)] < 0) {
      fail(Errc::InvalidConstellation, "dessin graph is not connected");
    }
  }

  std::vector<EdgeSet> basis;
  for (int e = 0; e < d; ++e) {
    if (edge_in_tree[static_cast<size_t>(e)]) continue;
    EdgeSet cyc = make_edge_set(d);
    flip_bit(cyc, e);
    int u = dessin.white_vertex_of(e);
    int v = whites + dessin.black_vertex_of(e);
    while (depth[static_cast<size_t>(u)] > depth[static_cast<size_t>(v)]) {
      flip_bit(cyc, parent_edge[static_cast<size_t>(u)]);
      u = parent_vertex[static_cast<size_t>(u)];
    }
    while (depth[static_cast<size_t>(v)] > depth[static_cast<size_t>(u)]) {
      flip_bit(cyc, parent_edge[static_cast<size_t>(v)]);
      v = parent_vertex[static_cast<size_t>(v)];
    }
    while (u != v) {
      flip_bit(cyc, parent_edge[static_cast<size_t>(u)]);
      flip_bit(cyc, parent_edge[static_cast<size_t>(v)]);
      u = parent_vertex[static_cast<size_t>(u)];
      v = parent_vertex[static_cast<size_t>(v)];
    }
    basis.push_back(std::move(cyc));
  }
  return basis;
}

DualLoop reverse_loop(const DualLoop& loop) {
  DualLoop rev;
  for (auto it = loop.steps.rbegin(); it != loop.steps.rend(); ++it) {
    rev.steps.push_back(LoopStep{it->edge, 1 - it->dir});
  }
  return rev;
}

DualLoop canonical_loop(const DualLoop& loop) {
  if (loop.steps.empty()) return loop;
  size_t n = loop.steps.size();
  DualLoop best;
  bool have = false;
  for (const DualLoop& base : {loop, reverse_loop(loop)}) {
    for (size_t r = 0; r < n; ++r) {
      DualLoop rot;
      for (size_t i = 0; i < n; ++i) rot.steps.push_back(base.steps[(r + i) % n]);
      if (!have || rot < best) {
        best = std::move(rot);
        have = true;
      }
    }
  }
  return best;
}

HomologyContext::HomologyContext(const Dessin& dessin)
    : dessin_(dessin), dual_(dual_graph(dessin)), basis_(primal_cycle_basis(dessin)) {}

std::vector<Chord> HomologyContext::validate(const DualLoop& loop) const {
  const Dessin& dd = dessin_;
  size_t n = loop.steps.size();
  if (n == 0) fail(Errc::MalformedLoop, "loop has no steps");
  std::vector<char> used(static_cast<size_t>(dd.edge_count()), 0);
  for (const LoopStep& s : loop.steps) {
    if (s.edge < 0 || s.edge >= dd.edge_count() || (s.dir != 0 && s.dir != 1)) {
      fail(Errc::MalformedLoop, "step out of range");
    }
    if (used[static_cast<size_t>(s.edge)]) {
      fail(Errc::MalformedLoop, "dual edge " + std::to_string(s.edge) + " used twice");
    }
    used[static_cast<size_t>(s.edge)] = 1;
  }
  std::vector<Chord> chords;
  for (size_t i = 0; i < n; ++i) {
    const LoopStep& cur = loop.steps[i];
    const LoopStep& next = loop.steps[(i + 1) % n];
    int face = arrival_face(dd, cur);
    if (face != departure_face(dd, next)) {
      fail(Errc::MalformedLoop, "steps " + std::to_string(i) + " and " +
                                    std::to_string((i + 1) % n) + " do not share a face");
    }
    chords.push_back(Chord{face, arrival_pos(dd, cur), departure_pos(dd, next)});
  }
  // Per-face chord endpoints distinct and pairwise non-interleaved.
  for (size_t i = 0; i < chords.size(); ++i) {
    int size = 2 * dd.face_half_size(chords[i].face);
    if (chords[i].entry_pos == chords[i].exit_pos) {
      fail(Errc::MalformedLoop, "degenerate chord");
    }
    for (size_t j = i + 1; j < chords.size(); ++j) {
      if (chords[j].face != chords[i].face) continue;
      int ends[4] = {chords[i].entry_pos, chords[i].exit_pos, chords[j].entry_pos,
                     chords[j].exit_pos};
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          if (ends[a] == ends[b]) fail(Errc::MalformedLoop, "chord endpoints collide");
        }
      }
      if (chords_cross(chords[i], chords[j], size)) {
        fail(Errc::MalformedLoop, "chords interleave inside a face");
      }
    }
  }
  return chords;
}

bool HomologyContext::is_loop_trivial(const DualLoop& loop) const {
  validate(loop);
  EdgeSet edges = make_edge_set(dessin_.edge_count());
  for (const LoopStep& s : loop.steps) flip_bit(edges, s.edge);
  for (const EdgeSet& cyc : basis_) {
    if (!even_intersection(edges, cyc)) return false;
  }
  return true;
}

CrossingWord HomologyContext::loop_word(const DualLoop& loop) const {
  std::vector<Chord> chords = validate(loop);
  CrossingWord word;
  for (const Chord& c : chords) {
    int size = 2 * dessin_.face_half_size(c.face);
    int offset = ((c.exit_pos - c.entry_pos) % size + size) % size;
    word.letters.push_back(Letter{size, offset, letter_name(size, offset)});
  }
  return word;
}

namespace {

// Depth-first enumeration of canonical simple loops: the first step uses the
// loop's minimal dual edge with dir 0, later edges are strictly larger, and
// chord validity is enforced incrementally.
struct LoopSearch {
  const Dessin& dd;
  const DualGraph& dual;
  int target_len;
  const std::function<bool(const DualLoop&)>& visit;

  std::vector<LoopStep> steps;
  std::vector<char> used;
  std::vector<std::vector<Chord>> face_chords;
  bool stopped = false;

  LoopSearch(const Dessin& d, const DualGraph& g, int n,
             const std::function<bool(const DualLoop&)>& v)
      : dd(d), dual(g), target_len(n), visit(v) {
    used.assign(static_cast<size_t>(d.edge_count()), 0);
    face_chords.resize(static_cast<size_t>(d.face_count()));
  }

  bool chord_ok(const Chord& c) const {
    int size = 2 * dd.face_half_size(c.face);
    for (const Chord& other : face_chords[static_cast<size_t>(c.face)]) {
      if (c.entry_pos == other.entry_pos || c.entry_pos == other.exit_pos ||
          c.exit_pos == other.entry_pos || c.exit_pos == other.exit_pos) {
        return false;
      }
      if (chords_cross(c, other, size)) return false;
    }
    return true;
  }

  void run() {
    for (int e0 = 0; e0 < dd.edge_count() && !stopped; ++e0) {
      LoopStep first{e0, 0};
      steps.push_back(first);
      used[static_cast<size_t>(e0)] = 1;
      extend(arrival_face(dd, first), arrival_pos(dd, first));
      used[static_cast<size_t>(e0)] = 0;
      steps.pop_back();
    }
  }

  void extend(int face, int entry_pos) {
    if (stopped) return;
    if (static_cast<int>(steps.size()) == target_len) {
      const LoopStep& first = steps.front();
      if (face != departure_face(dd, first)) return;
      Chord closing{face, entry_pos, departure_pos(dd, first)};
      if (closing.entry_pos == closing.exit_pos || !chord_ok(closing)) return;
      if (!visit(DualLoop{steps})) stopped = true;
      return;
    }
    int e0 = steps.front().edge;
    for (const auto& [e, end] : dual.incident[static_cast<size_t>(face)]) {
      if (e <= e0 || used[static_cast<size_t>(e)]) continue;
      LoopStep next{e, end == 0 ? 0 : 1};
      Chord chord{face, entry_pos, departure_pos(dd, next)};
      if (chord.entry_pos == chord.exit_pos || !chord_ok(chord)) continue;
      face_chords[static_cast<size_t>(face)].push_back(chord);
      used[static_cast<size_t>(e)] = 1;
      steps.push_back(next);
      extend(arrival_face(dd, next), arrival_pos(dd, next));
      steps.pop_back();
      used[static_cast<size_t>(e)] = 0;
      face_chords[static_cast<size_t>(face)].pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

void HomologyContext::enumerate_simple_loops(
    int n, const std::function<bool(const DualLoop&)>& visit) const {
  if (n < 1) return;
  if (n > dessin_.edge_count()) return;  // loops use distinct dual edges
  LoopSearch search(dessin_, dual_, n, visit);
  search.run();
}

std::vector<DualLoop> HomologyContext::simple_loops(int n) const {
  std::vector<DualLoop> out;
  enumerate_simple_loops(n, [&](const DualLoop& loop) {
    out.push_back(loop);
    return true;
  });
  return out;
}

std::optional<std::pair<int, DualLoop>> HomologyContext::min_nontrivial_loop(int max_len) const {
  for (int n = 1; n <= max_len; ++n) {
    std::optional<DualLoop> found;
    enumerate_simple_loops(n, [&](const DualLoop& loop) {
      if (!is_loop_trivial(loop)) {
        found = loop;
        return false;
      }
      return true;
    });
    if (found) return std::make_pair(n, *found);
  }
  return std::nullopt;
}

bool is_loop_trivial(const Dessin& dessin, const DualLoop& loop) {
  return HomologyContext(dessin).is_loop_trivial(loop);
}

std::vector<DualLoop> enumerate_simple_loops(const Dessin& dessin, int n) {
  return HomologyContext(dessin).simple_loops(n);
}

std::optional<std::pair<int, DualLoop>> min_nontrivial_loop(const Dessin& dessin, int max_len) {
  return HomologyContext(dessin).min_nontrivial_loop(max_len);
}

CrossingWord loop_word(const Dessin& dessin, const DualLoop& loop) {
  return HomologyContext(dessin).loop_word(loop);
}

AnalysisReport analyze_dessin(const Dessin& dessin, int max_loop_len) {
  HomologyContext ctx(dessin);
  AnalysisReport report;
  report.degree = dessin.edge_count();
  report.chi = dessin.euler_characteristic();
  report.genus = (2 - report.chi) / 2;
  for (int f = 0; f < dessin.face_count(); ++f) {
    report.faces.push_back(FaceInfo{f, 2 * dessin.face_half_size(f), dessin.is_face_embedded(f)});
  }
  for (int n = 1; n <= max_loop_len; ++n) {
    LoopCensusRow row;
    row.length = n;
    ctx.enumerate_simple_loops(n, [&](const DualLoop& loop) {
      row.simple++;
      if (!ctx.is_loop_trivial(loop)) {
        row.nontrivial++;
        if (!report.systole) {
          report.systole = n;
          report.systole_loop = loop;
        }
      }
      return true;
    });
    report.census.push_back(row);
  }
  return report;
}

nlohmann::ordered_json loop_to_json(const HomologyContext& ctx, const DualLoop& loop) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const LoopStep& s : loop.steps) steps.push_back({s.edge, s.dir});
  j["steps"] = std::move(steps);
  nlohmann::ordered_json word = nlohmann::ordered_json::array();
  for (const Letter& l : ctx.loop_word(loop).letters) word.push_back(l.name);
  j["word"] = std::move(word);
  j["trivial"] = ctx.is_loop_trivial(loop);
  return j;
}

nlohmann::ordered_json analysis_to_json(const Dessin& dessin, const AnalysisReport& report) {
  HomologyContext ctx(dessin);
  nlohmann::ordered_json j;
  j["degree"] = report.degree;
  j["chi"] = report.chi;
  j["genus"] = report.genus;
  nlohmann::ordered_json faces = nlohmann::ordered_json::array();
  for (const FaceInfo& f : report.faces) {
    nlohmann::ordered_json fj;
    fj["id"] = f.id;
    fj["size"] = f.size;
    fj["embedded"] = f.embedded;
    faces.push_back(std::move(fj));
  }
  j["faces"] = std::move(faces);
  j["systole"] = report.systole ? nlohmann::ordered_json(*report.systole)
                                : nlohmann::ordered_json(nullptr);
  j["systole_loop"] = report.systole_loop ? loop_to_json(ctx, *report.systole_loop)
                                          : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json census = nlohmann::ordered_json::array();
  for (const LoopCensusRow& row : report.census) {
    nlohmann::ordered_json rj;
    rj["length"] = row.length;
    rj["simple"] = row.simple;
    rj["nontrivial"] = row.nontrivial;
    census.push_back(std::move(rj));
  }
  j["loop_census"] = std::move(census);
  return j;
}

}  // namespace hurwitz
