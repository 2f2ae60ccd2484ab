#include "hurwitz/dessin.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hurwitz {

namespace {

// Cycles ordered by ascending least element; indexes become stable ids.
std::vector<std::vector<int>> cycles_by_least_element(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  int d = p.degree();
  std::vector<char> seen(static_cast<size_t>(d), 0);
  for (int x = 0; x < d; ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    std::vector<int> cyc;
    for (int y = x; !seen[static_cast<size_t>(y)]; y = p(y)) {
      seen[static_cast<size_t>(y)] = 1;
      cyc.push_back(y);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace

Dessin Dessin::from_constellation(const Constellation& c) {
  if (c.sigmas.size() != 3) {
    fail(Errc::NotThreePoint,
         "dessin needs a 3-point constellation, got " + std::to_string(c.sigmas.size()));
  }
  for (const Permutation& s : c.sigmas) {
    if (s.degree() != c.degree) fail(Errc::DegreeMismatch, "constellation degree mismatch");
  }
  Permutation prod = compose(compose(c.sigmas[0], c.sigmas[1]), c.sigmas[2]);
  if (!prod.is_identity()) {
    fail(Errc::InvalidConstellation, "sigma1 o sigma2 o sigma3 is not the identity");
  }
  if (!is_transitive(std::span<const Permutation>(c.sigmas), c.degree)) {
    fail(Errc::InvalidConstellation, "constellation is not transitive");
  }

  Dessin dd;
  dd.degree_ = c.degree;
  dd.sigma1_ = c.sigmas[0];
  dd.sigma2_ = c.sigmas[1];
  dd.sigma3_ = c.sigmas[2];
  dd.white_cycles_ = cycles_by_least_element(dd.sigma1_);
  dd.black_cycles_ = cycles_by_least_element(dd.sigma2_);
  dd.face_cycles_ = cycles_by_least_element(dd.sigma3_);

  int d = c.degree;
  dd.white_of_edge_.assign(static_cast<size_t>(d), -1);
  dd.black_of_edge_.assign(static_cast<size_t>(d), -1);
  for (size_t i = 0; i < dd.white_cycles_.size(); ++i) {
    for (int e : dd.white_cycles_[i]) dd.white_of_edge_[static_cast<size_t>(e)] = static_cast<int>(i);
  }
  for (size_t i = 0; i < dd.black_cycles_.size(); ++i) {
    for (int e : dd.black_cycles_[i]) dd.black_of_edge_[static_cast<size_t>(e)] = static_cast<int>(i);
  }

  dd.face_of_wb_.assign(static_cast<size_t>(d), -1);
  dd.face_of_bw_.assign(static_cast<size_t>(d), -1);
  dd.pos_of_wb_.assign(static_cast<size_t>(d), -1);
  dd.pos_of_bw_.assign(static_cast<size_t>(d), -1);
  dd.walks_.resize(dd.face_cycles_.size());
  for (size_t f = 0; f < dd.face_cycles_.size(); ++f) {
    int start = dd.face_cycles_[f].front();  // least edge of the cycle
    std::vector<Side>& walk = dd.walks_[f];
    int e = start;
    do {
      walk.push_back(Side{e, true});
      dd.face_of_wb_[static_cast<size_t>(e)] = static_cast<int>(f);
      dd.pos_of_wb_[static_cast<size_t>(e)] = static_cast<int>(walk.size()) - 1;
      int back = dd.sigma2_(e);
      walk.push_back(Side{back, false});
      dd.face_of_bw_[static_cast<size_t>(back)] = static_cast<int>(f);
      dd.pos_of_bw_[static_cast<size_t>(back)] = static_cast<int>(walk.size()) - 1;
      e = dd.sigma1_(back);
    } while (e != start);
  }
  return dd;
}

void Dessin::check_face_id(int face_id) const {
  if (face_id < 0 || face_id >= face_count()) {
    fail(Errc::BadFaceId, "face id " + std::to_string(face_id) + " out of range");
  }
}

int Dessin::face_half_size(int face_id) const {
  check_face_id(face_id);
  return static_cast<int>(face_cycles_[static_cast<size_t>(face_id)].size());
}

const std::vector<Side>& Dessin::face_walk_sides(int face_id) const {
  check_face_id(face_id);
  return walks_[static_cast<size_t>(face_id)];
}

FaceWalk Dessin::face_boundary(int face_id) const {
  check_face_id(face_id);
  FaceWalk walk;
  walk.face_id = face_id;
  walk.sides = walks_[static_cast<size_t>(face_id)];
  for (const Side& s : walk.sides) {
    if (s.white_to_black) {
      walk.corners.push_back(VertexRef{VertexColor::Black, black_vertex_of(s.edge)});
    } else {
      walk.corners.push_back(VertexRef{VertexColor::White, white_vertex_of(s.edge)});
    }
  }
  return walk;
}

bool Dessin::is_face_embedded(int face_id) const {
  FaceWalk walk = face_boundary(face_id);
  std::set<VertexRef> corners(walk.corners.begin(), walk.corners.end());
  if (corners.size() != walk.corners.size()) return false;
  std::set<int> edges;
  for (const Side& s : walk.sides) {
    if (!edges.insert(s.edge).second) return false;
  }
  return true;
}

int Dessin::euler_characteristic() const {
  return static_cast<int>(white_cycles_.size()) + static_cast<int>(black_cycles_.size()) -
         degree_ + static_cast<int>(face_cycles_.size());
}

std::string Dessin::to_dot() const {
  std::string out = "graph dessin {\n";
  for (size_t i = 0; i < white_cycles_.size(); ++i) {
    out += "  w" + std::to_string(i) + " [shape=circle];\n";
  }
  for (size_t i = 0; i < black_cycles_.size(); ++i) {
    out += "  b" + std::to_string(i) +
           " [shape=circle style=filled fillcolor=black fontcolor=white];\n";
  }
  for (int e = 0; e < degree_; ++e) {
    out += "  w" + std::to_string(white_vertex_of(e)) + " -- b" +
           std::to_string(black_vertex_of(e)) + " [label=\"" + std::to_string(e) + "\"];\n";
  }
  for (int f = 0; f < face_count(); ++f) {
    out += "  // face f" + std::to_string(f) + ": size " +
           std::to_string(2 * face_half_size(f)) + ", edges";
    for (int e : face_cycles_[static_cast<size_t>(f)]) out += " " + std::to_string(e);
    out += std::string(", embedded=") + (is_face_embedded(f) ? "true" : "false") + "\n";
  }
  out += "}\n";
  return out;
}

nlohmann::ordered_json Dessin::to_json() const {
  nlohmann::ordered_json j;
  j["degree"] = degree_;
  j["white_vertices"] = white_cycles_;
  j["black_vertices"] = black_cycles_;
  j["faces"] = face_cycles_;
  return j;
}

}  // namespace hurwitz
