#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hurwitz/perm.hpp"
#include "hurwitz/search.hpp"

namespace hurwitz {

enum class VertexColor { White, Black };

struct VertexRef {
  VertexColor color = VertexColor::White;
  int id = 0;
  bool operator==(const VertexRef&) const = default;
  auto operator<=>(const VertexRef&) const = default;
};

// One side of an edge in a face boundary walk.
struct Side {
  int edge = 0;
  bool white_to_black = true;
  bool operator==(const Side&) const = default;
};

struct FaceWalk {
  int face_id = 0;
  std::vector<Side> sides;         // 2k entries
  std::vector<VertexRef> corners;  // corner after side i; alternates colors
};

// Bipartite combinatorial map of a 3-point constellation: edges {0..d-1},
// white rotation sigma1, black rotation sigma2, faces the cycles of
// sigma3 = (sigma1 o sigma2)^-1. A face cycle of length k is a 2k-gon.
//
// Face boundary convention: starting from the least edge e of the face
// cycle, cross e from white to black, turn by the black rotation, cross back
// black to white, turn by the white rotation, and repeat. The walk visits
// each of the face's 2k sides exactly once; side (e, white->black) lies in
// the face whose cycle contains e, side (e, black->white) in the face whose
// cycle contains sigma2^-1(e).
class Dessin {
 public:
  static Dessin from_constellation(const Constellation& c);

  int edge_count() const { return degree_; }
  const Permutation& white_rotation() const { return sigma1_; }
  const Permutation& black_rotation() const { return sigma2_; }
  const Permutation& face_permutation() const { return sigma3_; }

  // Cycles listed by ascending least element; the index is the stable id.
  const std::vector<std::vector<int>>& white_vertices() const { return white_cycles_; }
  const std::vector<std::vector<int>>& black_vertices() const { return black_cycles_; }
  const std::vector<std::vector<int>>& faces() const { return face_cycles_; }

  int white_vertex_of(int edge) const { return white_of_edge_[static_cast<size_t>(edge)]; }
  int black_vertex_of(int edge) const { return black_of_edge_[static_cast<size_t>(edge)]; }

  int face_count() const { return static_cast<int>(face_cycles_.size()); }
  int face_half_size(int face_id) const;

  // Face holding side (edge, white->black) resp. (edge, black->white).
  int face_of_wb_side(int edge) const { return face_of_wb_[static_cast<size_t>(edge)]; }
  int face_of_bw_side(int edge) const { return face_of_bw_[static_cast<size_t>(edge)]; }
  // Position of each side within its face's boundary walk.
  int wb_side_position(int edge) const { return pos_of_wb_[static_cast<size_t>(edge)]; }
  int bw_side_position(int edge) const { return pos_of_bw_[static_cast<size_t>(edge)]; }

  const std::vector<Side>& face_walk_sides(int face_id) const;

  FaceWalk face_boundary(int face_id) const;

  // Embedded closure: the walk's corner vertices are pairwise distinct and
  // its side edges are pairwise distinct.
  bool is_face_embedded(int face_id) const;

  // V - E + F = l1 + l2 - d + l3; equals the datum's source_chi.
  int euler_characteristic() const;

  std::string to_dot() const;
  nlohmann::ordered_json to_json() const;

 private:
  Dessin() : sigma1_(1), sigma2_(1), sigma3_(1) {}

  void check_face_id(int face_id) const;

  int degree_ = 0;
  Permutation sigma1_, sigma2_, sigma3_;
  std::vector<std::vector<int>> white_cycles_, black_cycles_, face_cycles_;
  std::vector<int> white_of_edge_, black_of_edge_;
  std::vector<int> face_of_wb_, face_of_bw_;
  std::vector<int> pos_of_wb_, pos_of_bw_;
  std::vector<std::vector<Side>> walks_;
};

}  // namespace hurwitz
