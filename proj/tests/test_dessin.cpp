#include <map>
#include <set>

#include "doctest.h"

#include "hurwitz/dessin.hpp"
#include "hurwitz/search.hpp"

using namespace hurwitz;

namespace {

Permutation cycles(const std::vector<std::vector<int>>& c, int d) {
  return permutation_from_cycles(c, d);
}

Constellation triple(const Permutation& a, const Permutation& b) {
  return Constellation{a.degree(), {a, b, inverse(compose(a, b))}};
}

std::vector<std::vector<int>> all_partitions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

// Witnesses of every realizable valid datum with this degree.
std::vector<Constellation> witness_corpus(int d) {
  std::vector<Constellation> out;
  auto parts = all_partitions(d);
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      for (const auto& c : parts) {
        try {
          BranchDatum datum = validate_branch_datum(d, {a, b, c});
          Decision decision = decide_realizability(datum);
          if (decision.realizable) out.push_back(*decision.witness);
        } catch (const Error&) {
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("dessin") {

TEST_CASE("hexagonal torus: the h=1 control dessin") {
  Permutation c3 = cycles({{0, 1, 2}}, 3);
  Dessin dd = Dessin::from_constellation(triple(c3, c3));
  CHECK(dd.edge_count() == 3);
  CHECK(dd.white_vertices().size() == 1);
  CHECK(dd.black_vertices().size() == 1);
  CHECK(dd.face_count() == 1);
  CHECK(dd.face_half_size(0) == 3);
  CHECK(dd.euler_characteristic() == 0);

  FaceWalk walk = dd.face_boundary(0);
  std::vector<Side> expect{{0, true}, {1, false}, {2, true}, {0, false}, {1, true}, {2, false}};
  CHECK(walk.sides == expect);
  for (size_t i = 0; i < walk.corners.size(); ++i) {
    CHECK(walk.corners[i].color == (i % 2 == 0 ? VertexColor::Black : VertexColor::White));
    CHECK(walk.corners[i].id == 0);
  }
  CHECK_FALSE(dd.is_face_embedded(0));
  CHECK_THROWS_AS(dd.face_boundary(1), Error);
}

TEST_CASE("theta graph on the sphere: d=3, [[3],[2,1],[2,1]]") {
  Permutation s1 = cycles({{0, 1, 2}}, 3);
  Permutation s2 = cycles({{0, 1}}, 3);
  Dessin dd = Dessin::from_constellation(triple(s1, s2));
  CHECK(dd.euler_characteristic() == 2);
  REQUIRE(dd.face_count() == 2);
  // face 0 = {0,2} (square), face 1 = {1} (bigon), by least-element ids
  CHECK(dd.faces()[0] == std::vector<int>{0, 2});
  CHECK(dd.faces()[1] == std::vector<int>{1});

  FaceWalk bigon = dd.face_boundary(1);
  CHECK(bigon.sides == std::vector<Side>{{1, true}, {0, false}});
  CHECK(bigon.corners[0] == VertexRef{VertexColor::Black, 0});
  CHECK(bigon.corners[1] == VertexRef{VertexColor::White, 0});
  CHECK(dd.is_face_embedded(1));

  FaceWalk square = dd.face_boundary(0);
  CHECK(square.sides == std::vector<Side>{{0, true}, {1, false}, {2, true}, {2, false}});
  CHECK_FALSE(dd.is_face_embedded(0));  // edge 2 doubly incident
}

TEST_CASE("two squares on the sphere: d=4 witness") {
  Permutation s1 = cycles({{0, 1, 2}}, 4);
  Permutation s2 = cycles({{1, 2, 3}}, 4);
  Dessin dd = Dessin::from_constellation(triple(s1, s2));
  CHECK(dd.white_vertices().size() == 2);
  CHECK(dd.black_vertices().size() == 2);
  CHECK(dd.face_count() == 2);
  CHECK(dd.face_half_size(0) == 2);
  CHECK(dd.face_half_size(1) == 2);
  CHECK(dd.euler_characteristic() == 2);
}

TEST_CASE("trivial cover d=1") {
  Permutation id(1);
  Dessin dd = Dessin::from_constellation(triple(id, id));
  CHECK(dd.edge_count() == 1);
  CHECK(dd.euler_characteristic() == 2);
  FaceWalk walk = dd.face_boundary(0);
  CHECK(walk.sides == std::vector<Side>{{0, true}, {0, false}});
  CHECK_FALSE(dd.is_face_embedded(0));  // the one edge is doubly incident
}

TEST_CASE("some control h=3 constellation has an embedded hexagon") {
  BranchDatum datum = control_family_datum(3);
  Permutation sigma1 = canonical_of_type(datum.partitions[0]);
  bool found = false;
  enumerate_of_type(datum.partitions[1], [&](const Permutation& cand) {
    Permutation prod = compose(sigma1, cand);
    if (cycle_type(prod) != datum.partitions[2]) return true;
    std::vector<Permutation> gens{sigma1, cand};
    if (!is_transitive(gens, 9)) return true;
    Dessin dd = Dessin::from_constellation(Constellation{9, {sigma1, cand, inverse(prod)}});
    for (int f = 0; f < dd.face_count(); ++f) {
      if (dd.is_face_embedded(f)) {
        found = true;
        return false;
      }
    }
    return true;
  });
  CHECK(found);
}

TEST_CASE("construction rejects bad input") {
  Permutation id3(3);
  CHECK_THROWS_AS(Dessin::from_constellation(Constellation{3, {id3, id3}}), Error);
  // product != identity
  CHECK_THROWS_AS(
      Dessin::from_constellation(Constellation{3, {cycles({{0, 1, 2}}, 3), id3, id3}}), Error);
  // not transitive
  Permutation a = cycles({{0, 1, 2}, {3, 4, 5}}, 6);
  CHECK_THROWS_AS(Dessin::from_constellation(Constellation{6, {a, inverse(a), Permutation(6)}}),
                  Error);
}

TEST_CASE("walk invariants over the witness corpus (d <= 8)") {
  std::vector<Constellation> corpus;
  for (int d = 1; d <= 8; ++d) {
    for (Constellation& c : witness_corpus(d)) corpus.push_back(std::move(c));
  }
  corpus.push_back(*decide_realizability(control_family_datum(3)).witness);

  for (const Constellation& c : corpus) {
    Dessin dd = Dessin::from_constellation(c);
    int d = dd.edge_count();

    // Euler characteristic equals the datum's chi
    std::vector<Partition> types;
    for (const Permutation& s : c.sigmas) types.push_back(cycle_type(s));
    CHECK(dd.euler_characteristic() == riemann_hurwitz_chi(d, types));

    // side-count conservation and two sides per edge
    int total_sides = 0;
    std::map<int, int> edge_sides;
    for (int f = 0; f < dd.face_count(); ++f) {
      FaceWalk walk = dd.face_boundary(f);
      CHECK(walk.sides.size() == 2 * static_cast<size_t>(dd.face_half_size(f)));
      total_sides += static_cast<int>(walk.sides.size());
      for (const Side& s : walk.sides) edge_sides[s.edge]++;
      // corner alternation
      for (size_t i = 0; i < walk.corners.size(); ++i) {
        CHECK(walk.corners[i].color ==
              (i % 2 == 0 ? VertexColor::Black : VertexColor::White));
      }
    }
    CHECK(total_sides == 2 * d);
    for (int e = 0; e < d; ++e) CHECK(edge_sides[e] == 2);

    // valences realize the partitions
    auto valences = [](const std::vector<std::vector<int>>& vertices) {
      std::vector<int> v;
      for (const auto& cyc : vertices) v.push_back(static_cast<int>(cyc.size()));
      std::sort(v.begin(), v.end(), std::greater<int>());
      return v;
    };
    CHECK(valences(dd.white_vertices()) == types[0].parts);
    CHECK(valences(dd.black_vertices()) == types[1].parts);
    CHECK(valences(dd.faces()) == types[2].parts);
  }
}

TEST_CASE("DOT and JSON exports") {
  Permutation c3 = cycles({{0, 1, 2}}, 3);
  Dessin dd = Dessin::from_constellation(triple(c3, c3));
  std::string dot = dd.to_dot();
  CHECK(dot.find("graph dessin {") != std::string::npos);
  CHECK(dot.find("w0 -- b0 [label=\"0\"]") != std::string::npos);
  CHECK(dot.find("// face f0: size 6") != std::string::npos);
  CHECK(dd.to_json().dump() ==
        R"({"degree":3,"white_vertices":[[0,1,2]],"black_vertices":[[0,1,2]],"faces":[[0,1,2]]})");
}

}  // TEST_SUITE
