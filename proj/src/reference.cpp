#include "hurwitz/reference.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hurwitz {

namespace {

// Local helpers on raw image arrays, kept separate from the perm module so
// the oracle does not share the code path it is checking.

std::vector<int> sorted_cycle_lengths(const std::vector<int>& img) {
  int d = static_cast<int>(img.size());
  std::vector<char> seen(static_cast<size_t>(d), 0);
  std::vector<int> lengths;
  for (int x = 0; x < d; ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    int len = 0;
    for (int y = x; !seen[static_cast<size_t>(y)]; y = img[static_cast<size_t>(y)]) {
      seen[static_cast<size_t>(y)] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return lengths;
}

bool orbit_covers_all(const std::vector<int>& a, const std::vector<int>& b) {
  int d = static_cast<int>(a.size());
  std::vector<char> reached(static_cast<size_t>(d), 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {a[static_cast<size_t>(x)], b[static_cast<size_t>(x)]}) {
      if (!reached[static_cast<size_t>(y)]) {
        reached[static_cast<size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == d;
}

std::vector<std::vector<int>> class_members(const std::vector<int>& type, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(static_cast<size_t>(d));
  std::iota(img.begin(), img.end(), 0);
  do {
    if (sorted_cycle_lengths(img) == type) out.push_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

NaiveDecision naive_decide(const BranchDatum& datum) {
  if (datum.partitions.size() != 3) {
    fail(Errc::Unsupported, "naive oracle supports exactly 3 branching points");
  }
  int d = datum.degree;
  const std::vector<int>& type1 = datum.partitions[0].parts;
  const std::vector<int>& type2 = datum.partitions[1].parts;
  const std::vector<int>& type3 = datum.partitions[2].parts;

  for (const std::vector<int>& s1 : class_members(type1, d)) {
    for (const std::vector<int>& s2 : class_members(type2, d)) {
      std::vector<int> prod(static_cast<size_t>(d));
      for (int x = 0; x < d; ++x) {
        prod[static_cast<size_t>(x)] = s1[static_cast<size_t>(s2[static_cast<size_t>(x)])];
      }
      if (sorted_cycle_lengths(prod) != type3) continue;
      if (!orbit_covers_all(s1, s2)) continue;
      std::vector<int> s3(static_cast<size_t>(d));
      for (int x = 0; x < d; ++x) s3[static_cast<size_t>(prod[static_cast<size_t>(x)])] = x;
      NaiveDecision decision;
      decision.realizable = true;
      Constellation c;
      c.degree = d;
      c.sigmas.push_back(Permutation::from_images(s1));
      c.sigmas.push_back(Permutation::from_images(s2));
      c.sigmas.push_back(Permutation::from_images(s3));
      decision.witness = std::move(c);
      return decision;
    }
  }
  return NaiveDecision{};
}

namespace {

// Standalone simplicity predicate over a closed dual walk.
bool naive_simple(const Dessin& dd, const std::vector<LoopStep>& steps) {
  size_t n = steps.size();
  std::set<int> edges;
  for (const LoopStep& s : steps) {
    if (!edges.insert(s.edge).second) return false;
  }
  struct Cut {
    int face, a, b;
  };
  std::vector<Cut> cuts;
  auto dep_face = [&](const LoopStep& s) {
    return s.dir == 0 ? dd.face_of_wb_side(s.edge) : dd.face_of_bw_side(s.edge);
  };
  auto dep_pos = [&](const LoopStep& s) {
    return s.dir == 0 ? dd.wb_side_position(s.edge) : dd.bw_side_position(s.edge);
  };
  auto arr_face = [&](const LoopStep& s) {
    return s.dir == 0 ? dd.face_of_bw_side(s.edge) : dd.face_of_wb_side(s.edge);
  };
  auto arr_pos = [&](const LoopStep& s) {
    return s.dir == 0 ? dd.bw_side_position(s.edge) : dd.wb_side_position(s.edge);
  };
  for (size_t i = 0; i < n; ++i) {
    const LoopStep& cur = steps[i];
    const LoopStep& next = steps[(i + 1) % n];
    if (arr_face(cur) != dep_face(next)) return false;
    cuts.push_back(Cut{arr_face(cur), arr_pos(cur), dep_pos(next)});
  }
  for (size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i].a == cuts[i].b) return false;
    int size = 2 * dd.face_half_size(cuts[i].face);
    for (size_t j = i + 1; j < cuts.size(); ++j) {
      if (cuts[j].face != cuts[i].face) continue;
      int ends[4] = {cuts[i].a, cuts[i].b, cuts[j].a, cuts[j].b};
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          if (ends[a] == ends[b]) return false;
        }
      }
      auto inside = [&](int x, int from, int to) {
        int span = (to - from + size) % size;
        int off = (x - from + size) % size;
        return off > 0 && off < span;
      };
      if (inside(cuts[j].a, cuts[i].a, cuts[i].b) != inside(cuts[j].b, cuts[i].a, cuts[i].b)) {
        return false;
      }
    }
  }
  return true;
}

void all_closed_walks(const Dessin& dd, int n, std::vector<LoopStep>& steps,
                      std::vector<std::vector<LoopStep>>& out) {
  auto arr_face = [&](const LoopStep& s) {
    return s.dir == 0 ? dd.face_of_bw_side(s.edge) : dd.face_of_wb_side(s.edge);
  };
  auto dep_face = [&](const LoopStep& s) {
    return s.dir == 0 ? dd.face_of_wb_side(s.edge) : dd.face_of_bw_side(s.edge);
  };
  if (static_cast<int>(steps.size()) == n) {
    if (arr_face(steps.back()) == dep_face(steps.front())) out.push_back(steps);
    return;
  }
  for (int e = 0; e < dd.edge_count(); ++e) {
    for (int dir = 0; dir < 2; ++dir) {
      LoopStep s{e, dir};
      if (!steps.empty() && dep_face(s) != arr_face(steps.back())) continue;
      steps.push_back(s);
      all_closed_walks(dd, n, steps, out);
      steps.pop_back();
    }
  }
}

}  // namespace

std::vector<DualLoop> naive_simple_loops(const Dessin& dessin, int n) {
  std::vector<DualLoop> out;
  if (n < 1) return out;
  std::vector<LoopStep> steps;
  std::vector<std::vector<LoopStep>> walks;
  all_closed_walks(dessin, n, steps, walks);
  std::set<DualLoop> canon;
  for (const auto& w : walks) {
    if (!naive_simple(dessin, w)) continue;
    canon.insert(canonical_loop(DualLoop{w}));
  }
  out.assign(canon.begin(), canon.end());
  return out;
}

}  // namespace hurwitz
