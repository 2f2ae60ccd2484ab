#include "hurwitz/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "type_scan.hpp"

namespace hurwitz {

Permutation::Permutation(int degree) : img_(static_cast<size_t>(degree)) {
  if (degree < 1) fail(Errc::BadInput, "permutation degree must be positive");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  int d = static_cast<int>(images.size());
  if (d < 1) fail(Errc::BadInput, "permutation degree must be positive");
  std::vector<char> seen(static_cast<size_t>(d), 0);
  for (int x : images) {
    if (x < 0 || x >= d || seen[static_cast<size_t>(x)]) {
      fail(Errc::BadInput, "image sequence is not a bijection of {0..d-1}");
    }
    seen[static_cast<size_t>(x)] = 1;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (img_[static_cast<size_t>(i)] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    fail(Errc::DegreeMismatch, "compose: degrees " + std::to_string(p.degree()) + " vs " +
                                   std::to_string(q.degree()));
  }
  std::vector<int> img(static_cast<size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) img[static_cast<size_t>(x)] = p(q(x));
  return Permutation::from_images(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(static_cast<size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) img[static_cast<size_t>(p(x))] = x;
  return Permutation::from_images(std::move(img));
}

Partition cycle_type(const Permutation& p) {
  int d = p.degree();
  std::vector<char> seen(static_cast<size_t>(d), 0);
  std::vector<int> lengths;
  for (int x = 0; x < d; ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    int len = 0;
    for (int y = x; !seen[static_cast<size_t>(y)]; y = p(y)) {
      seen[static_cast<size_t>(y)] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition{std::move(lengths), d};
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  int d = p.degree();
  std::vector<char> seen(static_cast<size_t>(d), 0);
  std::vector<std::vector<int>> cycles;
  for (int x = 0; x < d; ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    std::vector<int> cyc;
    for (int y = x; !seen[static_cast<size_t>(y)]; y = p(y)) {
      seen[static_cast<size_t>(y)] = 1;
      cyc.push_back(y);
    }
    cycles.push_back(std::move(cyc));  // min element first: x is the smallest unseen
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return CycleDecomposition{std::move(cycles)};
}

std::string cycle_string(const Permutation& p) {
  CycleDecomposition dec = cycle_decomposition(p);
  std::string out;
  for (const auto& cyc : dec.cycles) {
    if (cyc.size() < 2) continue;
    out += '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

nlohmann::ordered_json cycles_to_json(const Permutation& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& cyc : cycle_decomposition(p).cycles) j.push_back(cyc);
  return j;
}

Permutation permutation_from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
  if (degree < 1) fail(Errc::BadInput, "permutation degree must be positive");
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> seen(static_cast<size_t>(degree), 0);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int x = cyc[i];
      int y = cyc[(i + 1) % cyc.size()];
      if (x < 0 || x >= degree) fail(Errc::BadInput, "cycle element out of range");
      if (seen[static_cast<size_t>(x)]) fail(Errc::BadInput, "cycles are not disjoint");
      seen[static_cast<size_t>(x)] = 1;
      img[static_cast<size_t>(x)] = y;
    }
  }
  return Permutation::from_images(std::move(img));
}

Permutation canonical_of_type(const Partition& pi) {
  std::vector<int> img(static_cast<size_t>(pi.total));
  int base = 0;
  for (int k : pi.parts) {
    for (int i = 0; i < k; ++i) img[static_cast<size_t>(base + i)] = base + (i + 1) % k;
    base += k;
  }
  return Permutation::from_images(std::move(img));
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

bool is_transitive(std::span<const Permutation> perms, int degree) {
  for (const Permutation& p : perms) {
    if (p.degree() != degree) {
      fail(Errc::DegreeMismatch, "is_transitive: generator degree " + std::to_string(p.degree()) +
                                     " vs " + std::to_string(degree));
    }
  }
  if (degree == 1) return true;
  if (perms.empty()) return false;
  Dsu dsu(degree);
  for (const Permutation& p : perms) {
    for (int x = 0; x < degree; ++x) dsu.unite(x, p(x));
  }
  int root = dsu.find(0);
  for (int x = 1; x < degree; ++x) {
    if (dsu.find(x) != root) return false;
  }
  return true;
}

std::uint64_t centralizer_order(const Partition& pi) {
  std::uint64_t order = 1;
  size_t i = 0;
  while (i < pi.parts.size()) {
    int k = pi.parts[i];
    std::uint64_t m = 0;
    while (i < pi.parts.size() && pi.parts[i] == k) {
      ++m;
      ++i;
    }
    for (std::uint64_t j = 0; j < m; ++j) order *= static_cast<std::uint64_t>(k);
    for (std::uint64_t j = 2; j <= m; ++j) order *= j;
  }
  return order;
}

std::uint64_t conjugacy_class_size(const Partition& pi) {
  if (pi.total > 20) fail(Errc::Unsupported, "exact class size needs degree <= 20");
  std::uint64_t fact = 1;
  for (int i = 2; i <= pi.total; ++i) fact *= static_cast<std::uint64_t>(i);
  return fact / centralizer_order(pi);
}

std::vector<Permutation> centralizer_generators(const Partition& pi) {
  int d = pi.total;
  std::vector<Permutation> gens;
  // Block layout of canonical_of_type: cumulative offsets per part.
  std::vector<int> offset(pi.parts.size() + 1, 0);
  for (size_t i = 0; i < pi.parts.size(); ++i) offset[i + 1] = offset[i] + pi.parts[i];
  for (size_t i = 0; i < pi.parts.size(); ++i) {
    int k = pi.parts[i];
    if (k < 2) continue;
    std::vector<int> img(static_cast<size_t>(d));
    std::iota(img.begin(), img.end(), 0);
    for (int j = 0; j < k; ++j) {
      img[static_cast<size_t>(offset[i] + j)] = offset[i] + (j + 1) % k;
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  for (size_t i = 0; i + 1 < pi.parts.size(); ++i) {
    if (pi.parts[i] != pi.parts[i + 1]) continue;
    int k = pi.parts[i];
    std::vector<int> img(static_cast<size_t>(d));
    std::iota(img.begin(), img.end(), 0);
    for (int j = 0; j < k; ++j) {
      img[static_cast<size_t>(offset[i] + j)] = offset[i + 1] + j;
      img[static_cast<size_t>(offset[i + 1] + j)] = offset[i] + j;
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return gens;
}

void enumerate_of_type(const Partition& pi, const std::function<bool(const Permutation&)>& visit) {
  detail::TypeScan scan(pi.parts, pi.total);
  scan.run([&](const std::vector<int>& img) { return visit(Permutation::from_images(img)); });
}

}  // namespace hurwitz
