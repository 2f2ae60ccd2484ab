#include "hurwitz/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "type_scan.hpp"

namespace hurwitz {

VerificationReport verify_witness(const BranchDatum& datum, const Constellation& c) {
  if (c.degree != datum.degree) {
    fail(Errc::DegreeMismatch, "witness degree " + std::to_string(c.degree) + " vs datum degree " +
                                   std::to_string(datum.degree));
  }
  if (c.sigmas.size() != datum.partitions.size()) {
    fail(Errc::DegreeMismatch, "witness has " + std::to_string(c.sigmas.size()) +
                                   " permutations, datum has " +
                                   std::to_string(datum.partitions.size()) + " partitions");
  }
  for (const Permutation& s : c.sigmas) {
    if (s.degree() != datum.degree) fail(Errc::DegreeMismatch, "witness permutation degree");
  }
  VerificationReport report;
  Permutation prod = c.sigmas.front();
  for (size_t j = 1; j < c.sigmas.size(); ++j) prod = compose(prod, c.sigmas[j]);
  report.product_is_identity = prod.is_identity();
  for (size_t j = 0; j < c.sigmas.size(); ++j) {
    report.cycle_type_match.push_back(cycle_type(c.sigmas[j]) == datum.partitions[j]);
  }
  report.transitive = is_transitive(std::span<const Permutation>(c.sigmas), datum.degree);
  return report;
}

namespace {

constexpr std::uint64_t kReductionElementCap = 100000;

unsigned __int128 centralizer_order_wide(const Partition& pi) {
  constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
  unsigned __int128 order = 1;
  auto mul = [&](unsigned __int128 f) {
    if (f != 0 && order > kMax / f) {
      order = kMax;
    } else {
      order *= f;
    }
  };
  size_t i = 0;
  while (i < pi.parts.size()) {
    int k = pi.parts[i];
    int m = 0;
    while (i < pi.parts.size() && pi.parts[i] == k) {
      ++m;
      ++i;
    }
    for (int j = 0; j < m; ++j) mul(static_cast<unsigned>(k));
    for (int j = 2; j <= m; ++j) mul(static_cast<unsigned>(j));
  }
  return order;
}

struct ZElement {
  std::vector<int> img;
  std::vector<int> inv;
};

struct EngineSetup {
  int degree = 0;
  int sigma1_pos = 0, sigma2_pos = 0, sigma3_pos = 0;
  Permutation sigma1;
  Partition pi2;
  std::vector<int> expected3_cnt;  // per cycle length, from pi3
  bool reduced = false;
  std::vector<Permutation> zgens;
  std::vector<ZElement> zelems;  // non-identity centralizer elements
  std::vector<char> root_allow;

  explicit EngineSetup(Permutation s1) : sigma1(std::move(s1)) {}
};

// Full closure of the generators; empty result means the cap was exceeded.
std::vector<std::vector<int>> group_closure(const std::vector<Permutation>& gens, int degree,
                                            std::uint64_t cap) {
  std::set<std::vector<int>> seen;
  std::vector<int> identity(static_cast<size_t>(degree));
  std::iota(identity.begin(), identity.end(), 0);
  seen.insert(identity);
  std::queue<std::vector<int>> todo;
  todo.push(identity);
  while (!todo.empty()) {
    std::vector<int> cur = std::move(todo.front());
    todo.pop();
    for (const Permutation& g : gens) {
      std::vector<int> next(static_cast<size_t>(degree));
      for (int x = 0; x < degree; ++x) {
        next[static_cast<size_t>(x)] = g(cur[static_cast<size_t>(x)]);
      }
      if (seen.insert(next).second) {
        if (seen.size() > cap) return {};
        todo.push(std::move(next));
      }
    }
  }
  return std::vector<std::vector<int>>(seen.begin(), seen.end());
}

EngineSetup make_setup(const BranchDatum& datum, const SearchOptions& opts) {
  if (datum.partitions.size() != 3) {
    fail(Errc::Unsupported,
         "search supports exactly 3 branching points, got " +
             std::to_string(datum.partitions.size()));
  }
  try {
    std::vector<std::vector<int>> raw;
    for (const Partition& p : datum.partitions) raw.push_back(p.parts);
    BranchDatum check = validate_branch_datum(datum.degree, raw);
    if (check.source_chi != datum.source_chi) fail(Errc::InvalidDatum, "stale source_chi");
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidDatum) throw;
    fail(Errc::InvalidDatum, e.what());
  }

  int sigma1_pos = 0;
  unsigned __int128 best = centralizer_order_wide(datum.partitions[0]);
  for (int i = 1; i < 3; ++i) {
    unsigned __int128 z = centralizer_order_wide(datum.partitions[static_cast<size_t>(i)]);
    if (z < best) {
      best = z;
      sigma1_pos = i;
    }
  }
  int sigma2_pos = sigma1_pos == 0 ? 1 : 0;
  int sigma3_pos = 3 - sigma1_pos - sigma2_pos;

  EngineSetup setup(canonical_of_type(datum.partitions[static_cast<size_t>(sigma1_pos)]));
  setup.degree = datum.degree;
  setup.sigma1_pos = sigma1_pos;
  setup.sigma2_pos = sigma2_pos;
  setup.sigma3_pos = sigma3_pos;
  setup.pi2 = datum.partitions[static_cast<size_t>(sigma2_pos)];
  setup.expected3_cnt.assign(static_cast<size_t>(datum.degree) + 1, 0);
  for (int k : datum.partitions[static_cast<size_t>(sigma3_pos)].parts) {
    setup.expected3_cnt[static_cast<size_t>(k)]++;
  }

  if (opts.use_centralizer_reduction) {
    setup.zgens = centralizer_generators(datum.partitions[static_cast<size_t>(sigma1_pos)]);
    std::vector<std::vector<int>> elems =
        group_closure(setup.zgens, datum.degree, kReductionElementCap);
    if (elems.size() > 1) {
      setup.reduced = true;
      for (std::vector<int>& e : elems) {
        bool identity = true;
        for (int x = 0; x < datum.degree; ++x) {
          if (e[static_cast<size_t>(x)] != x) {
            identity = false;
            break;
          }
        }
        if (identity) continue;
        ZElement z;
        z.inv.assign(static_cast<size_t>(datum.degree), 0);
        for (int x = 0; x < datum.degree; ++x) {
          z.inv[static_cast<size_t>(e[static_cast<size_t>(x)])] = x;
        }
        z.img = std::move(e);
        setup.zelems.push_back(std::move(z));
      }
      setup.root_allow.assign(static_cast<size_t>(datum.degree), 1);
      for (const ZElement& z : setup.zelems) {
        if (z.img[0] != 0) continue;
        for (int v = 0; v < datum.degree; ++v) {
          if (z.img[static_cast<size_t>(v)] < v) setup.root_allow[static_cast<size_t>(v)] = 0;
        }
      }
    }
  }
  return setup;
}

struct Scratch {
  std::vector<int> prod;
  std::vector<char> seen;
  std::vector<int> cnt;
  std::vector<int> dsu;

  explicit Scratch(int d)
      : prod(static_cast<size_t>(d)),
        seen(static_cast<size_t>(d)),
        cnt(static_cast<size_t>(d) + 1),
        dsu(static_cast<size_t>(d)) {}
};

bool accepts(const EngineSetup& s, const std::vector<int>& img, Scratch& scr) {
  int d = s.degree;
  const std::vector<int>& s1 = s.sigma1.images();
  for (int x = 0; x < d; ++x) {
    scr.prod[static_cast<size_t>(x)] = s1[static_cast<size_t>(img[static_cast<size_t>(x)])];
  }
  std::copy(s.expected3_cnt.begin(), s.expected3_cnt.end(), scr.cnt.begin());
  std::fill(scr.seen.begin(), scr.seen.end(), 0);
  for (int x = 0; x < d; ++x) {
    if (scr.seen[static_cast<size_t>(x)]) continue;
    int len = 0;
    for (int y = x; !scr.seen[static_cast<size_t>(y)]; y = scr.prod[static_cast<size_t>(y)]) {
      scr.seen[static_cast<size_t>(y)] = 1;
      ++len;
    }
    if (scr.cnt[static_cast<size_t>(len)] == 0) return false;
    scr.cnt[static_cast<size_t>(len)]--;
  }
  // cycle types match; now transitivity of <sigma1, sigma2>
  std::iota(scr.dsu.begin(), scr.dsu.end(), 0);
  auto find = [&](int x) {
    while (scr.dsu[static_cast<size_t>(x)] != x) {
      scr.dsu[static_cast<size_t>(x)] =
          scr.dsu[static_cast<size_t>(scr.dsu[static_cast<size_t>(x)])];
      x = scr.dsu[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int x = 0; x < d; ++x) {
    int a = find(x), b = find(s1[static_cast<size_t>(x)]);
    if (a != b) scr.dsu[static_cast<size_t>(a)] = b;
    a = find(x);
    b = find(img[static_cast<size_t>(x)]);
    if (a != b) scr.dsu[static_cast<size_t>(a)] = b;
  }
  int root = find(0);
  for (int x = 1; x < d; ++x) {
    if (find(x) != root) return false;
  }
  return true;
}

bool is_orbit_min(const EngineSetup& s, const std::vector<int>& img) {
  int d = s.degree;
  for (const ZElement& z : s.zelems) {
    for (int x = 0; x < d; ++x) {
      int a = z.img[static_cast<size_t>(
          img[static_cast<size_t>(z.inv[static_cast<size_t>(x)])])];
      int b = img[static_cast<size_t>(x)];
      if (a < b) return false;
      if (a > b) break;
    }
  }
  return true;
}

std::uint64_t orbit_size(const EngineSetup& s, const std::vector<int>& img) {
  std::set<std::vector<int>> orbit;
  orbit.insert(img);
  std::queue<std::vector<int>> todo;
  todo.push(img);
  int d = s.degree;
  while (!todo.empty()) {
    std::vector<int> cur = std::move(todo.front());
    todo.pop();
    for (const Permutation& g : s.zgens) {
      std::vector<int> next(static_cast<size_t>(d));
      for (int x = 0; x < d; ++x) {
        int gx = g(x);
        next[static_cast<size_t>(gx)] = g(cur[static_cast<size_t>(x)]);
      }
      if (orbit.insert(next).second) todo.push(std::move(next));
    }
  }
  return orbit.size();
}

struct TaskResult {
  std::uint64_t examined = 0;
  std::uint64_t accepted = 0;
  bool has_accept = false;
  std::vector<int> first_accept;
  std::uint64_t first_accept_index = 0;
};

enum class Mode { Decide, Count };

// Scans one contiguous block of the candidate stream (one lexicographic
// prefix of the image array). `should_abort` lets decide-mode tasks stop once
// an earlier block has already accepted.
template <class Abort>
TaskResult run_task(const EngineSetup& setup, const std::vector<int>* prefix, Mode mode,
                    Abort&& should_abort) {
  TaskResult res;
  Scratch scr(setup.degree);
  detail::TypeScan scan(setup.pi2.parts, setup.degree);
  const std::vector<char>* root = setup.reduced ? &setup.root_allow : nullptr;
  scan.run(
      [&](const std::vector<int>& img) {
        if (should_abort()) return false;
        if (setup.reduced && !is_orbit_min(setup, img)) return true;
        res.examined++;
        if (!accepts(setup, img, scr)) return true;
        if (!res.has_accept) {
          res.has_accept = true;
          res.first_accept = img;
          res.first_accept_index = res.examined;
        }
        if (mode == Mode::Decide) return false;
        res.accepted += setup.reduced ? orbit_size(setup, img) : 1;
        return true;
      },
      root, prefix);
  return res;
}

struct ScanOutcome {
  std::uint64_t examined = 0;
  std::uint64_t accepted = 0;
  bool has_accept = false;
  std::vector<int> first_accept;
};

ScanOutcome run_scan(const EngineSetup& setup, Mode mode, int jobs) {
  ScanOutcome out;
  jobs = std::max(1, jobs);
#ifndef _OPENMP
  jobs = 1;
#endif
  if (jobs == 1 || setup.degree < 4) {
    TaskResult res = run_task(setup, nullptr, mode, [] { return false; });
    out.examined = res.examined;
    out.accepted = res.accepted;
    out.has_accept = res.has_accept;
    out.first_accept = std::move(res.first_accept);
    if (mode == Mode::Decide && res.has_accept) out.examined = res.first_accept_index;
    return out;
  }

  detail::TypeScan splitter(setup.pi2.parts, setup.degree);
  int depth = setup.degree >= 7 ? 2 : 1;
  const std::vector<char>* root = setup.reduced ? &setup.root_allow : nullptr;
  std::vector<std::vector<int>> prefixes = splitter.prefixes(depth, root);
  int n_tasks = static_cast<int>(prefixes.size());
  if (n_tasks == 0) return out;

  std::vector<TaskResult> results(static_cast<size_t>(n_tasks));
  std::atomic<long long> best_accept{std::numeric_limits<long long>::max()};
  std::atomic<bool> failed{false};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
#endif
  for (int t = 0; t < n_tasks; ++t) {
    try {
      auto abort_check = [&, t]() {
        return mode == Mode::Decide && static_cast<long long>(t) > best_accept.load(std::memory_order_relaxed);
      };
      TaskResult res = run_task(setup, &prefixes[static_cast<size_t>(t)], mode, abort_check);
      if (mode == Mode::Decide && res.has_accept) {
        long long cur = best_accept.load(std::memory_order_relaxed);
        while (static_cast<long long>(t) < cur &&
               !best_accept.compare_exchange_weak(cur, static_cast<long long>(t))) {
        }
      }
      results[static_cast<size_t>(t)] = std::move(res);
    } catch (...) {
      failed.store(true);
    }
  }
  if (failed.load()) fail(Errc::InvalidDatum, "internal: worker failed during scan");

  if (mode == Mode::Decide) {
    long long t_star = -1;
    for (int t = 0; t < n_tasks; ++t) {
      if (results[static_cast<size_t>(t)].has_accept) {
        t_star = t;
        break;
      }
    }
    if (t_star < 0) {
      for (const TaskResult& r : results) out.examined += r.examined;
      return out;
    }
    for (int t = 0; t < t_star; ++t) out.examined += results[static_cast<size_t>(t)].examined;
    out.examined += results[static_cast<size_t>(t_star)].first_accept_index;
    out.has_accept = true;
    out.first_accept = results[static_cast<size_t>(t_star)].first_accept;
    return out;
  }

  for (int t = 0; t < n_tasks; ++t) {
    const TaskResult& r = results[static_cast<size_t>(t)];
    out.examined += r.examined;
    out.accepted += r.accepted;
    if (!out.has_accept && r.has_accept) {
      out.has_accept = true;
      out.first_accept = r.first_accept;
    }
  }
  return out;
}

Constellation build_witness(const BranchDatum& datum, const EngineSetup& s,
                            const std::vector<int>& sigma2_img) {
  Permutation q2 = Permutation::from_images(sigma2_img);
  Permutation q3 = inverse(compose(s.sigma1, q2));
  std::vector<std::pair<int, Permutation>> items{
      {s.sigma1_pos, s.sigma1}, {s.sigma2_pos, q2}, {s.sigma3_pos, q3}};
  // Bubble into datum order; each adjacent swap (g, h) -> (h, h^-1 g h)
  // preserves the product and moves the cycle types with their positions.
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < items.size(); ++i) {
      if (items[i].first <= items[i + 1].first) continue;
      Permutation g = items[i].second;
      Permutation h = items[i + 1].second;
      int gp = items[i].first;
      items[i] = {items[i + 1].first, h};
      items[i + 1] = {gp, compose(inverse(h), compose(g, h))};
      moved = true;
    }
  }
  Constellation c;
  c.degree = datum.degree;
  for (auto& [pos, perm] : items) c.sigmas.push_back(std::move(perm));
  if (!verify_witness(datum, c).pass()) {
    fail(Errc::InvalidConstellation, "internal: witness reconstruction failed verification");
  }
  return c;
}

}  // namespace

Decision decide_realizability(const BranchDatum& datum, const SearchOptions& opts) {
  EngineSetup setup = make_setup(datum, opts);
  ScanOutcome out = run_scan(setup, Mode::Decide, opts.parallelism_hint);
  Decision decision;
  decision.reduction_used = setup.reduced;
  decision.sigma1_position = setup.sigma1_pos;
  decision.candidates_examined = out.examined;
  decision.realizable = out.has_accept;
  if (out.has_accept) decision.witness = build_witness(datum, setup, out.first_accept);
  return decision;
}

CountResult count_constellations(const BranchDatum& datum, const SearchOptions& opts) {
  EngineSetup setup = make_setup(datum, opts);
  ScanOutcome out = run_scan(setup, Mode::Count, opts.parallelism_hint);
  CountResult result;
  result.reduction_used = setup.reduced;
  result.sigma1_position = setup.sigma1_pos;
  result.candidates_examined = out.examined;
  result.constellations = out.accepted;
  if (out.has_accept) result.witness = build_witness(datum, setup, out.first_accept);
  return result;
}

nlohmann::ordered_json witness_to_json(const Constellation& c) {
  nlohmann::ordered_json j;
  j["degree"] = c.degree;
  nlohmann::ordered_json sig = nlohmann::ordered_json::array();
  for (const Permutation& s : c.sigmas) sig.push_back(cycles_to_json(s));
  j["sigma"] = std::move(sig);
  return j;
}

Constellation witness_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("sigma")) {
    fail(Errc::BadInput, "witness JSON must be {\"degree\": int, \"sigma\": [[[int,...],...],...]}");
  }
  if (!j["degree"].is_number_integer()) fail(Errc::BadInput, "\"degree\" must be an integer");
  int d = j["degree"].get<int>();
  if (d < 1) fail(Errc::BadInput, "degree must be positive");
  if (!j["sigma"].is_array()) fail(Errc::BadInput, "\"sigma\" must be an array");
  Constellation c;
  c.degree = d;
  for (const auto& perm_json : j["sigma"]) {
    if (!perm_json.is_array()) fail(Errc::BadInput, "each sigma entry must be an array of cycles");
    std::vector<std::vector<int>> cycles;
    for (const auto& cyc : perm_json) {
      if (!cyc.is_array()) fail(Errc::BadInput, "each cycle must be an array of integers");
      std::vector<int> one;
      for (const auto& x : cyc) {
        if (!x.is_number_integer()) fail(Errc::BadInput, "cycle entries must be integers");
        one.push_back(x.get<int>());
      }
      cycles.push_back(std::move(one));
    }
    c.sigmas.push_back(permutation_from_cycles(cycles, d));
  }
  return c;
}

nlohmann::ordered_json decision_to_json(const Decision& decision) {
  nlohmann::ordered_json j;
  j["realizable"] = decision.realizable;
  j["witness"] = decision.witness ? witness_to_json(*decision.witness)
                                  : nlohmann::ordered_json(nullptr);
  j["candidates_examined"] = decision.candidates_examined;
  j["reduced"] = decision.reduction_used;
  return j;
}

}  // namespace hurwitz
