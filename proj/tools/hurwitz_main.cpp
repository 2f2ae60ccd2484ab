// Command-line front end: realizability decisions, theorem-family batch
// verification, and dessin/homology analysis. JSON goes to stdout, human
// diagnostics to stderr. Exit codes: 0 completed decision/analysis, 1 theorem
// contradiction, 2 validation error, 3 I/O or parse error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hurwitz/core_model.hpp"
#include "hurwitz/dessin.hpp"
#include "hurwitz/homology.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/search.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using Clock = std::chrono::steady_clock;

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) hurwitz::fail(hurwitz::Errc::BadInput, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void run_report(const std::string& command, const std::string& digest, Clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  std::cerr << "hurwitz " << command << " digest=" << digest << " elapsed_ms=" << ms
            << " version=" << kVersion << "\n";
}

int cmd_decide(const std::string& datum_file, bool count_flag, bool no_reduce, int jobs) {
  auto start = Clock::now();
  std::string raw = read_file(datum_file);
  hurwitz::BranchDatum datum = hurwitz::datum_from_json(nlohmann::ordered_json::parse(raw));
  hurwitz::SearchOptions opts;
  opts.use_centralizer_reduction = !no_reduce;
  opts.parallelism_hint = jobs;
  nlohmann::ordered_json out;
  if (count_flag) {
    hurwitz::CountResult result = hurwitz::count_constellations(datum, opts);
    out["realizable"] = result.constellations > 0;
    out["witness"] = result.witness ? hurwitz::witness_to_json(*result.witness)
                                    : nlohmann::ordered_json(nullptr);
    out["candidates_examined"] = result.candidates_examined;
    out["reduced"] = result.reduction_used;
    out["constellations"] = result.constellations;
  } else {
    out = hurwitz::decision_to_json(hurwitz::decide_realizability(datum, opts));
  }
  std::cout << out.dump() << "\n";
  run_report("decide", fnv1a_hex(raw), start);
  return 0;
}

int cmd_verify_theorem(int h_max, int jobs) {
  auto start = Clock::now();
  if (h_max < 2) hurwitz::fail(hurwitz::Errc::HTooSmall, "--h-max must be at least 2");
  hurwitz::SearchOptions opts;
  opts.parallelism_hint = jobs;
  bool pass = true;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (int h = 2; h <= h_max; ++h) {
    hurwitz::BranchDatum datum = hurwitz::theorem_family_datum(h);
    hurwitz::CountResult res = hurwitz::count_constellations(datum, opts);
    int sigma2_pos = res.sigma1_position == 0 ? 1 : 0;
    std::uint64_t candidates = 0;
    try {
      candidates = hurwitz::conjugacy_class_size(
          datum.partitions[static_cast<size_t>(sigma2_pos)]);
    } catch (const hurwitz::Error&) {
      candidates = 0;
    }
    nlohmann::ordered_json row;
    row["h"] = h;
    row["degree"] = datum.degree;
    row["candidates"] = candidates;
    row["constellations"] = res.constellations;
    results.push_back(std::move(row));
    bool ok = res.constellations == 0;
    pass = pass && ok;
    std::cerr << "h=" << h << " d=" << datum.degree << " candidates=" << candidates
              << " constellations=" << res.constellations << (ok ? " PASS" : " FAIL") << "\n";
  }
  nlohmann::ordered_json out;
  out["h_max"] = h_max;
  out["results"] = std::move(results);
  out["pass"] = pass;
  std::cout << out.dump() << "\n";
  run_report("verify-theorem", fnv1a_hex("h_max=" + std::to_string(h_max)), start);
  return pass ? 0 : 1;
}

int cmd_analyze(const std::string& witness_file, const std::string& dot_file, int max_loop_len) {
  auto start = Clock::now();
  std::string raw = read_file(witness_file);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(raw);
  if (!j.contains("sigma") && j.contains("witness") && j["witness"].is_object()) {
    j = j["witness"];
  }
  hurwitz::Constellation c = hurwitz::witness_from_json(j);

  std::vector<std::vector<int>> types;
  for (const hurwitz::Permutation& s : c.sigmas) types.push_back(hurwitz::cycle_type(s).parts);
  hurwitz::BranchDatum datum = hurwitz::validate_branch_datum(c.degree, types);
  if (!hurwitz::verify_witness(datum, c).pass()) {
    hurwitz::fail(hurwitz::Errc::InvalidConstellation, "witness failed verification");
  }

  hurwitz::Dessin dessin = hurwitz::Dessin::from_constellation(c);
  hurwitz::AnalysisReport report = hurwitz::analyze_dessin(dessin, max_loop_len);
  std::cout << hurwitz::analysis_to_json(dessin, report).dump() << "\n";
  if (!dot_file.empty()) {
    std::ofstream out(dot_file, std::ios::binary);
    if (!out) hurwitz::fail(hurwitz::Errc::BadInput, "cannot write file: " + dot_file);
    out << dessin.to_dot();
  }
  run_report("analyze", fnv1a_hex(raw), start);
  return 0;
}

int exit_code_for(const hurwitz::Error& e) {
  return e.code() == hurwitz::Errc::BadInput ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision engine for branched covers of the sphere: exhaustive "
               "monodromy search, dessins d'enfants, and dual-loop homology."};
  app.require_subcommand(1);

  auto* decide = app.add_subcommand("decide", "Decide realizability of a branch datum");
  std::string datum_file;
  bool count_flag = false, no_reduce = false;
  int decide_jobs = 1;
  decide->add_option("--datum", datum_file, "Branch datum JSON file")->required();
  decide->add_flag("--count", count_flag, "Count all constellations instead of stopping early");
  decide->add_flag("--no-reduce", no_reduce, "Disable centralizer-orbit reduction");
  decide->add_option("--jobs", decide_jobs, "Worker count for the candidate scan");

  auto* verify = app.add_subcommand("verify-theorem",
                                    "Exhaustively confirm the non-realizable family "
                                    "(3,...,3), (3,...,3), (4,2,3,...,3) for h = 2..H");
  int h_max = 0, verify_jobs = 1;
  verify->add_option("--h-max", h_max, "Largest h to check")->required();
  verify->add_option("--jobs", verify_jobs, "Worker count for the candidate scan");

  auto* analyze = app.add_subcommand("analyze", "Dessin and homology analysis of a witness");
  std::string witness_file, dot_file;
  int max_loop_len = 6;
  analyze->add_option("--witness", witness_file, "Witness JSON file")->required();
  analyze->add_option("--dot", dot_file, "Write the dessin as a DOT graph to this file");
  analyze->add_option("--max-loop-len", max_loop_len, "Loop census length cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*decide) return cmd_decide(datum_file, count_flag, no_reduce, decide_jobs);
    if (*verify) return cmd_verify_theorem(h_max, verify_jobs);
    if (*analyze) return cmd_analyze(witness_file, dot_file, max_loop_len);
  } catch (const hurwitz::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 2;
}
