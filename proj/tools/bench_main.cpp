// Benchmark: the parallel engine against the serial double-enumeration
// reference, and reduced against unreduced scans, on the two built-in
// families. Timings only; not part of the test suite.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hurwitz/core_model.hpp"
#include "hurwitz/reference.hpp"
#include "hurwitz/search.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
  auto start = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void bench_datum(const std::string& label, const hurwitz::BranchDatum& datum, int jobs) {
  hurwitz::SearchOptions serial_plain{false, 1};
  hurwitz::SearchOptions serial_reduced{true, 1};
  hurwitz::SearchOptions parallel_reduced{true, jobs};

  std::uint64_t count = 0;
  double t_plain = time_ms([&] { count = hurwitz::count_constellations(datum, serial_plain).constellations; });
  double t_reduced = time_ms([&] { hurwitz::count_constellations(datum, serial_reduced); });
  double t_parallel = time_ms([&] { hurwitz::count_constellations(datum, parallel_reduced); });

  double t_naive = -1.0;
  if (datum.degree <= 6) {
    t_naive = time_ms([&] { hurwitz::naive_decide(datum); });
  }

  std::printf("%-14s d=%2d count=%-8llu plain=%9.2fms reduced=%9.2fms x%d-jobs=%9.2fms ",
              label.c_str(), datum.degree, static_cast<unsigned long long>(count), t_plain,
              t_reduced, jobs, t_parallel);
  if (t_naive >= 0) {
    std::printf("naive-ref=%9.2fms\n", t_naive);
  } else {
    std::printf("naive-ref=        --\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Engine vs reference benchmark"};
  int h_max = 3, jobs = 4;
  app.add_option("--h-max", h_max, "Largest h for both families");
  app.add_option("--jobs", jobs, "Worker count for the parallel runs");
  CLI11_PARSE(app, argc, argv);

  std::printf("%-14s %-4s %-14s %-16s %-17s %-16s %s\n", "datum", "", "", "serial scan",
              "reduced scan", "parallel scan", "serial reference");
  for (int h = 1; h <= h_max; ++h) {
    bench_datum("control h=" + std::to_string(h), hurwitz::control_family_datum(h), jobs);
  }
  for (int h = 2; h <= h_max; ++h) {
    bench_datum("family h=" + std::to_string(h), hurwitz::theorem_family_datum(h), jobs);
  }
  return 0;
}
