#include "hurwitz/core_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hurwitz {

Partition validate_partition(std::vector<int> parts, int d) {
  if (d < 1) fail(Errc::SumMismatch, "degree must be positive, got " + std::to_string(d));
  long long sum = 0;
  for (int p : parts) {
    if (p < 1) fail(Errc::NonPositivePart, "part " + std::to_string(p) + " is not positive");
    sum += p;
  }
  if (sum != d) {
    fail(Errc::SumMismatch,
         "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(d));
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition{std::move(parts), d};
}

int riemann_hurwitz_chi(int d, const std::vector<Partition>& partitions) {
  int n = static_cast<int>(partitions.size());
  int total_lengths = 0;
  for (const Partition& p : partitions) total_lengths += p.length();
  return total_lengths + d * (2 - n);
}

BranchDatum validate_branch_datum(int d, const std::vector<std::vector<int>>& partitions) {
  if (partitions.size() < 3) {
    fail(Errc::TooFewPartitions,
         "need at least 3 branching points, got " + std::to_string(partitions.size()));
  }
  BranchDatum datum;
  datum.degree = d;
  for (const auto& raw : partitions) datum.partitions.push_back(validate_partition(raw, d));
  int chi = riemann_hurwitz_chi(d, datum.partitions);
  if (chi % 2 != 0) {
    fail(Errc::OddEuler, "source Euler characteristic " + std::to_string(chi) + " is odd");
  }
  if (chi > 2) {
    fail(Errc::ChiTooLarge, "source Euler characteristic " + std::to_string(chi) + " exceeds 2");
  }
  datum.source_chi = chi;
  return datum;
}

BranchDatum theorem_family_datum(int h) {
  if (h < 2) fail(Errc::HTooSmall, "family starts at h = 2, got " + std::to_string(h));
  int d = 3 * h;
  std::vector<int> threes(static_cast<size_t>(h), 3);
  std::vector<int> special{4, 2};
  special.insert(special.end(), static_cast<size_t>(h - 2), 3);
  return validate_branch_datum(d, {threes, threes, special});
}

BranchDatum control_family_datum(int h) {
  if (h < 1) fail(Errc::HTooSmall, "control family starts at h = 1, got " + std::to_string(h));
  int d = 3 * h;
  std::vector<int> threes(static_cast<size_t>(h), 3);
  return validate_branch_datum(d, {threes, threes, threes});
}

BranchDatum datum_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("partitions")) {
    fail(Errc::BadInput, "datum JSON must be {\"degree\": int, \"partitions\": [[int,...],...]}");
  }
  if (!j["degree"].is_number_integer()) fail(Errc::BadInput, "\"degree\" must be an integer");
  int d = j["degree"].get<int>();
  if (!j["partitions"].is_array()) fail(Errc::BadInput, "\"partitions\" must be an array");
  std::vector<std::vector<int>> parts;
  for (const auto& row : j["partitions"]) {
    if (!row.is_array()) fail(Errc::BadInput, "each partition must be an array of integers");
    std::vector<int> p;
    for (const auto& x : row) {
      if (!x.is_number_integer()) fail(Errc::BadInput, "partition entries must be integers");
      p.push_back(x.get<int>());
    }
    parts.push_back(std::move(p));
  }
  return validate_branch_datum(d, parts);
}

nlohmann::ordered_json datum_to_json(const BranchDatum& datum) {
  nlohmann::ordered_json j;
  j["degree"] = datum.degree;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Partition& p : datum.partitions) rows.push_back(p.parts);
  j["partitions"] = std::move(rows);
  return j;
}

}  // namespace hurwitz
