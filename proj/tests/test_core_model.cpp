#include "doctest.h"

#include "hurwitz/core_model.hpp"

using namespace hurwitz;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::BadInput;
}

}  // namespace

TEST_SUITE("core_model") {

TEST_CASE("validate_partition normalizes and checks") {
  Partition p = validate_partition({2, 4}, 6);
  CHECK(p.parts == std::vector<int>{4, 2});
  CHECK(p.total == 6);

  CHECK(validate_partition({3, 3}, 6).parts == std::vector<int>{3, 3});

  CHECK(code_of([] { validate_partition({4, 2}, 5); }) == Errc::SumMismatch);
  CHECK(code_of([] { validate_partition({0, 6}, 6); }) == Errc::NonPositivePart);
  CHECK(code_of([] { validate_partition({-1, 7}, 6); }) == Errc::NonPositivePart);
  CHECK(code_of([] { validate_partition({}, 6); }) == Errc::SumMismatch);
}

TEST_CASE("riemann_hurwitz_chi") {
  auto chi = [](int d, std::vector<std::vector<int>> raw) {
    std::vector<Partition> ps;
    for (auto& r : raw) ps.push_back(validate_partition(r, d));
    return riemann_hurwitz_chi(d, ps);
  };
  CHECK(chi(6, {{3, 3}, {3, 3}, {4, 2}}) == 0);
  CHECK(chi(1, {{1}, {1}, {1}}) == 2);
  CHECK(chi(4, {{3, 1}, {3, 1}, {2, 2}}) == 2);
}

TEST_CASE("validate_branch_datum") {
  BranchDatum datum = validate_branch_datum(6, {{3, 3}, {3, 3}, {4, 2}});
  CHECK(datum.source_chi == 0);
  CHECK(datum.degree == 6);

  CHECK(validate_branch_datum(3, {{3}, {3}, {3}}).source_chi == 0);

  CHECK(code_of([] { validate_branch_datum(4, {{2, 2}, {2, 2}, {4}}); }) == Errc::OddEuler);
  CHECK(code_of([] {
          validate_branch_datum(4, {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}});
        }) == Errc::ChiTooLarge);
  CHECK(code_of([] { validate_branch_datum(4, {{2, 2}, {2, 2}}); }) == Errc::TooFewPartitions);
  CHECK(code_of([] { validate_branch_datum(4, {{2, 3}, {2, 2}, {4}}); }) == Errc::SumMismatch);
}

TEST_CASE("theorem family") {
  BranchDatum h2 = theorem_family_datum(2);
  CHECK(h2.degree == 6);
  CHECK(h2.partitions[0].parts == std::vector<int>{3, 3});
  CHECK(h2.partitions[1].parts == std::vector<int>{3, 3});
  CHECK(h2.partitions[2].parts == std::vector<int>{4, 2});
  CHECK(h2.source_chi == 0);

  BranchDatum h3 = theorem_family_datum(3);
  CHECK(h3.degree == 9);
  CHECK(h3.partitions[2].parts == std::vector<int>{4, 3, 2});

  CHECK(code_of([] { theorem_family_datum(1); }) == Errc::HTooSmall);

  for (int h = 2; h <= 50; ++h) {
    BranchDatum datum = theorem_family_datum(h);
    CHECK(datum.source_chi == 0);
    CHECK(riemann_hurwitz_chi(datum.degree, datum.partitions) == 0);
  }
}

TEST_CASE("control family") {
  CHECK(control_family_datum(1).degree == 3);
  CHECK(control_family_datum(2).partitions ==
        std::vector<Partition>(3, validate_partition({3, 3}, 6)));
  CHECK(control_family_datum(3).source_chi == 0);
  CHECK(code_of([] { control_family_datum(0); }) == Errc::HTooSmall);
}

TEST_CASE("normalization idempotence") {
  BranchDatum a = validate_branch_datum(6, {{3, 3}, {2, 4}, {3, 3}});
  std::vector<std::vector<int>> raw;
  for (const Partition& p : a.partitions) raw.push_back(p.parts);
  BranchDatum b = validate_branch_datum(a.degree, raw);
  CHECK(a == b);
}

TEST_CASE("datum JSON round trip is byte-stable and sorts partitions") {
  auto j = nlohmann::ordered_json::parse(R"({"degree":6,"partitions":[[3,3],[2,4],[3,3]]})");
  BranchDatum datum = datum_from_json(j);
  CHECK(datum_to_json(datum).dump() == R"({"degree":6,"partitions":[[3,3],[4,2],[3,3]]})");
  CHECK(datum_from_json(datum_to_json(datum)) == datum);

  CHECK(code_of([] { datum_from_json(nlohmann::ordered_json::parse("[1,2]")); }) ==
        Errc::BadInput);
  CHECK(code_of([] {
          datum_from_json(nlohmann::ordered_json::parse(R"({"degree":2.5,"partitions":[]})"));
        }) == Errc::BadInput);
}

}  // TEST_SUITE
