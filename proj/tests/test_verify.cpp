#include "doctest.h"

#include "peakparity/verify.hpp"

#include <algorithm>

using namespace peakparity;

TEST_CASE("verification suite passes on the real maps") {
  const auto results = verify::run(8);
  CHECK(results.size() == 16);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
  for (int c = 1; c <= 8; ++c)
    CHECK(std::any_of(results.begin(), results.end(), [c](const auto& r) { return r.criterion == c; }));
}

TEST_CASE("any single-step mutation is caught at n <= 6") {
  for (MapKind k : all_map_kinds) {
    const auto results = verify::run(6, verify::MapTable::with_mutation(k));
    INFO("mutated " << to_string(k));
    CHECK(std::any_of(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
  }
}

TEST_CASE("results are deterministic") {
  const auto a = verify::run(5, verify::MapTable::with_mutation(MapKind::TirrellB));
  const auto b = verify::run(5, verify::MapTable::with_mutation(MapKind::TirrellB));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].passed == b[i].passed);
    CHECK(a[i].cases == b[i].cases);
    CHECK(a[i].detail == b[i].detail);
  }
}
