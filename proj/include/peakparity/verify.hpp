#pragma once

#include "peakparity/bijection.hpp"
#include "peakparity/path.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace peakparity::verify {

/// The bijections under test. Swapping entries lets a caller check that the
/// suite notices a broken implementation.
struct MapTable {
  std::function<MotzkinPath(const DyckPath&)> phi_a;
  std::function<MotzkinPath(const DyckPath&)> phi_b;
  std::function<DyckPath(const MotzkinPath&)> psi_a;
  std::function<DyckPath(const MotzkinPath&)> psi_b;
  std::function<MotzkinPath(const DyckPath&)> explicit_map;
  std::function<MotzkinPath(const DyckPath&)> tirrell_a;
  std::function<MotzkinPath(const DyckPath&)> tirrell_b;
  std::function<DyckPath(const MotzkinPath&)> tirrell_a_inv;
  std::function<DyckPath(const MotzkinPath&)> tirrell_b_inv;

  static MapTable standard();

  /// Standard table except that `kind` has the first step of every nonempty
  /// output changed (U -> F, F -> U, D -> F). ExplicitA and ExplicitB share one
  /// entry.
  static MapTable with_mutation(MapKind kind);
};

struct CheckResult {
  std::string name;
  int criterion = 0; // acceptance criterion number, 0 for module invariants
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail; // first failure, smallest n first
};

/// Runs every counting, bijection, statistic and tree check for all sizes
/// 0..max_n. Sizes run concurrently; result order is fixed.
std::vector<CheckResult> run(std::size_t max_n, const MapTable& maps = MapTable::standard());

} // namespace peakparity::verify
