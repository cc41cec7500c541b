#pragma once

#include "peakparity/error.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace peakparity {

/// One lattice step. Enumerator order is the lexicographic order used by the
/// generators (U < F < D), so `std::vector<Step>` compares correctly.
enum class Step : std::uint8_t { Up = 0, Flat = 1, Down = 2 };

using Steps = std::vector<Step>;

constexpr int delta(Step s) noexcept {
  switch (s) {
  case Step::Up: return 1;
  case Step::Down: return -1;
  case Step::Flat: return 0;
  }
  return 0;
}

constexpr char to_char(Step s) noexcept {
  switch (s) {
  case Step::Up: return 'U';
  case Step::Down: return 'D';
  case Step::Flat: return 'F';
  }
  return '?';
}

/// Parses a U/D/F string. Throws InvalidCharacter with the offending position.
Steps parse_steps(std::string_view text);
std::string render(std::span<const Step> steps);

/// A path that never dips below ground and returns to it.
class MotzkinPath {
public:
  MotzkinPath() = default;

  /// Throws UnbalancedPath (position = final level) or BelowGround.
  static MotzkinPath validate(Steps steps);
  static MotzkinPath parse(std::string_view text) { return validate(parse_steps(text)); }

  const Steps& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  std::string str() const { return render(steps_); }

  friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;

private:
  explicit MotzkinPath(Steps steps) : steps_(std::move(steps)) {}
  Steps steps_;
};

/// A flat-free Motzkin path. The empty path is the Dyck path of semilength 0.
class DyckPath {
public:
  DyckPath() = default;

  /// Throws ContainsFlat, UnbalancedPath or BelowGround.
  static DyckPath validate(Steps steps);
  static DyckPath parse(std::string_view text) { return validate(parse_steps(text)); }

  const Steps& steps() const noexcept { return steps_; }
  std::size_t semilength() const noexcept { return steps_.size() / 2; }
  bool empty() const noexcept { return steps_.empty(); }
  std::string str() const { return render(steps_); }
  MotzkinPath as_motzkin() const { return MotzkinPath::validate(steps_); }

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
  explicit DyckPath(Steps steps) : steps_(std::move(steps)) {}
  Steps steps_;
};

/// Wraps `U inner D`.
DyckPath lift(const DyckPath& inner);
DyckPath concat(std::span<const DyckPath> parts);

struct Peak {
  std::int64_t position; // index of the Up step; -1 for the empty path's conventional peak
  int height;

  friend bool operator==(const Peak&, const Peak&) = default;
};

/// Peaks are UD factors, height taken after the Up. The empty path has one
/// peak at height 0 at position -1.
std::vector<Peak> peaks(const DyckPath& p);

enum class ParityClass { AllOdd, AllEven, Mixed };

std::string_view to_string(ParityClass c) noexcept;
ParityClass classify(const DyckPath& p);

/// Returns the interiors P_1..P_k of p = U P_1 D ... U P_k D.
std::vector<DyckPath> decompose(const DyckPath& p);

struct PathStats {
  std::uint64_t peaks = 0;          // UD factors; 0 for the empty path
  std::uint64_t ground_returns = 0; // Down steps ending at level 0
  std::uint64_t ground_flats = 0;   // Flat steps taken at level 0
  std::uint64_t ground_downs = 0;   // same scan as ground_returns, named for Motzkin images
  std::uint64_t u_count = 0;
  std::uint64_t f_count = 0;
  std::uint64_t uu_count = 0;
  std::uint64_t fu_count = 0;
  std::int64_t peak_image = 0; // (u - uu) + (f - fu)

  friend bool operator==(const PathStats&, const PathStats&) = default;
};

PathStats stats(std::span<const Step> steps);
inline PathStats stats(const DyckPath& p) { return stats(p.steps()); }
inline PathStats stats(const MotzkinPath& m) { return stats(m.steps()); }

/// Segments starting at each ground-level Flat. Throws NotInImage unless m is
/// empty or begins with a Flat.
std::vector<MotzkinPath> split_at_ground_flats(const MotzkinPath& m);

/// Segments ending at each Down to ground. Throws NotInImage if m has a
/// ground-level Flat.
std::vector<MotzkinPath> split_at_ground_downs(const MotzkinPath& m);

bool has_ground_flat(std::span<const Step> steps) noexcept;

} // namespace peakparity
