#pragma once

#include "peakparity/path.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace peakparity {

using BigInt = boost::multiprecision::cpp_int;

enum class PathClass {
  AllDyck,
  DyckAllOdd,
  DyckAllEven,
  DyckMixed,
  AllMotzkin,
  MotzkinStartFlat,
  MotzkinNoGroundFlat,
};

inline constexpr PathClass all_path_classes[] = {
    PathClass::AllDyck,    PathClass::DyckAllOdd,       PathClass::DyckAllEven,
    PathClass::DyckMixed,  PathClass::AllMotzkin,       PathClass::MotzkinStartFlat,
    PathClass::MotzkinNoGroundFlat,
};

std::string_view to_string(PathClass c) noexcept;
std::optional<PathClass> parse_path_class(std::string_view name) noexcept;
bool is_dyck_class(PathClass c) noexcept;

/// Lazy lexicographic (U < F < D) stream over one path class. Dyck classes
/// take the semilength, Motzkin classes the step count.
class PathGenerator {
public:
  PathGenerator(PathClass cls, std::size_t n);

  /// Advances to the next member; returns nullptr once exhausted. The pointer
  /// stays valid until the next call.
  const Steps* next();

private:
  bool advance();
  bool accepts() const;

  PathClass class_;
  bool dyck_;
  Steps current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<DyckPath> generate_dyck(PathClass cls, std::size_t semilength);
std::vector<MotzkinPath> generate_motzkin(PathClass cls, std::size_t length);

BigInt catalan(std::size_t n);
BigInt motzkin(std::size_t n);
/// Via R_0 = 1, R_n = M_{n-1} - R_{n-1}.
BigInt riordan(std::size_t n);
/// Cardinality of MotzkinNoGroundFlat at length n, by generation.
BigInt riordan_by_generation(std::size_t n);

struct CountRow {
  std::size_t n = 0;
  BigInt catalan;
  BigInt odd_count;
  BigInt motzkin_prev; // M_{n-1}
  BigInt even_count;
  BigInt riordan;
  BigInt mixed_count;
};

struct CountTable {
  std::vector<CountRow> rows;

  static constexpr std::string_view columns[] = {
      "n", "catalan", "odd_count", "motzkin_n_minus_1", "even_count", "riordan", "mixed_count"};

  /// Header row plus one tab-separated line per row, newline-terminated.
  std::string to_tsv() const;
};

/// Rows 1..max_n: classified counts from exhaustive generation next to the
/// recurrence columns. Throws ClaimViolation (position = n) when the odd or
/// even count disagrees with its recurrence, or the partition does not sum to
/// the Catalan number.
CountTable count_table(std::size_t max_n);

} // namespace peakparity
