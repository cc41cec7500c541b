#include "peakparity/enumeration.hpp"

#include <sstream>

namespace peakparity {

std::string_view to_string(PathClass c) noexcept {
  switch (c) {
  case PathClass::AllDyck: return "all-dyck";
  case PathClass::DyckAllOdd: return "dyck-all-odd";
  case PathClass::DyckAllEven: return "dyck-all-even";
  case PathClass::DyckMixed: return "dyck-mixed";
  case PathClass::AllMotzkin: return "all-motzkin";
  case PathClass::MotzkinStartFlat: return "motzkin-start-flat";
  case PathClass::MotzkinNoGroundFlat: return "motzkin-no-ground-flat";
  }
  return "unknown";
}

std::optional<PathClass> parse_path_class(std::string_view name) noexcept {
  for (PathClass c : all_path_classes)
    if (to_string(c) == name)
      return c;
  return std::nullopt;
}

bool is_dyck_class(PathClass c) noexcept {
  switch (c) {
  case PathClass::AllDyck:
  case PathClass::DyckAllOdd:
  case PathClass::DyckAllEven:
  case PathClass::DyckMixed:
    return true;
  default:
    return false;
  }
}

namespace {

// Whether a step taken at level `level` with `remaining` steps left after it
// still admits a completion back to ground.
bool feasible(Step s, std::int64_t level, std::size_t remaining, bool dyck) {
  if (dyck && s == Step::Flat)
    return false;
  const std::int64_t after = level + delta(s);
  if (after < 0 || after > static_cast<std::int64_t>(remaining))
    return false;
  return !dyck || (static_cast<std::int64_t>(remaining) - after) % 2 == 0;
}

constexpr Step order[] = {Step::Up, Step::Flat, Step::Down};

// Lexicographically smallest completion of steps[from..) starting at `level`.
void fill_minimal(Steps& steps, std::size_t from, std::int64_t level, bool dyck) {
  const std::size_t len = steps.size();
  for (std::size_t k = from; k < len; ++k) {
    for (Step s : order) {
      if (feasible(s, level, len - k - 1, dyck)) {
        steps[k] = s;
        level += delta(s);
        break;
      }
    }
  }
}

} // namespace

PathGenerator::PathGenerator(PathClass cls, std::size_t n)
    : class_(cls), dyck_(is_dyck_class(cls)), current_(dyck_ ? 2 * n : n, Step::Up) {}

bool PathGenerator::advance() {
  const std::size_t len = current_.size();
  std::vector<std::int64_t> level_before(len + 1, 0);
  for (std::size_t i = 0; i < len; ++i)
    level_before[i + 1] = level_before[i] + delta(current_[i]);

  for (std::size_t i = len; i-- > 0;) {
    for (Step s : order) {
      if (s <= current_[i] || !feasible(s, level_before[i], len - i - 1, dyck_))
        continue;
      current_[i] = s;
      fill_minimal(current_, i + 1, level_before[i] + delta(s), dyck_);
      return true;
    }
  }
  return false;
}

bool PathGenerator::accepts() const {
  switch (class_) {
  case PathClass::AllDyck:
  case PathClass::AllMotzkin:
    return true;
  case PathClass::DyckAllOdd:
    return classify(DyckPath::validate(current_)) == ParityClass::AllOdd;
  case PathClass::DyckAllEven:
    return classify(DyckPath::validate(current_)) == ParityClass::AllEven;
  case PathClass::DyckMixed:
    return classify(DyckPath::validate(current_)) == ParityClass::Mixed;
  case PathClass::MotzkinStartFlat:
    return !current_.empty() && current_.front() == Step::Flat;
  case PathClass::MotzkinNoGroundFlat:
    return !has_ground_flat(current_);
  }
  return false;
}

const Steps* PathGenerator::next() {
  if (done_)
    return nullptr;
  bool have = true;
  if (!started_) {
    started_ = true;
    fill_minimal(current_, 0, 0, dyck_);
  } else {
    have = advance();
  }
  while (have && !accepts())
    have = advance();
  if (!have) {
    done_ = true;
    return nullptr;
  }
  return &current_;
}

std::vector<DyckPath> generate_dyck(PathClass cls, std::size_t semilength) {
  if (!is_dyck_class(cls))
    throw std::invalid_argument(std::string(to_string(cls)) + " is not a Dyck path class");
  std::vector<DyckPath> out;
  PathGenerator gen(cls, semilength);
  while (const Steps* s = gen.next())
    out.push_back(DyckPath::validate(*s));
  return out;
}

std::vector<MotzkinPath> generate_motzkin(PathClass cls, std::size_t length) {
  if (is_dyck_class(cls))
    throw std::invalid_argument(std::string(to_string(cls)) + " is not a Motzkin path class");
  std::vector<MotzkinPath> out;
  PathGenerator gen(cls, length);
  while (const Steps* s = gen.next())
    out.push_back(MotzkinPath::validate(*s));
  return out;
}

BigInt catalan(std::size_t n) {
  std::vector<BigInt> c(n + 1);
  c[0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t i = 0; i < m; ++i)
      c[m] += c[i] * c[m - 1 - i];
  return c[n];
}

BigInt motzkin(std::size_t n) {
  std::vector<BigInt> m(n + 1);
  m[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    m[k] = m[k - 1];
    for (std::size_t i = 0; i + 2 <= k; ++i)
      m[k] += m[i] * m[k - 2 - i];
  }
  return m[n];
}

BigInt riordan(std::size_t n) {
  BigInt r = 1;
  for (std::size_t k = 1; k <= n; ++k)
    r = motzkin(k - 1) - r;
  return r;
}

BigInt riordan_by_generation(std::size_t n) {
  BigInt count = 0;
  PathGenerator gen(PathClass::MotzkinNoGroundFlat, n);
  while (gen.next())
    ++count;
  return count;
}

std::string CountTable::to_tsv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < std::size(columns); ++i)
    out << (i ? "\t" : "") << columns[i];
  out << '\n';
  for (const auto& r : rows)
    out << r.n << '\t' << r.catalan << '\t' << r.odd_count << '\t' << r.motzkin_prev << '\t'
        << r.even_count << '\t' << r.riordan << '\t' << r.mixed_count << '\n';
  return out.str();
}

namespace {

[[noreturn]] void claim_violation(std::size_t n, std::string_view column, const BigInt& expected,
                                  const BigInt& actual) {
  throw Error(ErrorCode::ClaimViolation,
              "n=" + std::to_string(n) + ": " + std::string(column) + " expected " + expected.str() +
                  ", got " + actual.str(),
              static_cast<std::int64_t>(n));
}

} // namespace

CountTable count_table(std::size_t max_n) {
  CountTable table;
  for (std::size_t n = 1; n <= max_n; ++n) {
    CountRow row;
    row.n = n;
    row.catalan = catalan(n);
    row.motzkin_prev = motzkin(n - 1);
    row.riordan = riordan(n);

    PathGenerator gen(PathClass::AllDyck, n);
    while (const Steps* s = gen.next()) {
      switch (classify(DyckPath::validate(*s))) {
      case ParityClass::AllOdd: ++row.odd_count; break;
      case ParityClass::AllEven: ++row.even_count; break;
      case ParityClass::Mixed: ++row.mixed_count; break;
      }
    }

    if (row.odd_count != row.motzkin_prev)
      claim_violation(n, "odd_count", row.motzkin_prev, row.odd_count);
    if (row.even_count != row.riordan)
      claim_violation(n, "even_count", row.riordan, row.even_count);
    const BigInt total = row.odd_count + row.even_count + row.mixed_count;
    if (total != row.catalan)
      claim_violation(n, "odd+even+mixed", row.catalan, total);
    table.rows.push_back(std::move(row));
  }
  return table;
}

} // namespace peakparity
