#include "peakparity/path.hpp"

#include <string>

namespace peakparity {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidCharacter: return "InvalidCharacter";
  case ErrorCode::ContainsFlat: return "ContainsFlat";
  case ErrorCode::UnbalancedPath: return "UnbalancedPath";
  case ErrorCode::BelowGround: return "BelowGround";
  case ErrorCode::NotInImage: return "NotInImage";
  case ErrorCode::FirstStepNotFlat: return "FirstStepNotFlat";
  case ErrorCode::WrongParityClass: return "WrongParityClass";
  case ErrorCode::UnexpectedUDPair: return "UnexpectedUDPair";
  case ErrorCode::InvalidExpansion: return "InvalidExpansion";
  case ErrorCode::InvalidMotzkinOutput: return "InvalidMotzkinOutput";
  case ErrorCode::IllDefinedParity: return "IllDefinedParity";
  case ErrorCode::InvalidTreeEncoding: return "InvalidTreeEncoding";
  case ErrorCode::ClaimViolation: return "ClaimViolation";
  }
  return "Unknown";
}

Steps parse_steps(std::string_view text) {
  Steps out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
    case 'U': out.push_back(Step::Up); break;
    case 'D': out.push_back(Step::Down); break;
    case 'F': out.push_back(Step::Flat); break;
    default:
      throw Error(ErrorCode::InvalidCharacter,
                  "invalid character '" + std::string(1, text[i]) + "' at position " +
                      std::to_string(i),
                  static_cast<std::int64_t>(i));
    }
  }
  return out;
}

std::string render(std::span<const Step> steps) {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps)
    out.push_back(to_char(s));
  return out;
}

namespace {

// Shared balance and prefix check for both path types.
void check_level_profile(const Steps& steps) {
  std::int64_t level = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    level += delta(steps[i]);
    if (level < 0)
      throw Error(ErrorCode::BelowGround,
                  "path goes below ground at position " + std::to_string(i),
                  static_cast<std::int64_t>(i));
  }
  if (level != 0)
    throw Error(ErrorCode::UnbalancedPath, "path ends at level " + std::to_string(level), level);
}

} // namespace

MotzkinPath MotzkinPath::validate(Steps steps) {
  check_level_profile(steps);
  return MotzkinPath(std::move(steps));
}

DyckPath DyckPath::validate(Steps steps) {
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i] == Step::Flat)
      throw Error(ErrorCode::ContainsFlat, "Dyck path has a flat step at position " + std::to_string(i),
                  static_cast<std::int64_t>(i));
  check_level_profile(steps);
  return DyckPath(std::move(steps));
}

DyckPath lift(const DyckPath& inner) {
  Steps s;
  s.reserve(inner.steps().size() + 2);
  s.push_back(Step::Up);
  s.insert(s.end(), inner.steps().begin(), inner.steps().end());
  s.push_back(Step::Down);
  return DyckPath::validate(std::move(s));
}

DyckPath concat(std::span<const DyckPath> parts) {
  Steps s;
  for (const auto& p : parts)
    s.insert(s.end(), p.steps().begin(), p.steps().end());
  return DyckPath::validate(std::move(s));
}

std::vector<Peak> peaks(const DyckPath& p) {
  const auto& s = p.steps();
  if (s.empty())
    return {Peak{-1, 0}};
  std::vector<Peak> out;
  int level = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    level += delta(s[i]);
    if (s[i] == Step::Up && i + 1 < s.size() && s[i + 1] == Step::Down)
      out.push_back(Peak{static_cast<std::int64_t>(i), level});
  }
  return out;
}

std::string_view to_string(ParityClass c) noexcept {
  switch (c) {
  case ParityClass::AllOdd: return "all-odd";
  case ParityClass::AllEven: return "all-even";
  case ParityClass::Mixed: return "mixed";
  }
  return "unknown";
}

ParityClass classify(const DyckPath& p) {
  bool odd = false;
  bool even = false;
  for (const Peak& pk : peaks(p))
    (pk.height % 2 ? odd : even) = true;
  if (odd && even)
    return ParityClass::Mixed;
  return odd ? ParityClass::AllOdd : ParityClass::AllEven;
}

std::vector<DyckPath> decompose(const DyckPath& p) {
  std::vector<DyckPath> out;
  const auto& s = p.steps();
  int level = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    level += delta(s[i]);
    if (level == 0) {
      out.push_back(DyckPath::validate(Steps(s.begin() + start + 1, s.begin() + i)));
      start = i + 1;
    }
  }
  return out;
}

PathStats stats(std::span<const Step> steps) {
  PathStats st;
  int level = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step s = steps[i];
    const bool next_up = i + 1 < steps.size() && steps[i + 1] == Step::Up;
    if (s == Step::Flat && level == 0)
      ++st.ground_flats;
    level += delta(s);
    switch (s) {
    case Step::Up:
      ++st.u_count;
      if (next_up)
        ++st.uu_count;
      if (i + 1 < steps.size() && steps[i + 1] == Step::Down)
        ++st.peaks;
      break;
    case Step::Flat:
      ++st.f_count;
      if (next_up)
        ++st.fu_count;
      break;
    case Step::Down:
      if (level == 0) {
        ++st.ground_returns;
        ++st.ground_downs;
      }
      break;
    }
  }
  st.peak_image = static_cast<std::int64_t>(st.u_count - st.uu_count) +
                  static_cast<std::int64_t>(st.f_count - st.fu_count);
  return st;
}

bool has_ground_flat(std::span<const Step> steps) noexcept {
  int level = 0;
  for (Step s : steps) {
    if (s == Step::Flat && level == 0)
      return true;
    level += delta(s);
  }
  return false;
}

std::vector<MotzkinPath> split_at_ground_flats(const MotzkinPath& m) {
  const auto& s = m.steps();
  std::vector<MotzkinPath> out;
  if (s.empty())
    return out;
  if (s.front() != Step::Flat)
    throw Error(ErrorCode::NotInImage, "path " + m.str() + " does not start with a ground-level flat", 0);
  int level = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > start && s[i] == Step::Flat && level == 0) {
      out.push_back(MotzkinPath::validate(Steps(s.begin() + start, s.begin() + i)));
      start = i;
    }
    level += delta(s[i]);
  }
  out.push_back(MotzkinPath::validate(Steps(s.begin() + start, s.end())));
  return out;
}

std::vector<MotzkinPath> split_at_ground_downs(const MotzkinPath& m) {
  const auto& s = m.steps();
  std::vector<MotzkinPath> out;
  int level = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == Step::Flat && level == 0)
      throw Error(ErrorCode::NotInImage,
                  "path " + m.str() + " has a ground-level flat at position " + std::to_string(i),
                  static_cast<std::int64_t>(i));
    level += delta(s[i]);
    if (level == 0) {
      out.push_back(MotzkinPath::validate(Steps(s.begin() + start, s.begin() + i + 1)));
      start = i + 1;
    }
  }
  return out;
}

} // namespace peakparity
