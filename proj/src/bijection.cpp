#include "peakparity/bijection.hpp"

#include "peakparity/tree.hpp"

#include <string>

namespace peakparity {

namespace {

using StepSpan = std::span<const Step>;

// Calls f(interior) for each component U interior D of a Dyck (or, for the
// inverse maps, Motzkin) step sequence starting at ground level.
template <typename F>
void for_each_component(StepSpan s, F&& f) {
  int level = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    level += delta(s[i]);
    if (level == 0) {
      f(s.subspan(start + 1, i - start - 1));
      start = i + 1;
    }
  }
}

void phi_b_into(StepSpan p, Steps& out);

void phi_a_into(StepSpan p, Steps& out) {
  for_each_component(p, [&](StepSpan interior) {
    out.push_back(Step::Flat);
    phi_b_into(interior, out);
  });
}

void phi_b_into(StepSpan p, Steps& out) {
  for_each_component(p, [&](StepSpan interior) {
    Steps image;
    phi_a_into(interior, image);
    out.push_back(Step::Up);
    out.insert(out.end(), image.begin() + 1, image.end()); // Rest: drop the leading F
    out.push_back(Step::Down);
  });
}

void psi_b_into(StepSpan m, Steps& out);

// m begins with a Flat at ground level; each segment F M' maps to U psi_b(M') D.
void psi_a_into(StepSpan m, Steps& out) {
  std::size_t start = 0;
  int level = 0;
  auto flush = [&](std::size_t end) {
    out.push_back(Step::Up);
    psi_b_into(m.subspan(start + 1, end - start - 1), out);
    out.push_back(Step::Down);
  };
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > start && m[i] == Step::Flat && level == 0) {
      flush(i);
      start = i;
    }
    level += delta(m[i]);
  }
  if (!m.empty())
    flush(m.size());
}

// m has no ground-level Flat; each segment U M' D maps to U psi_a(F M') D.
void psi_b_into(StepSpan m, Steps& out) {
  for_each_component(m, [&](StepSpan interior) {
    Steps flat_prefixed;
    flat_prefixed.reserve(interior.size() + 1);
    flat_prefixed.push_back(Step::Flat);
    flat_prefixed.insert(flat_prefixed.end(), interior.begin(), interior.end());
    out.push_back(Step::Up);
    psi_a_into(flat_prefixed, out);
    out.push_back(Step::Down);
  });
}

void require_class(const DyckPath& p, ParityClass wanted, std::string_view map) {
  const ParityClass actual = classify(p);
  if (actual != wanted)
    throw Error(ErrorCode::WrongParityClass,
                std::string(map) + " needs an " + std::string(to_string(wanted)) + " Dyck path, got " +
                    std::string(to_string(actual)) + " path " + p.str());
}

Steps expand(StepSpan m) {
  Steps out;
  out.reserve(2 * m.size());
  for (Step s : m) {
    switch (s) {
    case Step::Up: out.insert(out.end(), {Step::Up, Step::Up}); break;
    case Step::Flat: out.insert(out.end(), {Step::Down, Step::Up}); break;
    case Step::Down: out.insert(out.end(), {Step::Down, Step::Down}); break;
    }
  }
  return out;
}

DyckPath validate_expansion(Steps s) {
  try {
    return DyckPath::validate(std::move(s));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidExpansion, std::string("pair expansion is not a Dyck path: ") + e.what(),
                e.position());
  }
}

} // namespace

std::string_view to_string(MapKind k) noexcept {
  switch (k) {
  case MapKind::PhiA: return "phi-a";
  case MapKind::PhiB: return "phi-b";
  case MapKind::PsiA: return "psi-a";
  case MapKind::PsiB: return "psi-b";
  case MapKind::ExplicitA: return "explicit-a";
  case MapKind::ExplicitB: return "explicit-b";
  case MapKind::TirrellA: return "tirrell-a";
  case MapKind::TirrellB: return "tirrell-b";
  case MapKind::TirrellAInv: return "tirrell-a-inv";
  case MapKind::TirrellBInv: return "tirrell-b-inv";
  }
  return "unknown";
}

std::optional<MapKind> parse_map_kind(std::string_view name) noexcept {
  for (MapKind k : all_map_kinds)
    if (to_string(k) == name)
      return k;
  return std::nullopt;
}

bool is_forward(MapKind k) noexcept {
  switch (k) {
  case MapKind::PsiA:
  case MapKind::PsiB:
  case MapKind::TirrellAInv:
  case MapKind::TirrellBInv:
    return false;
  default:
    return true;
  }
}

MotzkinPath phi_a(const DyckPath& p) {
  require_class(p, ParityClass::AllOdd, "phi-a"); // rejects the empty path, which is all-even
  Steps out;
  out.reserve(p.semilength());
  phi_a_into(p.steps(), out);
  return MotzkinPath::validate(std::move(out));
}

MotzkinPath phi_b(const DyckPath& p) {
  require_class(p, ParityClass::AllEven, "phi-b");
  Steps out;
  out.reserve(p.semilength());
  phi_b_into(p.steps(), out);
  return MotzkinPath::validate(std::move(out));
}

MotzkinPath rest(const MotzkinPath& m) {
  if (m.empty() || m.steps().front() != Step::Flat)
    throw Error(ErrorCode::FirstStepNotFlat, "path '" + m.str() + "' does not begin with a flat step", 0);
  return MotzkinPath::validate(Steps(m.steps().begin() + 1, m.steps().end()));
}

DyckPath psi_a(const MotzkinPath& m) {
  if (m.empty())
    throw Error(ErrorCode::NotInImage, "psi-a is undefined on the empty path");
  split_at_ground_flats(m); // membership check
  Steps out;
  out.reserve(2 * m.length());
  psi_a_into(m.steps(), out);
  return DyckPath::validate(std::move(out));
}

DyckPath psi_b(const MotzkinPath& m) {
  split_at_ground_downs(m); // membership check
  Steps out;
  out.reserve(2 * m.length());
  psi_b_into(m.steps(), out);
  return DyckPath::validate(std::move(out));
}

MotzkinPath explicit_map(const DyckPath& p) {
  if (classify(p) == ParityClass::Mixed)
    throw Error(ErrorCode::WrongParityClass,
                "explicit map needs an all-odd or all-even Dyck path, got mixed path " + p.str());
  const OrderedTree tree = glove_to_tree(p);
  const EdgeColoring colors = color_edges(tree);
  const ColoredTree moved = relocate_reds(tree, colors);
  return walk_to_motzkin(moved.tree, moved.coloring);
}

Steps substitute_pairs(std::span<const Step> steps) {
  if (steps.size() % 2 != 0)
    throw Error(ErrorCode::InvalidExpansion,
                "cannot split " + std::to_string(steps.size()) + " steps into pairs",
                static_cast<std::int64_t>(steps.size()));
  Steps out;
  out.reserve(steps.size() / 2);
  for (std::size_t i = 0; i < steps.size(); i += 2) {
    const Step a = steps[i];
    const Step b = steps[i + 1];
    const auto pair_index = static_cast<std::int64_t>(i / 2);
    if (a == Step::Up && b == Step::Up)
      out.push_back(Step::Up);
    else if (a == Step::Down && b == Step::Up)
      out.push_back(Step::Flat);
    else if (a == Step::Down && b == Step::Down)
      out.push_back(Step::Down);
    else if (a == Step::Up && b == Step::Down)
      throw Error(ErrorCode::UnexpectedUDPair, "UD pair at pair index " + std::to_string(pair_index),
                  pair_index);
    else
      throw Error(ErrorCode::InvalidExpansion, "flat step in pair " + std::to_string(pair_index),
                  pair_index);
  }
  return out;
}

std::size_t count_ud_pairs(std::span<const Step> steps) noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); i += 2)
    if (steps[i] == Step::Up && steps[i + 1] == Step::Down)
      ++n;
  return n;
}

MotzkinPath tirrell_a(const DyckPath& p) {
  require_class(p, ParityClass::AllOdd, "tirrell-a");
  const auto& s = p.steps();
  Steps out{Step::Flat};
  const Steps body = substitute_pairs(std::span<const Step>(s).subspan(1, s.size() - 2));
  out.insert(out.end(), body.begin(), body.end());
  return MotzkinPath::validate(std::move(out));
}

MotzkinPath tirrell_b(const DyckPath& p) {
  require_class(p, ParityClass::AllEven, "tirrell-b");
  return MotzkinPath::validate(substitute_pairs(p.steps()));
}

DyckPath tirrell_a_inv(const MotzkinPath& m) {
  if (m.empty() || m.steps().front() != Step::Flat)
    throw Error(ErrorCode::FirstStepNotFlat, "path '" + m.str() + "' does not begin with a flat step", 0);
  Steps s{Step::Up};
  const Steps body = expand(std::span<const Step>(m.steps()).subspan(1));
  s.insert(s.end(), body.begin(), body.end());
  s.push_back(Step::Down);
  return validate_expansion(std::move(s));
}

DyckPath tirrell_b_inv(const MotzkinPath& m) {
  if (has_ground_flat(m.steps()))
    throw Error(ErrorCode::NotInImage, "path " + m.str() + " has a ground-level flat");
  return validate_expansion(expand(m.steps()));
}

Steps apply_map(MapKind k, const Steps& input) {
  if (is_forward(k)) {
    const DyckPath p = DyckPath::validate(input);
    switch (k) {
    case MapKind::PhiA: return phi_a(p).steps();
    case MapKind::PhiB: return phi_b(p).steps();
    case MapKind::ExplicitA: require_class(p, ParityClass::AllOdd, "explicit-a"); return explicit_map(p).steps();
    case MapKind::ExplicitB: require_class(p, ParityClass::AllEven, "explicit-b"); return explicit_map(p).steps();
    case MapKind::TirrellA: return tirrell_a(p).steps();
    case MapKind::TirrellB: return tirrell_b(p).steps();
    default: break;
    }
  }
  const MotzkinPath m = MotzkinPath::validate(input);
  switch (k) {
  case MapKind::PsiA: return psi_a(m).steps();
  case MapKind::PsiB: return psi_b(m).steps();
  case MapKind::TirrellAInv: return tirrell_a_inv(m).steps();
  case MapKind::TirrellBInv: return tirrell_b_inv(m).steps();
  default: break;
  }
  throw std::logic_error("unhandled map kind");
}

} // namespace peakparity
