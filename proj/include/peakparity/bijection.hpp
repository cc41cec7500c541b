#pragma once

#include "peakparity/path.hpp"

#include <optional>
#include <span>
#include <string_view>

namespace peakparity {

enum class MapKind {
  PhiA,
  PhiB,
  PsiA,
  PsiB,
  ExplicitA,
  ExplicitB,
  TirrellA,
  TirrellB,
  TirrellAInv,
  TirrellBInv,
};

inline constexpr MapKind all_map_kinds[] = {
    MapKind::PhiA,      MapKind::PhiB,      MapKind::PsiA,        MapKind::PsiB,
    MapKind::ExplicitA, MapKind::ExplicitB, MapKind::TirrellA,    MapKind::TirrellB,
    MapKind::TirrellAInv, MapKind::TirrellBInv,
};

/// CLI spelling, e.g. "phi-a", "tirrell-b-inv".
std::string_view to_string(MapKind k) noexcept;
std::optional<MapKind> parse_map_kind(std::string_view name) noexcept;

/// True for maps from Dyck paths to Motzkin paths.
bool is_forward(MapKind k) noexcept;

// Recursive maps over the component decomposition. All maps check the parity
// class or image membership of their argument and throw on mismatch.

/// All-odd Dyck n-path -> Motzkin n-path starting with a Flat.
MotzkinPath phi_a(const DyckPath& p);
/// All-even Dyck n-path -> Motzkin n-path with no ground-level Flat.
MotzkinPath phi_b(const DyckPath& p);

/// Drops the leading Flat. Throws FirstStepNotFlat.
MotzkinPath rest(const MotzkinPath& m);

DyckPath psi_a(const MotzkinPath& m);
DyckPath psi_b(const MotzkinPath& m);

/// Tree route: glove, colour, relocate reds, walk. Same pipeline for both
/// parity classes.
MotzkinPath explicit_map(const DyckPath& p);

// Pair-splitting route.

/// Maps contiguous pairs UU, DU, DD to U, F, D. Throws UnexpectedUDPair with
/// the pair index on a UD pair and InvalidExpansion on odd length or an
/// unknown pair.
Steps substitute_pairs(std::span<const Step> steps);

/// Number of UD pairs among the contiguous pairs of `steps`.
std::size_t count_ud_pairs(std::span<const Step> steps) noexcept;

MotzkinPath tirrell_a(const DyckPath& p);
MotzkinPath tirrell_b(const DyckPath& p);
DyckPath tirrell_a_inv(const MotzkinPath& m);
DyckPath tirrell_b_inv(const MotzkinPath& m);

/// Validates `input` for the domain of `k` (Dyck for forward maps, Motzkin for
/// inverses), applies it and returns the image's steps.
Steps apply_map(MapKind k, const Steps& input);

} // namespace peakparity
