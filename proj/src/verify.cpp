#include "peakparity/verify.hpp"

#include "peakparity/enumeration.hpp"
#include "peakparity/tree.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <set>

namespace peakparity::verify {

namespace {

Steps mutate_first(Steps s) {
  if (!s.empty())
    s.front() = s.front() == Step::Up ? Step::Flat : s.front() == Step::Flat ? Step::Up : Step::Flat;
  return s;
}

template <typename Fn>
auto mutate_motzkin(Fn f) {
  return [f](const DyckPath& p) { return MotzkinPath::validate(mutate_first(f(p).steps())); };
}

template <typename Fn>
auto mutate_dyck(Fn f) {
  return [f](const MotzkinPath& m) { return DyckPath::validate(mutate_first(f(m).steps())); };
}

enum Check : std::size_t {
  CountingOdd,
  CountingEven,
  ImageCharacterization,
  TripleAgreement,
  RoundTrips,
  StatisticTransfers,
  NoUDPairs,
  GloveFidelity,
  GeneratorCardinalities,
  GeneratorOrder,
  ParityPartition,
  DecomposeRebuild,
  ParityAlternation,
  SplitConcatenation,
  ColoringInvariants,
  SizeContract,
  CheckCount,
};

struct CheckInfo {
  const char* name;
  int criterion;
};

constexpr std::array<CheckInfo, CheckCount> check_info{{
    {"counting-odd", 1},
    {"counting-even", 2},
    {"image-characterization", 3},
    {"triple-agreement", 4},
    {"round-trips", 5},
    {"statistic-transfers", 6},
    {"no-ud-pairs", 7},
    {"glove-fidelity", 8},
    {"generator-cardinalities", 0},
    {"generator-order", 0},
    {"parity-partition", 0},
    {"decompose-rebuild", 0},
    {"parity-alternation", 0},
    {"split-concatenation", 0},
    {"coloring-invariants", 0},
    {"size-contract", 0},
}};

struct Tally {
  std::uint64_t cases = 0;
  std::string failure;

  // Runs one case; a thrown exception counts as a failure.
  template <typename Body>
  void run(const std::string& label, Body&& body) {
    ++cases;
    try {
      if (!body() && failure.empty())
        failure = label;
    } catch (const std::exception& e) {
      if (failure.empty())
        failure = label + ": " + e.what();
    }
  }
};

using Outcomes = std::array<Tally, CheckCount>;

template <typename T>
bool strictly_increasing(const std::vector<T>& v) {
  return std::adjacent_find(v.begin(), v.end(), [](const T& a, const T& b) { return !(a < b); }) == v.end();
}

std::size_t count_class(PathClass cls, std::size_t n) {
  std::size_t count = 0;
  PathGenerator gen(cls, n);
  while (gen.next())
    ++count;
  return count;
}

Outcomes run_size(std::size_t n, const MapTable& maps) {
  Outcomes out;
  const std::string at = "n=" + std::to_string(n);

  const auto dyck = generate_dyck(PathClass::AllDyck, n);
  std::vector<DyckPath> odd, even, mixed;
  for (const auto& p : dyck) {
    switch (classify(p)) {
    case ParityClass::AllOdd: odd.push_back(p); break;
    case ParityClass::AllEven: even.push_back(p); break;
    case ParityClass::Mixed: mixed.push_back(p); break;
    }
  }
  const auto motz = generate_motzkin(PathClass::AllMotzkin, n);
  std::vector<MotzkinPath> start_flat, no_ground_flat;
  for (const auto& m : motz) {
    if (!m.empty() && m.steps().front() == Step::Flat)
      start_flat.push_back(m);
    if (!has_ground_flat(m.steps()))
      no_ground_flat.push_back(m);
  }

  if (n >= 1)
    out[CountingOdd].run(at + ": |dyck-all-odd| vs motzkin(n-1)", [&] {
      return BigInt(count_class(PathClass::DyckAllOdd, n)) == motzkin(n - 1);
    });
  out[CountingEven].run(at + ": |dyck-all-even| vs riordan(n)", [&] {
    return BigInt(count_class(PathClass::DyckAllEven, n)) == riordan(n);
  });
  out[CountingEven].run(at + ": riordan recurrence vs generation",
                        [&] { return riordan(n) == riordan_by_generation(n); });

  // Image characterization: image sets equal the target classes, with no collisions.
  if (n >= 1)
    out[ImageCharacterization].run(at + ": phi-a image", [&] {
      std::set<MotzkinPath> image;
      for (const auto& p : odd)
        image.insert(maps.phi_a(p));
      return image.size() == odd.size() && image == std::set<MotzkinPath>(start_flat.begin(), start_flat.end());
    });
  out[ImageCharacterization].run(at + ": phi-b image", [&] {
    std::set<MotzkinPath> image;
    for (const auto& p : even)
      image.insert(maps.phi_b(p));
    return image.size() == even.size() &&
           image == std::set<MotzkinPath>(no_ground_flat.begin(), no_ground_flat.end());
  });

  for (const auto& p : odd) {
    const std::string label = at + ": " + p.str();
    out[TripleAgreement].run(label, [&] {
      const auto a = maps.phi_a(p);
      return a == maps.explicit_map(p) && a == maps.tirrell_a(p);
    });
    out[RoundTrips].run(label + " psi-a(phi-a)", [&] { return maps.psi_a(maps.phi_a(p)) == p; });
    out[RoundTrips].run(label + " tirrell-a-inv(tirrell-a)",
                        [&] { return maps.tirrell_a_inv(maps.tirrell_a(p)) == p; });
    out[StatisticTransfers].run(label + " phi-a", [&] {
      const PathStats in = stats(p);
      const PathStats img = stats(maps.phi_a(p));
      return in.ground_returns == img.ground_flats &&
             static_cast<std::int64_t>(in.peaks) == img.peak_image;
    });
    out[NoUDPairs].run(label, [&] {
      const auto& s = p.steps();
      return count_ud_pairs(std::span<const Step>(s).subspan(1, s.size() - 2)) == 0;
    });
    out[SizeContract].run(label, [&] {
      return maps.phi_a(p).length() == n && maps.explicit_map(p).length() == n &&
             maps.tirrell_a(p).length() == n;
    });
  }
  for (const auto& p : even) {
    const std::string label = at + ": " + (p.empty() ? std::string("@") : p.str());
    out[TripleAgreement].run(label, [&] {
      const auto b = maps.phi_b(p);
      return b == maps.explicit_map(p) && b == maps.tirrell_b(p);
    });
    out[RoundTrips].run(label + " psi-b(phi-b)", [&] { return maps.psi_b(maps.phi_b(p)) == p; });
    out[RoundTrips].run(label + " tirrell-b-inv(tirrell-b)",
                        [&] { return maps.tirrell_b_inv(maps.tirrell_b(p)) == p; });
    out[StatisticTransfers].run(label + " phi-b", [&] {
      const PathStats in = stats(p);
      const PathStats img = stats(maps.phi_b(p));
      return in.ground_returns == img.ground_downs &&
             static_cast<std::int64_t>(in.peaks) == img.peak_image;
    });
    out[NoUDPairs].run(label, [&] { return count_ud_pairs(p.steps()) == 0; });
    out[SizeContract].run(label, [&] {
      return maps.phi_b(p).length() == n && maps.explicit_map(p).length() == n &&
             maps.tirrell_b(p).length() == n;
    });
  }
  for (const auto& m : start_flat) {
    out[RoundTrips].run(at + ": " + m.str() + " phi-a(psi-a)", [&] { return maps.phi_a(maps.psi_a(m)) == m; });
    out[RoundTrips].run(at + ": " + m.str() + " tirrell-a(tirrell-a-inv)",
                        [&] { return maps.tirrell_a(maps.tirrell_a_inv(m)) == m; });
  }
  for (const auto& m : no_ground_flat) {
    out[RoundTrips].run(at + ": " + m.str() + " phi-b(psi-b)", [&] { return maps.phi_b(maps.psi_b(m)) == m; });
    out[RoundTrips].run(at + ": " + m.str() + " tirrell-b(tirrell-b-inv)",
                        [&] { return maps.tirrell_b(maps.tirrell_b_inv(m)) == m; });
  }

  for (const auto& p : dyck) {
    const std::string label = at + ": " + p.str();
    out[GloveFidelity].run(label, [&] {
      const OrderedTree t = glove_to_tree(p);
      std::vector<int> peak_heights;
      for (const Peak& pk : peaks(p))
        peak_heights.push_back(pk.height);
      return glove_to_dyck(t) == p && t.edge_count() == n && t.leaf_heights() == peak_heights &&
             glove_to_tree(glove_to_dyck(t)).same_shape(t);
    });
    out[DecomposeRebuild].run(label, [&] {
      const auto parts = decompose(p);
      std::vector<DyckPath> lifted;
      for (const auto& part : parts)
        lifted.push_back(lift(part));
      return concat(lifted) == p && stats(p).ground_returns == parts.size();
    });
    out[ParityAlternation].run(label, [&] {
      const ParityClass c = classify(p);
      if (c == ParityClass::Mixed || p.empty())
        return true;
      const ParityClass want = c == ParityClass::AllOdd ? ParityClass::AllEven : ParityClass::AllOdd;
      const auto parts = decompose(p);
      return std::all_of(parts.begin(), parts.end(), [&](const DyckPath& q) { return classify(q) == want; });
    });
  }

  // Tree colouring on every same-parity path.
  auto coloring_case = [&](const DyckPath& p, EdgeColor root_color) {
    out[ColoringInvariants].run(at + ": " + p.str(), [&] {
      const OrderedTree t = glove_to_tree(p);
      const EdgeColoring c = color_edges(t);
      if (!is_valid_coloring(t, c))
        return false;
      for (NodeId e : t.children(OrderedTree::root))
        if (c[e] != root_color)
          return false;
      const ColoredTree moved = relocate_reds(t, c);
      const MotzkinPath walked = walk_to_motzkin(moved.tree, moved.coloring);
      const PathStats walk = stats(walked);
      const auto downs = static_cast<std::size_t>(std::count(walked.steps().begin(), walked.steps().end(), Step::Down));
      return moved.tree.node_count() == t.node_count() && moved.tree.edge_count() == t.edge_count() &&
             moved.coloring.count(EdgeColor::Blue) == c.count(EdgeColor::Blue) &&
             moved.coloring.count(EdgeColor::Red) == c.count(EdgeColor::Red) &&
             moved.coloring.count(EdgeColor::Black) == c.count(EdgeColor::Black) &&
             c.count(EdgeColor::Blue) == c.count(EdgeColor::Red) && c.count(EdgeColor::Red) == downs &&
             c.count(EdgeColor::Black) == walk.f_count;
    });
  };
  for (const auto& p : odd)
    coloring_case(p, EdgeColor::Black);
  for (const auto& p : even)
    coloring_case(p, EdgeColor::Blue);

  out[GeneratorCardinalities].run(at + ": all-dyck vs catalan", [&] { return BigInt(dyck.size()) == catalan(n); });
  out[GeneratorCardinalities].run(at + ": all-motzkin vs motzkin", [&] { return BigInt(motz.size()) == motzkin(n); });
  if (n >= 1)
    out[GeneratorCardinalities].run(at + ": motzkin-start-flat vs motzkin(n-1)", [&] {
      return BigInt(count_class(PathClass::MotzkinStartFlat, n)) == motzkin(n - 1);
    });
  out[GeneratorCardinalities].run(at + ": motzkin-no-ground-flat vs riordan", [&] {
    return BigInt(count_class(PathClass::MotzkinNoGroundFlat, n)) == riordan(n);
  });

  out[GeneratorOrder].run(at + ": all-dyck", [&] { return strictly_increasing(dyck); });
  out[GeneratorOrder].run(at + ": all-motzkin", [&] { return strictly_increasing(motz); });
  out[GeneratorOrder].run(at + ": dyck classes", [&] {
    return generate_dyck(PathClass::DyckAllOdd, n) == odd && generate_dyck(PathClass::DyckAllEven, n) == even &&
           generate_dyck(PathClass::DyckMixed, n) == mixed;
  });
  out[GeneratorOrder].run(at + ": motzkin classes", [&] {
    return generate_motzkin(PathClass::MotzkinStartFlat, n) == start_flat &&
           generate_motzkin(PathClass::MotzkinNoGroundFlat, n) == no_ground_flat;
  });

  out[ParityPartition].run(at, [&] { return BigInt(odd.size() + even.size() + mixed.size()) == catalan(n); });

  for (const auto& m : start_flat)
    out[SplitConcatenation].run(at + ": " + m.str(), [&] {
      Steps joined;
      for (const auto& seg : split_at_ground_flats(m))
        joined.insert(joined.end(), seg.steps().begin(), seg.steps().end());
      return joined == m.steps();
    });
  for (const auto& m : no_ground_flat)
    out[SplitConcatenation].run(at + ": " + m.str(), [&] {
      Steps joined;
      for (const auto& seg : split_at_ground_downs(m))
        joined.insert(joined.end(), seg.steps().begin(), seg.steps().end());
      return joined == m.steps();
    });

  return out;
}

} // namespace

MapTable MapTable::standard() {
  return MapTable{
      .phi_a = peakparity::phi_a,
      .phi_b = peakparity::phi_b,
      .psi_a = peakparity::psi_a,
      .psi_b = peakparity::psi_b,
      .explicit_map = peakparity::explicit_map,
      .tirrell_a = peakparity::tirrell_a,
      .tirrell_b = peakparity::tirrell_b,
      .tirrell_a_inv = peakparity::tirrell_a_inv,
      .tirrell_b_inv = peakparity::tirrell_b_inv,
  };
}

MapTable MapTable::with_mutation(MapKind kind) {
  MapTable t = standard();
  switch (kind) {
  case MapKind::PhiA: t.phi_a = mutate_motzkin(t.phi_a); break;
  case MapKind::PhiB: t.phi_b = mutate_motzkin(t.phi_b); break;
  case MapKind::PsiA: t.psi_a = mutate_dyck(t.psi_a); break;
  case MapKind::PsiB: t.psi_b = mutate_dyck(t.psi_b); break;
  case MapKind::ExplicitA:
  case MapKind::ExplicitB: {
    const ParityClass target = kind == MapKind::ExplicitA ? ParityClass::AllOdd : ParityClass::AllEven;
    t.explicit_map = [target, f = t.explicit_map](const DyckPath& p) {
      MotzkinPath m = f(p);
      return classify(p) == target ? MotzkinPath::validate(mutate_first(m.steps())) : m;
    };
    break;
  }
  case MapKind::TirrellA: t.tirrell_a = mutate_motzkin(t.tirrell_a); break;
  case MapKind::TirrellB: t.tirrell_b = mutate_motzkin(t.tirrell_b); break;
  case MapKind::TirrellAInv: t.tirrell_a_inv = mutate_dyck(t.tirrell_a_inv); break;
  case MapKind::TirrellBInv: t.tirrell_b_inv = mutate_dyck(t.tirrell_b_inv); break;
  }
  return t;
}

std::vector<CheckResult> run(std::size_t max_n, const MapTable& maps) {
  std::vector<std::future<Outcomes>> pending;
  for (std::size_t n = 0; n <= max_n; ++n)
    pending.push_back(std::async(std::launch::async, run_size, n, std::cref(maps)));

  std::vector<CheckResult> results(CheckCount);
  for (std::size_t i = 0; i < CheckCount; ++i) {
    results[i].name = check_info[i].name;
    results[i].criterion = check_info[i].criterion;
  }
  for (auto& f : pending) {
    const Outcomes o = f.get();
    for (std::size_t i = 0; i < CheckCount; ++i) {
      results[i].cases += o[i].cases;
      if (!o[i].failure.empty() && results[i].passed) {
        results[i].passed = false;
        results[i].detail = o[i].failure;
      }
    }
  }
  return results;
}

} // namespace peakparity::verify
