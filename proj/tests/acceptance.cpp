// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include "oracle.hpp"
#include "peakparity/bijection.hpp"
#include "peakparity/enumeration.hpp"
#include "peakparity/tree.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace peakparity;

namespace {

constexpr std::size_t max_n = 12;

// |all-odd Dyck n-paths| = M_{n-1}, n = 1..12
constexpr std::uint64_t odd_sequence[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798};
// |all-even Dyck n-paths| = R_n, n = 0..12
constexpr std::uint64_t even_sequence[] = {1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603, 1585, 4213};

struct Outcome {
  bool passed = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      note = what;
    }
  }
};

std::vector<DyckPath> dyck_class(PathClass c, std::size_t n) { return generate_dyck(c, n); }

Outcome counting_odd() {
  Outcome o;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto generated = dyck_class(PathClass::DyckAllOdd, n).size();
    std::size_t brute = 0;
    for (const auto& s : oracle::dyck_paths(n))
      brute += oracle::parity_class(s) == 'O';
    const std::string at = "n=" + std::to_string(n);
    o.require(generated == odd_sequence[n - 1], at + ": generated " + std::to_string(generated));
    o.require(brute == odd_sequence[n - 1], at + ": brute force " + std::to_string(brute));
    o.require(motzkin(n - 1) == odd_sequence[n - 1], at + ": motzkin recurrence");
  }
  return o;
}

Outcome counting_even() {
  Outcome o;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const auto generated = dyck_class(PathClass::DyckAllEven, n).size();
    std::size_t brute = 0;
    for (const auto& s : oracle::dyck_paths(n))
      brute += oracle::parity_class(s) == 'E';
    std::size_t riordan_paths = 0;
    for (const auto& s : oracle::motzkin_paths(n))
      riordan_paths += !oracle::has_ground_flat(s);
    const std::string at = "n=" + std::to_string(n);
    o.require(generated == even_sequence[n], at + ": generated " + std::to_string(generated));
    o.require(brute == even_sequence[n], at + ": brute force " + std::to_string(brute));
    o.require(riordan_paths == even_sequence[n], at + ": Motzkin paths without ground flat");
    o.require(riordan(n) == even_sequence[n], at + ": riordan recurrence");
    o.require(riordan_by_generation(n) == even_sequence[n], at + ": riordan by generation");
  }
  return o;
}

Outcome image_characterization() {
  Outcome o;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::set<std::string> start_flat, no_ground_flat;
    for (const auto& s : oracle::motzkin_paths(n)) {
      if (!s.empty() && s.front() == 'F')
        start_flat.insert(s);
      if (!oracle::has_ground_flat(s))
        no_ground_flat.insert(s);
    }
    const auto odd = dyck_class(PathClass::DyckAllOdd, n);
    const auto even = dyck_class(PathClass::DyckAllEven, n);
    std::set<std::string> image_a, image_b;
    for (const auto& p : odd)
      image_a.insert(phi_a(p).str());
    for (const auto& p : even)
      image_b.insert(phi_b(p).str());
    const std::string at = "n=" + std::to_string(n);
    o.require(image_a.size() == odd.size(), at + ": phi-a not injective");
    o.require(image_a == start_flat, at + ": phi-a image differs from Motzkin paths starting with F");
    o.require(image_b.size() == even.size(), at + ": phi-b not injective");
    o.require(image_b == no_ground_flat, at + ": phi-b image differs from Motzkin paths without ground flat");
  }
  return o;
}

Outcome triple_agreement() {
  Outcome o;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (const auto& p : dyck_class(PathClass::DyckAllOdd, n)) {
      const std::string a = phi_a(p).str();
      o.require(explicit_map(p).str() == a && tirrell_a(p).str() == a, "odd " + p.str());
    }
    for (const auto& p : dyck_class(PathClass::DyckAllEven, n)) {
      const std::string b = phi_b(p).str();
      o.require(explicit_map(p).str() == b && tirrell_b(p).str() == b, "even " + p.str());
    }
  }
  return o;
}

Outcome round_trips() {
  Outcome o;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (const auto& p : dyck_class(PathClass::DyckAllOdd, n)) {
      o.require(psi_a(phi_a(p)) == p, "psi-a(phi-a(" + p.str() + "))");
      o.require(tirrell_a_inv(tirrell_a(p)) == p, "tirrell-a-inv(tirrell-a(" + p.str() + "))");
    }
    for (const auto& p : dyck_class(PathClass::DyckAllEven, n)) {
      o.require(psi_b(phi_b(p)) == p, "psi-b(phi-b(" + p.str() + "))");
      o.require(tirrell_b_inv(tirrell_b(p)) == p, "tirrell-b-inv(tirrell-b(" + p.str() + "))");
    }
    for (const auto& m : generate_motzkin(PathClass::MotzkinStartFlat, n))
      o.require(phi_a(psi_a(m)) == m, "phi-a(psi-a(" + m.str() + "))");
    for (const auto& m : generate_motzkin(PathClass::MotzkinNoGroundFlat, n))
      o.require(phi_b(psi_b(m)) == m, "phi-b(psi-b(" + m.str() + "))");
  }
  return o;
}

Outcome statistic_transfers() {
  Outcome o;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (const auto& p : dyck_class(PathClass::DyckAllOdd, n)) {
      const PathStats in = stats(p), out = stats(phi_a(p));
      o.require(in.ground_returns == out.ground_flats, "returns vs ground flats for " + p.str());
      o.require(static_cast<std::int64_t>(in.peaks) == out.peak_image, "peaks for " + p.str());
    }
    for (const auto& p : dyck_class(PathClass::DyckAllEven, n)) {
      const PathStats in = stats(p), out = stats(phi_b(p));
      o.require(in.ground_returns == out.ground_downs, "returns vs ground downs for " + p.str());
      o.require(static_cast<std::int64_t>(in.peaks) == out.peak_image, "peaks for " + p.str());
    }
  }
  return o;
}

Outcome no_ud_pairs() {
  Outcome o;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (const auto& p : dyck_class(PathClass::DyckAllOdd, n)) {
      const auto& s = p.steps();
      o.require(count_ud_pairs(std::span<const Step>(s).subspan(1, s.size() - 2)) == 0, "odd " + p.str());
    }
    for (const auto& p : dyck_class(PathClass::DyckAllEven, n))
      o.require(count_ud_pairs(p.steps()) == 0, "even " + p.str());
  }
  // The error path fires on deliberately corrupted (mixed-parity) input.
  bool raised = false;
  try {
    substitute_pairs(parse_steps("UDUUDD"));
  } catch (const Error& e) {
    raised = e.code() == ErrorCode::UnexpectedUDPair && e.position() == 0;
  }
  o.require(raised, "corrupted input did not raise UnexpectedUDPair");
  return o;
}

Outcome glove_fidelity() {
  Outcome o;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (const auto& p : dyck_class(PathClass::AllDyck, n)) {
      const OrderedTree t = glove_to_tree(p);
      o.require(glove_to_dyck(t) == p, "dyck round trip " + p.str());
      o.require(glove_to_tree(glove_to_dyck(t)).same_shape(t), "tree round trip " + p.str());
      o.require(t.leaf_heights() == oracle::peak_heights(p.str()), "leaf heights " + p.str());
    }
  }
  return o;
}

Outcome cli_verify() {
  Outcome o;
  const std::string cmd = std::string(PEAKPARITY_CLI) + " verify --max-n 12 > /dev/null";
  const auto start = std::chrono::steady_clock::now();
  const int raw = std::system(cmd.c_str());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  o.require(status == 0, "exit status " + std::to_string(status));
  o.require(seconds < 300.0, "took " + std::to_string(seconds) + " s");
  std::ostringstream note;
  note.precision(2);
  note << std::fixed << seconds << " s";
  if (o.passed)
    o.note = note.str();
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "all-odd Dyck n-paths counted by M_{n-1}, n<=12", counting_odd},
      {2, "all-even Dyck n-paths counted by R_n, n<=12", counting_even},
      {3, "phi-a / phi-b images are exactly the target classes", image_characterization},
      {4, "recursive = explicit = pair-splitting", triple_agreement},
      {5, "round trips are identities", round_trips},
      {6, "ground-return and peak statistic transfers", statistic_transfers},
      {7, "no UD pair in pair splitting", no_ud_pairs},
      {8, "glove bijection fidelity", glove_fidelity},
      {9, "peakparity verify --max-n 12 exits 0 within 5 minutes", cli_verify},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note = std::string("exception: ") + e.what();
    }
    failed += o.passed ? 0 : 1;
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name;
    if (!o.note.empty())
      std::cout << " (" << o.note << ")";
    std::cout << std::endl;
  }
  std::cout << (9 - failed) << "/9 criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
