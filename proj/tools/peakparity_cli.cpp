// peakparity command-line front end. Talks to the library only through the C API.

#include "peakparity/peakparity.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <functional>
#include <tuple>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

struct PathDeleter {
  void operator()(pp_path* p) const { pp_path_free(p); }
};
struct GeneratorDeleter {
  void operator()(pp_generator* g) const { pp_generator_free(g); }
};
struct TableDeleter {
  void operator()(pp_count_table* t) const { pp_count_table_free(t); }
};
using PathHandle = std::unique_ptr<pp_path, PathDeleter>;

enum class Format { Plain, Tsv, JsonLines };

// Failure of a library call; carries the one-line diagnostic.
struct CommandError {
  std::string message;
};

void check(pp_status s) {
  if (s != PP_OK)
    throw CommandError{std::string(pp_status_name(s)) + ": " + pp_last_error_message()};
}

// "@" is the empty path on the command line.
PathHandle parse_path(const std::string& token) {
  const std::string text = token == "@" ? std::string() : token;
  pp_path* p = nullptr;
  check(pp_path_parse(text.data(), text.size(), &p));
  return PathHandle(p);
}

Format resolve_format(const std::string& name, Format fallback) {
  if (name.empty())
    return fallback;
  if (name == "plain")
    return Format::Plain;
  if (name == "tsv")
    return Format::Tsv;
  return Format::JsonLines;
}

// Calls fn for the positional path, or for every stdin line when it is "-".
// Per-line failures are reported and the remaining lines still run.
int for_each_input(const std::string& token, const std::function<void(const std::string&)>& fn) {
  if (token != "-") {
    fn(token);
    return 0;
  }
  int status = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(std::cin, line); ++lineno) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    try {
      fn(line.empty() ? std::string("@") : line);
    } catch (const CommandError& e) {
      std::cerr << "peakparity: line " << lineno << ": " << e.message << '\n';
      status = 1;
    }
  }
  return status;
}

json stats_json(const pp_path_stats& s) {
  return json{{"peaks", s.peaks},
              {"ground_returns", s.ground_returns},
              {"ground_flats", s.ground_flats},
              {"ground_downs", s.ground_downs},
              {"u_count", s.u_count},
              {"f_count", s.f_count},
              {"uu_count", s.uu_count},
              {"fu_count", s.fu_count},
              {"peak_image", s.peak_image}};
}

pp_map_kind map_from_name(const std::string& name) {
  pp_map_kind k{};
  check(pp_map_kind_from_name(name.c_str(), &k));
  return k;
}

int run_convert(const std::string& map_name, const std::string& token, Format fmt) {
  const pp_map_kind kind = map_from_name(map_name);
  if (fmt == Format::Tsv)
    std::cout << "input\tmap\toutput\n";
  return for_each_input(token, [&](const std::string& t) {
    const PathHandle in = parse_path(t);
    pp_path* raw = nullptr;
    check(pp_map_apply(kind, in.get(), &raw));
    const PathHandle out(raw);
    switch (fmt) {
    case Format::Plain: std::cout << pp_path_text(out.get()) << '\n'; break;
    case Format::Tsv:
      std::cout << pp_path_text(in.get()) << '\t' << map_name << '\t' << pp_path_text(out.get()) << '\n';
      break;
    case Format::JsonLines:
      std::cout << json{{"input", pp_path_text(in.get())}, {"map", map_name}, {"output", pp_path_text(out.get())}}.dump()
                << '\n';
      break;
    }
  });
}

int run_classify(const std::string& token, Format fmt) {
  if (fmt == Format::Tsv)
    std::cout << "path\tclass\n";
  return for_each_input(token, [&](const std::string& t) {
    const PathHandle p = parse_path(t);
    pp_parity_class c{};
    check(pp_classify(p.get(), &c));
    switch (fmt) {
    case Format::Plain: std::cout << pp_parity_class_name(c) << '\n'; break;
    case Format::Tsv: std::cout << pp_path_text(p.get()) << '\t' << pp_parity_class_name(c) << '\n'; break;
    case Format::JsonLines:
      std::cout << json{{"path", pp_path_text(p.get())}, {"class", pp_parity_class_name(c)}}.dump() << '\n';
      break;
    }
  });
}

int run_enumerate(const std::string& class_name, unsigned n, Format fmt) {
  pp_path_class cls{};
  check(pp_path_class_from_name(class_name.c_str(), &cls));
  pp_generator* raw = nullptr;
  check(pp_generator_create(cls, n, &raw));
  const std::unique_ptr<pp_generator, GeneratorDeleter> gen(raw);
  if (fmt == Format::Tsv)
    std::cout << "path\n";
  const char* text = nullptr;
  for (check(pp_generator_next(gen.get(), &text)); text; check(pp_generator_next(gen.get(), &text))) {
    if (fmt == Format::JsonLines)
      std::cout << json{{"path", text}}.dump() << '\n';
    else
      std::cout << text << '\n';
  }
  return 0;
}

json count_cell(const char* text) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (text[used] == '\0')
      return v;
  } catch (const std::out_of_range&) {
  }
  return text; // beyond 64 bits: keep exact as a string
}

int run_count(unsigned max_n, Format fmt) {
  pp_count_table* raw = nullptr;
  check(pp_count_table_create(max_n, &raw));
  const std::unique_ptr<pp_count_table, TableDeleter> table(raw);
  if (fmt != Format::JsonLines) {
    std::cout << pp_count_table_tsv(table.get());
    return 0;
  }
  for (std::size_t r = 0; r < pp_count_table_rows(table.get()); ++r) {
    json row = json::object();
    for (std::size_t c = 0; c < pp_count_table_columns(); ++c)
      row[pp_count_table_column_name(c)] = count_cell(pp_count_table_cell(table.get(), r, c));
    std::cout << row.dump() << '\n';
  }
  return 0;
}

int run_stats(const std::string& map_name, const std::string& token, Format fmt) {
  const pp_map_kind kind = map_from_name(map_name);
  static constexpr const char* fields[] = {"peaks",   "ground_returns", "ground_flats", "ground_downs", "u_count",
                                           "f_count", "uu_count",       "fu_count",     "peak_image"};
  if (fmt == Format::Tsv) {
    std::cout << "side\tpath";
    for (const char* f : fields)
      std::cout << '\t' << f;
    std::cout << '\n';
  }
  return for_each_input(token, [&](const std::string& t) {
    const PathHandle in = parse_path(t);
    pp_path* raw = nullptr;
    check(pp_map_apply(kind, in.get(), &raw));
    const PathHandle out(raw);
    pp_path_stats in_stats{}, out_stats{};
    check(pp_compute_stats(in.get(), &in_stats));
    check(pp_compute_stats(out.get(), &out_stats));
    if (fmt == Format::Tsv) {
      for (const auto& [side, path, st] : {std::tuple{"input", in.get(), stats_json(in_stats)},
                                           std::tuple{"output", out.get(), stats_json(out_stats)}}) {
        std::cout << side << '\t' << pp_path_text(path);
        for (const char* f : fields)
          std::cout << '\t' << st[f].dump();
        std::cout << '\n';
      }
      return;
    }
    std::cout << json{{"map", map_name},
                      {"input", pp_path_text(in.get())},
                      {"output", pp_path_text(out.get())},
                      {"input_stats", stats_json(in_stats)},
                      {"output_stats", stats_json(out_stats)}}
                     .dump()
              << '\n';
  });
}

struct VerifyPrinter {
  Format fmt;
  std::size_t total = 0;
  std::size_t passed = 0;
};

void print_check(const pp_check_result* r, void* user) {
  auto& out = *static_cast<VerifyPrinter*>(user);
  ++out.total;
  out.passed += r->passed ? 1 : 0;
  if (out.fmt == Format::JsonLines) {
    std::cout << json{{"check", r->name},
                      {"criterion", r->criterion},
                      {"passed", r->passed != 0},
                      {"cases", r->cases},
                      {"detail", r->detail}}
                     .dump()
              << '\n';
    return;
  }
  const std::string tag = r->criterion ? "criterion " + std::to_string(r->criterion) : "invariant";
  if (out.fmt == Format::Tsv) {
    std::cout << r->name << '\t' << tag << '\t' << (r->passed ? "pass" : "fail") << '\t' << r->cases << '\t'
              << r->detail << '\n';
    return;
  }
  std::cout << (r->passed ? "PASS  " : "FAIL  ") << r->name << " (" << tag << ", " << r->cases << " cases)";
  if (!r->passed)
    std::cout << ": " << r->detail;
  std::cout << '\n';
}

int run_verify(unsigned max_n, const std::string& mutate, Format fmt) {
  const int mutation = mutate.empty() ? -1 : static_cast<int>(map_from_name(mutate));
  VerifyPrinter printer{fmt};
  if (fmt == Format::Tsv)
    std::cout << "check\tkind\tresult\tcases\tdetail\n";
  int all_passed = 0;
  check(pp_verify(max_n, mutation, print_check, &printer, &all_passed));
  if (fmt == Format::Plain)
    std::cout << "verify: " << printer.passed << "/" << printer.total << " checks passed for n <= " << max_n
              << '\n';
  return all_passed ? 0 : 1;
}

CLI::Validator name_validator(const char* what, pp_status (*lookup)(const char*, void*)) {
  return CLI::Validator(
      [what, lookup](std::string& value) -> std::string {
        unsigned char scratch[sizeof(int)];
        return lookup(value.c_str(), scratch) == PP_OK ? std::string() : "unknown " + std::string(what) + " '" + value + "'";
      },
      what);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bijections between parity-constrained Dyck paths and Motzkin paths", "peakparity"};
  app.require_subcommand(1);

  const auto map_check = name_validator("map kind", [](const char* n, void* out) {
    return pp_map_kind_from_name(n, static_cast<pp_map_kind*>(out));
  });
  const auto class_check = name_validator("path class", [](const char* n, void* out) {
    return pp_path_class_from_name(n, static_cast<pp_path_class*>(out));
  });
  const auto format_check = CLI::IsMember({"plain", "tsv", "json-lines"});

  std::string map_name, class_name, path_token, format_name, mutate;
  unsigned n = 0;
  unsigned max_n = 12;

  auto* convert = app.add_subcommand("convert", "Apply one map to a path");
  convert->add_option("--map", map_name, "Map kind")->required()->check(map_check);
  convert->add_option("path", path_token, "Path text, @ for the empty path, - for stdin lines")->required();
  convert->add_option("--format", format_name)->check(format_check);

  auto* classify = app.add_subcommand("classify", "Peak parity class of a Dyck path");
  classify->add_option("path", path_token, "Path text, @ for the empty path, - for stdin lines")->required();
  classify->add_option("--format", format_name)->check(format_check);

  auto* enumerate = app.add_subcommand("enumerate", "List a path class in lexicographic order");
  enumerate->add_option("--class", class_name, "Path class")->required()->check(class_check);
  enumerate->add_option("--n", n, "Semilength (Dyck) or length (Motzkin)")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--format", format_name)->check(format_check);

  auto* count = app.add_subcommand("count", "Print the count table");
  count->add_option("--max-n", max_n, "Largest semilength")->required()->check(CLI::Range(1u, 1000u));
  count->add_option("--format", format_name)->check(format_check);

  auto* stats = app.add_subcommand("stats", "Statistics of a path and its image");
  stats->add_option("--map", map_name, "Map kind")->required()->check(map_check);
  stats->add_option("path", path_token, "Path text, @ for the empty path, - for stdin lines")->required();
  stats->add_option("--format", format_name)->check(format_check);

  auto* verify = app.add_subcommand("verify", "Run every check up to the given size");
  verify->add_option("--max-n", max_n, "Largest size checked")->check(CLI::NonNegativeNumber);
  verify->add_option("--mutate", mutate, "Corrupt one map's outputs to exercise the checks")->check(map_check);
  verify->add_option("--format", format_name)->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*convert)
      return run_convert(map_name, path_token, resolve_format(format_name, Format::Plain));
    if (*classify)
      return run_classify(path_token, resolve_format(format_name, Format::Plain));
    if (*enumerate)
      return run_enumerate(class_name, n, resolve_format(format_name, Format::Plain));
    if (*count)
      return run_count(max_n, resolve_format(format_name, Format::Tsv));
    if (*stats)
      return run_stats(map_name, path_token, resolve_format(format_name, Format::JsonLines));
    if (*verify)
      return run_verify(max_n, mutate, resolve_format(format_name, Format::Plain));
  } catch (const CommandError& e) {
    std::cerr << "peakparity: " << e.message << '\n';
    return 1;
  }
  return 2;
}
