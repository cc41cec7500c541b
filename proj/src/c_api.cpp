#include "peakparity/peakparity.h"

#include "peakparity/bijection.hpp"
#include "peakparity/enumeration.hpp"
#include "peakparity/path.hpp"
#include "peakparity/verify.hpp"

#include <memory>
#include <string>
#include <vector>

using namespace peakparity;

struct pp_path {
  Steps steps;
  std::string text;
};

struct pp_generator {
  PathGenerator gen;
  std::string text;
};

struct pp_count_table {
  CountTable table;
  std::string tsv;
  std::vector<std::vector<std::string>> cells;
};

namespace {

thread_local std::string last_message;
thread_local std::int64_t last_position = -1;

pp_status status_of(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidCharacter: return PP_INVALID_CHARACTER;
  case ErrorCode::ContainsFlat: return PP_CONTAINS_FLAT;
  case ErrorCode::UnbalancedPath: return PP_UNBALANCED_PATH;
  case ErrorCode::BelowGround: return PP_BELOW_GROUND;
  case ErrorCode::NotInImage: return PP_NOT_IN_IMAGE;
  case ErrorCode::FirstStepNotFlat: return PP_FIRST_STEP_NOT_FLAT;
  case ErrorCode::WrongParityClass: return PP_WRONG_PARITY_CLASS;
  case ErrorCode::UnexpectedUDPair: return PP_UNEXPECTED_UD_PAIR;
  case ErrorCode::InvalidExpansion: return PP_INVALID_EXPANSION;
  case ErrorCode::InvalidMotzkinOutput: return PP_INVALID_MOTZKIN_OUTPUT;
  case ErrorCode::IllDefinedParity: return PP_ILL_DEFINED_PARITY;
  case ErrorCode::InvalidTreeEncoding: return PP_INVALID_TREE_ENCODING;
  case ErrorCode::ClaimViolation: return PP_CLAIM_VIOLATION;
  }
  return PP_INTERNAL_ERROR;
}

pp_status fail(pp_status status, std::string message, std::int64_t position = -1) {
  last_message = std::move(message);
  last_position = position;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
pp_status guarded(Body&& body) {
  try {
    last_message.clear();
    last_position = -1;
    body();
    return PP_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what(), e.position());
  } catch (const std::bad_alloc&) {
    return fail(PP_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(PP_INTERNAL_ERROR, e.what());
  }
}

std::unique_ptr<pp_path> make_path(Steps steps) {
  auto p = std::make_unique<pp_path>();
  p->text = render(steps);
  p->steps = std::move(steps);
  return p;
}

bool valid_map_kind(int k) {
  return k >= PP_MAP_PHI_A && k <= PP_MAP_TIRRELL_B_INV;
}

bool valid_path_class(int c) {
  return c >= PP_CLASS_ALL_DYCK && c <= PP_CLASS_MOTZKIN_NO_GROUND_FLAT;
}

} // namespace

extern "C" {

const char* pp_status_name(pp_status status) {
  switch (status) {
  case PP_OK: return "Ok";
  case PP_INVALID_CHARACTER: return "InvalidCharacter";
  case PP_CONTAINS_FLAT: return "ContainsFlat";
  case PP_UNBALANCED_PATH: return "UnbalancedPath";
  case PP_BELOW_GROUND: return "BelowGround";
  case PP_NOT_IN_IMAGE: return "NotInImage";
  case PP_FIRST_STEP_NOT_FLAT: return "FirstStepNotFlat";
  case PP_WRONG_PARITY_CLASS: return "WrongParityClass";
  case PP_UNEXPECTED_UD_PAIR: return "UnexpectedUDPair";
  case PP_INVALID_EXPANSION: return "InvalidExpansion";
  case PP_INVALID_MOTZKIN_OUTPUT: return "InvalidMotzkinOutput";
  case PP_ILL_DEFINED_PARITY: return "IllDefinedParity";
  case PP_INVALID_TREE_ENCODING: return "InvalidTreeEncoding";
  case PP_CLAIM_VIOLATION: return "ClaimViolation";
  case PP_INVALID_ARGUMENT: return "InvalidArgument";
  case PP_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

const char* pp_last_error_message(void) { return last_message.c_str(); }

int64_t pp_last_error_position(void) { return last_position; }

const char* pp_parity_class_name(pp_parity_class c) {
  switch (c) {
  case PP_ALL_ODD: return "all-odd";
  case PP_ALL_EVEN: return "all-even";
  case PP_MIXED: return "mixed";
  }
  return nullptr;
}

const char* pp_map_kind_name(pp_map_kind k) {
  if (!valid_map_kind(k))
    return nullptr;
  return to_string(static_cast<MapKind>(k)).data();
}

pp_status pp_map_kind_from_name(const char* name, pp_map_kind* out) {
  if (!name || !out)
    return fail(PP_INVALID_ARGUMENT, "null argument");
  const auto k = parse_map_kind(name);
  if (!k)
    return fail(PP_INVALID_ARGUMENT, std::string("unknown map kind '") + name + "'");
  *out = static_cast<pp_map_kind>(*k);
  return PP_OK;
}

const char* pp_path_class_name(pp_path_class c) {
  if (!valid_path_class(c))
    return nullptr;
  return to_string(static_cast<PathClass>(c)).data();
}

pp_status pp_path_class_from_name(const char* name, pp_path_class* out) {
  if (!name || !out)
    return fail(PP_INVALID_ARGUMENT, "null argument");
  const auto c = parse_path_class(name);
  if (!c)
    return fail(PP_INVALID_ARGUMENT, std::string("unknown path class '") + name + "'");
  *out = static_cast<pp_path_class>(*c);
  return PP_OK;
}

pp_status pp_path_parse(const char* text, size_t length, pp_path** out) {
  if (!out || (!text && length))
    return fail(PP_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = make_path(parse_steps(std::string_view(text ? text : "", length))).release(); });
}

void pp_path_free(pp_path* path) { delete path; }

const char* pp_path_text(const pp_path* path) { return path ? path->text.c_str() : nullptr; }

size_t pp_path_length(const pp_path* path) { return path ? path->steps.size() : 0; }

pp_status pp_classify(const pp_path* dyck, pp_parity_class* out) {
  if (!dyck || !out)
    return fail(PP_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = static_cast<pp_parity_class>(classify(DyckPath::validate(dyck->steps))); });
}

pp_status pp_map_apply(pp_map_kind kind, const pp_path* input, pp_path** out) {
  if (!input || !out)
    return fail(PP_INVALID_ARGUMENT, "null argument");
  if (!valid_map_kind(kind))
    return fail(PP_INVALID_ARGUMENT, "unknown map kind " + std::to_string(static_cast<int>(kind)));
  return guarded([&] { *out = make_path(apply_map(static_cast<MapKind>(kind), input->steps)).release(); });
}

pp_status pp_compute_stats(const pp_path* path, pp_path_stats* out) {
  if (!path || !out)
    return fail(PP_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const PathStats s = stats(MotzkinPath::validate(path->steps));
    *out = pp_path_stats{s.peaks,   s.ground_returns, s.ground_flats, s.ground_downs, s.u_count,
                         s.f_count, s.uu_count,       s.fu_count,     s.peak_image};
  });
}

pp_status pp_generator_create(pp_path_class cls, uint32_t n, pp_generator** out) {
  if (!out)
    return fail(PP_INVALID_ARGUMENT, "null argument");
  if (!valid_path_class(cls))
    return fail(PP_INVALID_ARGUMENT, "unknown path class " + std::to_string(static_cast<int>(cls)));
  return guarded([&] { *out = new pp_generator{PathGenerator(static_cast<PathClass>(cls), n), {}}; });
}

pp_status pp_generator_next(pp_generator* gen, const char** text) {
  if (!gen || !text)
    return fail(PP_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Steps* s = gen->gen.next();
    if (!s) {
      *text = nullptr;
      return;
    }
    gen->text = render(*s);
    *text = gen->text.c_str();
  });
}

void pp_generator_free(pp_generator* gen) { delete gen; }

pp_status pp_count_table_create(uint32_t max_n, pp_count_table** out) {
  if (!out)
    return fail(PP_INVALID_ARGUMENT, "null argument");
  if (max_n < 1)
    return fail(PP_INVALID_ARGUMENT, "max_n must be at least 1");
  return guarded([&] {
    auto t = std::make_unique<pp_count_table>();
    t->table = count_table(max_n);
    t->tsv = t->table.to_tsv();
    for (const CountRow& r : t->table.rows)
      t->cells.push_back({std::to_string(r.n), r.catalan.str(), r.odd_count.str(), r.motzkin_prev.str(),
                          r.even_count.str(), r.riordan.str(), r.mixed_count.str()});
    *out = t.release();
  });
}

void pp_count_table_free(pp_count_table* table) { delete table; }

const char* pp_count_table_tsv(const pp_count_table* table) { return table ? table->tsv.c_str() : nullptr; }

size_t pp_count_table_rows(const pp_count_table* table) { return table ? table->cells.size() : 0; }

size_t pp_count_table_columns(void) { return std::size(CountTable::columns); }

const char* pp_count_table_column_name(size_t column) {
  return column < std::size(CountTable::columns) ? CountTable::columns[column].data() : nullptr;
}

const char* pp_count_table_cell(const pp_count_table* table, size_t row, size_t column) {
  if (!table || row >= table->cells.size() || column >= table->cells[row].size())
    return nullptr;
  return table->cells[row][column].c_str();
}

pp_status pp_verify(uint32_t max_n, int mutate_map, pp_check_callback callback, void* user_data, int* all_passed) {
  if (!all_passed)
    return fail(PP_INVALID_ARGUMENT, "null argument");
  if (mutate_map != -1 && !valid_map_kind(mutate_map))
    return fail(PP_INVALID_ARGUMENT, "unknown map kind " + std::to_string(mutate_map));
  return guarded([&] {
    const auto maps = mutate_map == -1 ? verify::MapTable::standard()
                                       : verify::MapTable::with_mutation(static_cast<MapKind>(mutate_map));
    const auto results = verify::run(max_n, maps);
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.passed;
      if (callback) {
        const pp_check_result c{r.name.c_str(), r.criterion, r.passed ? 1 : 0, r.cases, r.detail.c_str()};
        callback(&c, user_data);
      }
    }
    *all_passed = ok ? 1 : 0;
  });
}

} // extern "C"
