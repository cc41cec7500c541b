#include "doctest.h"

#include "peakparity/peakparity.h"

#include <cstring>
#include <string>
#include <vector>

namespace {

pp_path* parse(const char* text) {
  pp_path* p = nullptr;
  REQUIRE(pp_path_parse(text, std::strlen(text), &p) == PP_OK);
  return p;
}

std::string convert(pp_map_kind kind, const char* text, pp_status* status = nullptr) {
  pp_path* in = parse(text);
  pp_path* out = nullptr;
  const pp_status s = pp_map_apply(kind, in, &out);
  if (status)
    *status = s;
  std::string result = out ? pp_path_text(out) : "";
  pp_path_free(out);
  pp_path_free(in);
  return result;
}

struct Collected {
  std::vector<std::string> names;
  int failures = 0;
};

void collect(const pp_check_result* r, void* user) {
  auto& c = *static_cast<Collected*>(user);
  c.names.emplace_back(r->name);
  c.failures += r->passed ? 0 : 1;
}

} // namespace

TEST_CASE("parse reports invalid characters with position") {
  pp_path* p = nullptr;
  CHECK(pp_path_parse("UXD", 3, &p) == PP_INVALID_CHARACTER);
  CHECK(p == nullptr);
  CHECK(pp_last_error_position() == 1);
  CHECK(std::string(pp_last_error_message()).find("'X'") != std::string::npos);
  CHECK(pp_path_parse(nullptr, 0, &p) == PP_OK);
  CHECK(std::string(pp_path_text(p)).empty());
  pp_path_free(p);
  CHECK(pp_path_parse("UD", 2, nullptr) == PP_INVALID_ARGUMENT);
}

TEST_CASE("classify through the C API") {
  pp_path* p = parse("UDUUDD");
  pp_parity_class c{};
  CHECK(pp_classify(p, &c) == PP_OK);
  CHECK(c == PP_MIXED);
  CHECK(std::string(pp_parity_class_name(c)) == "mixed");
  pp_path_free(p);

  pp_path* flat = parse("UFD");
  CHECK(pp_classify(flat, &c) == PP_CONTAINS_FLAT);
  CHECK(pp_last_error_position() == 1);
  pp_path_free(flat);
}

TEST_CASE("every map kind through the C API") {
  CHECK(convert(PP_MAP_PHI_A, "UUUDDD") == "FUD");
  CHECK(convert(PP_MAP_PHI_B, "UUDUDD") == "UFD");
  CHECK(convert(PP_MAP_PSI_A, "FUD") == "UUUDDD");
  CHECK(convert(PP_MAP_PSI_B, "UFD") == "UUDUDD");
  CHECK(convert(PP_MAP_EXPLICIT_A, "UDUD") == "FF");
  CHECK(convert(PP_MAP_EXPLICIT_B, "UUDD") == "UD");
  CHECK(convert(PP_MAP_TIRRELL_A, "UUUDDDUD") == "FUDF");
  CHECK(convert(PP_MAP_TIRRELL_B, "UUDDUUDD") == "UDUD");
  CHECK(convert(PP_MAP_TIRRELL_A_INV, "FF") == "UDUD");
  CHECK(convert(PP_MAP_TIRRELL_B_INV, "") == "");

  pp_status s{};
  convert(PP_MAP_PHI_A, "UUDD", &s);
  CHECK(s == PP_WRONG_PARITY_CLASS);
  convert(PP_MAP_PSI_B, "FUD", &s);
  CHECK(s == PP_NOT_IN_IMAGE);
  convert(PP_MAP_TIRRELL_A_INV, "UD", &s);
  CHECK(s == PP_FIRST_STEP_NOT_FLAT);
  convert(static_cast<pp_map_kind>(42), "UD", &s);
  CHECK(s == PP_INVALID_ARGUMENT);
}

TEST_CASE("map and class names round trip") {
  for (int k = PP_MAP_PHI_A; k <= PP_MAP_TIRRELL_B_INV; ++k) {
    pp_map_kind back{};
    REQUIRE(pp_map_kind_from_name(pp_map_kind_name(static_cast<pp_map_kind>(k)), &back) == PP_OK);
    CHECK(back == k);
  }
  for (int c = PP_CLASS_ALL_DYCK; c <= PP_CLASS_MOTZKIN_NO_GROUND_FLAT; ++c) {
    pp_path_class back{};
    REQUIRE(pp_path_class_from_name(pp_path_class_name(static_cast<pp_path_class>(c)), &back) == PP_OK);
    CHECK(back == c);
  }
  pp_map_kind k{};
  CHECK(pp_map_kind_from_name("phi-c", &k) == PP_INVALID_ARGUMENT);
  CHECK(pp_map_kind_name(static_cast<pp_map_kind>(-3)) == nullptr);
}

TEST_CASE("stats through the C API") {
  pp_path* p = parse("FUD");
  pp_path_stats s{};
  REQUIRE(pp_compute_stats(p, &s) == PP_OK);
  CHECK(s.u_count == 1);
  CHECK(s.f_count == 1);
  CHECK(s.fu_count == 1);
  CHECK(s.uu_count == 0);
  CHECK(s.ground_flats == 1);
  CHECK(s.peak_image == 1);
  pp_path_free(p);

  pp_path* bad = parse("UU");
  CHECK(pp_compute_stats(bad, &s) == PP_UNBALANCED_PATH);
  pp_path_free(bad);
}

TEST_CASE("generator handle") {
  pp_generator* g = nullptr;
  REQUIRE(pp_generator_create(PP_CLASS_DYCK_ALL_ODD, 3, &g) == PP_OK);
  std::vector<std::string> seen;
  const char* text = nullptr;
  while (pp_generator_next(g, &text) == PP_OK && text)
    seen.emplace_back(text);
  pp_generator_free(g);
  CHECK(seen == std::vector<std::string>{"UUUDDD", "UDUDUD"});
  CHECK(pp_generator_create(static_cast<pp_path_class>(99), 3, &g) == PP_INVALID_ARGUMENT);
}

TEST_CASE("count table handle") {
  pp_count_table* t = nullptr;
  REQUIRE(pp_count_table_create(4, &t) == PP_OK);
  CHECK(pp_count_table_rows(t) == 4);
  CHECK(pp_count_table_columns() == 7);
  CHECK(std::string(pp_count_table_column_name(5)) == "riordan");
  CHECK(std::string(pp_count_table_cell(t, 3, 4)) == "3"); // even_count at n=4
  CHECK(pp_count_table_cell(t, 4, 0) == nullptr);
  CHECK(std::string(pp_count_table_tsv(t)).rfind("n\tcatalan", 0) == 0);
  pp_count_table_free(t);
  CHECK(pp_count_table_create(0, &t) == PP_INVALID_ARGUMENT);
}

TEST_CASE("verify through the C API") {
  Collected ok;
  int passed = 0;
  REQUIRE(pp_verify(6, -1, collect, &ok, &passed) == PP_OK);
  CHECK(passed == 1);
  CHECK(ok.failures == 0);
  CHECK(ok.names.size() == 16);
  CHECK(ok.names.front() == "counting-odd");

  Collected bad;
  REQUIRE(pp_verify(6, PP_MAP_TIRRELL_A, collect, &bad, &passed) == PP_OK);
  CHECK(passed == 0);
  CHECK(bad.failures > 0);

  CHECK(pp_verify(3, 77, nullptr, nullptr, &passed) == PP_INVALID_ARGUMENT);
}
