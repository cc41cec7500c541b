/*
 * peakparity C API.
 *
 * Paths are passed around as opaque pp_path handles created from U/D/F text.
 * Every fallible call returns a pp_status; on failure a description of the
 * last error on the calling thread is available from pp_last_error_message().
 * Strings returned by the library are owned by the handle they came from and
 * stay valid until that handle is freed (or, for generators, advanced).
 */
#ifndef PEAKPARITY_H
#define PEAKPARITY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PEAKPARITY_BUILDING_LIBRARY)
#    define PP_API __declspec(dllexport)
#  else
#    define PP_API __declspec(dllimport)
#  endif
#else
#  define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_INVALID_CHARACTER = 1,
  PP_CONTAINS_FLAT = 2,
  PP_UNBALANCED_PATH = 3,
  PP_BELOW_GROUND = 4,
  PP_NOT_IN_IMAGE = 5,
  PP_FIRST_STEP_NOT_FLAT = 6,
  PP_WRONG_PARITY_CLASS = 7,
  PP_UNEXPECTED_UD_PAIR = 8,
  PP_INVALID_EXPANSION = 9,
  PP_INVALID_MOTZKIN_OUTPUT = 10,
  PP_ILL_DEFINED_PARITY = 11,
  PP_INVALID_TREE_ENCODING = 12,
  PP_CLAIM_VIOLATION = 13,
  PP_INVALID_ARGUMENT = 14,
  PP_INTERNAL_ERROR = 15
} pp_status;

typedef enum pp_parity_class {
  PP_ALL_ODD = 0,
  PP_ALL_EVEN = 1,
  PP_MIXED = 2
} pp_parity_class;

typedef enum pp_map_kind {
  PP_MAP_PHI_A = 0,
  PP_MAP_PHI_B,
  PP_MAP_PSI_A,
  PP_MAP_PSI_B,
  PP_MAP_EXPLICIT_A,
  PP_MAP_EXPLICIT_B,
  PP_MAP_TIRRELL_A,
  PP_MAP_TIRRELL_B,
  PP_MAP_TIRRELL_A_INV,
  PP_MAP_TIRRELL_B_INV
} pp_map_kind;

typedef enum pp_path_class {
  PP_CLASS_ALL_DYCK = 0,
  PP_CLASS_DYCK_ALL_ODD,
  PP_CLASS_DYCK_ALL_EVEN,
  PP_CLASS_DYCK_MIXED,
  PP_CLASS_ALL_MOTZKIN,
  PP_CLASS_MOTZKIN_START_FLAT,
  PP_CLASS_MOTZKIN_NO_GROUND_FLAT
} pp_path_class;

typedef struct pp_path pp_path;
typedef struct pp_generator pp_generator;
typedef struct pp_count_table pp_count_table;

typedef struct pp_path_stats {
  uint64_t peaks;
  uint64_t ground_returns;
  uint64_t ground_flats;
  uint64_t ground_downs;
  uint64_t u_count;
  uint64_t f_count;
  uint64_t uu_count;
  uint64_t fu_count;
  int64_t peak_image;
} pp_path_stats;

typedef struct pp_check_result {
  const char* name;
  int criterion; /* acceptance criterion number, 0 for module invariants */
  int passed;
  uint64_t cases;
  const char* detail; /* empty when passed */
} pp_check_result;

typedef void (*pp_check_callback)(const pp_check_result* result, void* user_data);

/* Errors */
PP_API const char* pp_status_name(pp_status status);
PP_API const char* pp_last_error_message(void);
/* 0-based position attached to the last error, or -1. */
PP_API int64_t pp_last_error_position(void);

/* Names used on the command line. */
PP_API const char* pp_parity_class_name(pp_parity_class c);
PP_API const char* pp_map_kind_name(pp_map_kind k);
PP_API pp_status pp_map_kind_from_name(const char* name, pp_map_kind* out);
PP_API const char* pp_path_class_name(pp_path_class c);
PP_API pp_status pp_path_class_from_name(const char* name, pp_path_class* out);

/* Paths. Parsing only checks the alphabet; each operation validates what it needs. */
PP_API pp_status pp_path_parse(const char* text, size_t length, pp_path** out);
PP_API void pp_path_free(pp_path* path);
PP_API const char* pp_path_text(const pp_path* path);
PP_API size_t pp_path_length(const pp_path* path);

PP_API pp_status pp_classify(const pp_path* dyck, pp_parity_class* out);
PP_API pp_status pp_map_apply(pp_map_kind kind, const pp_path* input, pp_path** out);
/* Accepts any Motzkin path (Dyck paths included). */
PP_API pp_status pp_compute_stats(const pp_path* path, pp_path_stats* out);

/* Lazy generator; *text is NULL once the class is exhausted. */
PP_API pp_status pp_generator_create(pp_path_class cls, uint32_t n, pp_generator** out);
PP_API pp_status pp_generator_next(pp_generator* gen, const char** text);
PP_API void pp_generator_free(pp_generator* gen);

/* Count table for rows 1..max_n. Cells are decimal strings. */
PP_API pp_status pp_count_table_create(uint32_t max_n, pp_count_table** out);
PP_API void pp_count_table_free(pp_count_table* table);
PP_API const char* pp_count_table_tsv(const pp_count_table* table);
PP_API size_t pp_count_table_rows(const pp_count_table* table);
PP_API size_t pp_count_table_columns(void);
PP_API const char* pp_count_table_column_name(size_t column);
PP_API const char* pp_count_table_cell(const pp_count_table* table, size_t row, size_t column);

/*
 * Runs the full check suite for sizes 0..max_n, calling `callback` once per
 * check in a fixed order. `mutate_map` is a pp_map_kind whose outputs get a
 * single-step corruption, or -1 for none. *all_passed receives 1 or 0.
 */
PP_API pp_status pp_verify(uint32_t max_n, int mutate_map, pp_check_callback callback, void* user_data,
                           int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* PEAKPARITY_H */
