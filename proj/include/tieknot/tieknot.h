/* C interface to the tie-knot library.
 *
 * Every function returns a tk_status. On failure a description is available
 * from tk_last_error() until the next call on the same thread. Strings
 * returned through `char**` are owned by the caller and released with
 * tk_string_free(); opaque handles have their own *_free function.
 *
 * Region arguments use TK_REGION_*; -1 means "any" where documented.
 */
#ifndef TIEKNOT_H
#define TIEKNOT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TIEKNOT_BUILDING_LIBRARY)
#    define TK_API __declspec(dllexport)
#  else
#    define TK_API __declspec(dllimport)
#  endif
#else
#  define TK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tk_status {
  TK_OK = 0,
  TK_INVALID = 1,        /* well-formed input that is not a valid knot */
  TK_ERR_PARSE = 2,
  TK_ERR_ARGUMENT = 3,
  TK_ERR_RANGE = 4,
  TK_ERR_NOT_FOUND = 5,
  TK_ERR_INTERNAL = 6
} tk_status;

typedef enum tk_region { TK_REGION_L = 0, TK_REGION_C = 1, TK_REGION_R = 2 } tk_region;

typedef enum tk_class {
  TK_CLASS_FM = 0,
  TK_CLASS_WINDINGS = 1,
  TK_CLASS_SINGLE = 2,
  TK_CLASS_FULL = 3,
  TK_CLASS_HIDDEN = 4
} tk_class;

typedef enum tk_format { TK_FORMAT_PLAIN = 0, TK_FORMAT_JSONL = 1, TK_FORMAT_CSV = 2 } tk_format;

typedef struct tk_knot tk_knot;
typedef struct tk_report tk_report;
typedef struct tk_series tk_series;

TK_API const char* tk_last_error(void);
TK_API const char* tk_version(void);
TK_API void tk_string_free(char* s);

/* ---- knots ------------------------------------------------------------ */

TK_API tk_status tk_knot_parse_tw(const char* text, tk_region start, tk_knot** out);
/* Region notation; i/o marks are accepted and ignored. */
TK_API tk_status tk_knot_parse_clr(const char* text, tk_knot** out);
/* From a name such as "L-373.4" or "L-x12~4:1,4:2". */
TK_API tk_status tk_knot_from_name(const char* name, tk_knot** out);
/* From a registry common name ("Trinity"). `registry_path` may be NULL for
 * the built-in registry; otherwise the file's entries are searched first. */
TK_API tk_status tk_knot_named(const char* common_name, const char* registry_path,
                               tk_knot** out);
TK_API void tk_knot_free(tk_knot* k);

TK_API tk_status tk_knot_tw(const tk_knot* k, char** out);
TK_API tk_status tk_knot_clr(const tk_knot* k, int annotate, int spaced, char** out);
TK_API tk_status tk_knot_mirror(const tk_knot* k, tk_knot** out);

typedef struct tk_metrics {
  size_t windings;
  size_t moves;
  size_t symbols;
  size_t tucks;
  int max_tuck_depth;
  int net_turn;
  tk_region start;
  tk_region final_region;
  int symmetry;
  int balance;
} tk_metrics;

TK_API tk_status tk_knot_metrics(const tk_knot* k, tk_metrics* out);
/* "Classical-C", "Modern-R" or "Modern-L". */
TK_API tk_status tk_knot_classify(const tk_knot* k, char** out);
/* TK_INVALID when the knot does not validate. */
TK_API tk_status tk_knot_name(const tk_knot* k, char** out);
TK_API tk_status tk_knot_instructions(const tk_knot* k, char** out);
/* One JSON object or one CSV row, without a newline. */
TK_API tk_status tk_knot_record(const tk_knot* k, tk_format format, char** out);
TK_API const char* tk_record_csv_header(void);

/* ---- validation ------------------------------------------------------- */

typedef struct tk_validity_options {
  int require_final_tuck;
  int allow_final_center_no_tuck;
  int allow_hidden_tucks;
  int max_tuck_depth; /* 0 = unlimited */
  int max_moves;
} tk_validity_options;

TK_API void tk_validity_options_default(tk_validity_options* opts);

/* A report is produced for any parseable input; the status is TK_OK when
 * valid and TK_INVALID otherwise. `opts` may be NULL for the defaults. */
TK_API tk_status tk_validate_tw(const char* text, tk_region start, const tk_validity_options* opts,
                                tk_report** out);
TK_API tk_status tk_validate_clr(const char* text, const tk_validity_options* opts,
                                 tk_report** out);
TK_API int tk_report_valid(const tk_report* r);
TK_API size_t tk_report_count(const tk_report* r);
/* Borrowed pointers, valid until tk_report_free. */
TK_API tk_status tk_report_violation(const tk_report* r, size_t i, const char** axiom,
                                     size_t* position, const char** message);
TK_API tk_status tk_report_text(const tk_report* r, char** out);
TK_API tk_status tk_report_json(const tk_report* r, char** out);
TK_API void tk_report_free(tk_report* r);

/* ---- conversion helpers on raw text ------------------------------------ */

/* Annotates a region-notation word with i/o marks (no validation). */
TK_API tk_status tk_clr_annotate(const char* clr, int spaced, char** out);

/* ---- enumeration ------------------------------------------------------ */

/* Return nonzero to continue, zero to stop. */
typedef int (*tk_knot_callback)(const tk_knot* k, void* user);

/* Knots with min_windings..max_windings windings, start L, canonical order
 * within each winding count. final_region is TK_REGION_* or -1. */
TK_API tk_status tk_enumerate(tk_class cls, int min_windings, int max_windings, int final_region,
                              tk_knot_callback cb, void* user);
/* Coefficient d = knots with d windings, d = 0..max_windings. */
TK_API tk_status tk_count(tk_class cls, int max_windings, int final_region, tk_series** out);
TK_API tk_status tk_sample(tk_class cls, int max_windings, int final_region, size_t count,
                           uint64_t seed, tk_knot_callback cb, void* user);

/* ---- series ----------------------------------------------------------- */

/* Grammar counting series (fm, single, r-final, c-final, l-final,
 * windings-r, windings-c, windings-l, full, hidden), degrees 0..max_degree. */
TK_API tk_status tk_series_named(const char* which, int max_degree, tk_series** out);
TK_API const char* tk_series_names(void); /* comma separated */
/* First `order` coefficients of a rational expression in z. */
TK_API tk_status tk_series_expand(const char* rational, size_t order, tk_series** out);
/* From "c0, c1, ..." */
TK_API tk_status tk_series_parse(const char* list, tk_series** out);
TK_API size_t tk_series_length(const tk_series* s);
/* Decimal text of coefficient i. */
TK_API tk_status tk_series_coefficient(const tk_series* s, size_t i, char** out);
TK_API tk_status tk_series_list(const tk_series* s, char** out);
TK_API tk_status tk_series_text(const tk_series* s, char** out);
/* `equal` receives 1 or 0; `report` (may be NULL) a description. */
TK_API tk_status tk_series_compare(const tk_series* a, const tk_series* b, int* equal,
                                   char** report);
/* TK_ERR_NOT_FOUND when no recurrence of order <= max_order fits. */
TK_API tk_status tk_series_fit(const tk_series* s, int max_order, char** rational);
TK_API void tk_series_free(tk_series* s);

/* ---- census, grammars, registry --------------------------------------- */

TK_API tk_status tk_census_csv(int max_windings, char** out);
/* `ok` receives 1 when every check passed. */
TK_API tk_status tk_cross_check(int max_windings, int* ok, char** report);

TK_API const char* tk_grammar_names(void); /* comma separated */
TK_API tk_status tk_grammar_bnf(const char* which, char** out);
/* Members of size <= max_size in canonical order, one callback per string. */
typedef int (*tk_string_callback)(const char* s, void* user);
TK_API tk_status tk_grammar_generate(const char* which, int max_size, tk_string_callback cb,
                                     void* user);

/* Tab-separated lines: common name, start, tw, clr, knot name. */
TK_API tk_status tk_registry_list(const char* registry_path, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TIEKNOT_H */
