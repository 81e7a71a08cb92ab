/* C interface to the testtdo validator library. */
#ifndef TESTTDO_TESTTDO_H
#define TESTTDO_TESTTDO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TESTTDO_BUILDING)
#    define TTDO_API __declspec(dllexport)
#  else
#    define TTDO_API __declspec(dllimport)
#  endif
#else
#  define TTDO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ttdo_status {
  TTDO_OK = 0,
  TTDO_ERR_INVALID_ARGUMENT = 1,
  TTDO_ERR_NOT_FOUND = 2,
  TTDO_ERR_PARSE = 3,
  TTDO_ERR_NOT_APPLICABLE = 4,
  TTDO_ERR_INTERNAL = 5
} ttdo_status;

typedef enum ttdo_mode { TTDO_MODE_DRAFT = 0, TTDO_MODE_COMPLETE = 1 } ttdo_mode;
typedef enum ttdo_format { TTDO_FORMAT_TEXT = 0, TTDO_FORMAT_JSON = 1 } ttdo_format;
typedef enum ttdo_verdict { TTDO_VERDICT_PASS = 0, TTDO_VERDICT_FAIL = 1 } ttdo_verdict;

typedef enum ttdo_schema_view {
  TTDO_SCHEMA_TERMS = 0,
  TTDO_SCHEMA_ATTRS = 1,
  TTDO_SCHEMA_RELS = 2,
  TTDO_SCHEMA_COUNTS = 3
} ttdo_schema_view;

typedef enum ttdo_perturb_family {
  TTDO_PERTURB_CARDINALITY_LOWER = 0,
  TTDO_PERTURB_CARDINALITY_UPPER = 1,
  TTDO_PERTURB_AXIOM = 2
} ttdo_perturb_family;

typedef struct ttdo_kb ttdo_kb;
typedef struct ttdo_report ttdo_report;

/* Message for the last failing call on this thread; "" if none. Valid until
   the next call into the library from the same thread. */
TTDO_API const char* ttdo_last_error(void);

/* Frees strings returned through char** out-parameters. NULL is ignored. */
TTDO_API void ttdo_string_free(char* s);

/* Parses .tkb text. On TTDO_ERR_PARSE, *diagnostics (if non-NULL) receives one
   "line:col: error: message" per line; it is left NULL otherwise. */
TTDO_API ttdo_status ttdo_kb_parse(const char* text, size_t len, ttdo_kb** out, char** diagnostics);
TTDO_API ttdo_status ttdo_kb_generate(uint64_t seed, size_t size, ttdo_kb** out);
/* axiom_id is only read for TTDO_PERTURB_AXIOM. */
TTDO_API ttdo_status ttdo_kb_perturb(const ttdo_kb* kb, uint64_t seed, ttdo_perturb_family family,
                                     const char* axiom_id, ttdo_kb** out);
TTDO_API ttdo_status ttdo_kb_serialize(const ttdo_kb* kb, char** out);
TTDO_API size_t ttdo_kb_individual_count(const ttdo_kb* kb);
TTDO_API size_t ttdo_kb_link_count(const ttdo_kb* kb);
TTDO_API void ttdo_kb_free(ttdo_kb* kb);

TTDO_API ttdo_status ttdo_validate(const ttdo_kb* kb, ttdo_mode mode, ttdo_report** out);
TTDO_API ttdo_verdict ttdo_report_verdict(const ttdo_report* report);
TTDO_API size_t ttdo_report_error_count(const ttdo_report* report);
TTDO_API size_t ttdo_report_warning_count(const ttdo_report* report);
TTDO_API size_t ttdo_report_diagnostic_count(const ttdo_report* report);
/* NULL when i is out of range. */
TTDO_API const char* ttdo_report_diagnostic_code(const ttdo_report* report, size_t i);
TTDO_API ttdo_status ttdo_report_render(const ttdo_report* report, ttdo_format format, char** out);
TTDO_API void ttdo_report_free(ttdo_report* report);

/* term may be NULL or "" for the whole slice. */
TTDO_API ttdo_status ttdo_schema_render(ttdo_schema_view view, const char* term, ttdo_format format, char** out);
TTDO_API ttdo_status ttdo_axioms_render_list(ttdo_format format, char** out);
TTDO_API ttdo_status ttdo_axiom_render(const char* id, ttdo_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TESTTDO_TESTTDO_H */
