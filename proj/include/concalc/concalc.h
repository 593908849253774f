/*
 * concalc: exact invariants of contraction algebras and flopping curves.
 *
 * Plain C interface over the C++ engine. Objects are opaque handles created
 * by *_parse / *_compute / ... functions and released with the matching
 * *_free function. Every fallible call returns a concalc_status; on failure
 * concalc_last_error() describes the problem (per thread). Strings returned
 * through char** are owned by the caller and released with
 * concalc_string_free(). const char* accessors point into the handle and stay
 * valid until the handle is freed.
 *
 * All functions are safe to call concurrently on distinct handles; handles
 * are immutable after creation and may be shared read-only between threads.
 */
#ifndef CONCALC_CONCALC_H
#define CONCALC_CONCALC_H

#include <stddef.h>
#include <stdint.h>

#if defined(CONCALC_BUILDING_LIBRARY)
#define CONCALC_API __attribute__((visibility("default")))
#else
#define CONCALC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as the command-line tool's exit codes. */
typedef enum concalc_status {
  CONCALC_OK = 0,
  CONCALC_MISMATCH = 1,         /* verification disagrees with stored data */
  CONCALC_INPUT_ERROR = 2,      /* malformed input or argument */
  CONCALC_INDETERMINATE = 3,    /* result depends on a truncated basis */
  CONCALC_INCONSISTENT = 4,     /* mathematically inconsistent data */
  CONCALC_INTERNAL_ERROR = 5
} concalc_status;

CONCALC_API const char* concalc_last_error(void);
CONCALC_API const char* concalc_version(void);
CONCALC_API void concalc_string_free(char* s);

/* ------------------------------------------------------------------------ */
/* Presentations                                                            */
/* ------------------------------------------------------------------------ */

typedef struct concalc_presentation concalc_presentation;

/* Parses the presentation text format (see README). */
CONCALC_API concalc_status concalc_presentation_parse(const char* text,
                                                      concalc_presentation** out);
/* Copy of a catalogue presentation, looked up by key ("D4_family(2)") or by
 * presentation name ("D4_family_2"). */
CONCALC_API concalc_status concalc_presentation_from_catalog(const char* key,
                                                             concalc_presentation** out);
CONCALC_API concalc_status concalc_presentation_abelianize(const concalc_presentation* p,
                                                           concalc_presentation** out);
/* precedence[k] = old index of the generator placed k-th (first = largest). */
CONCALC_API concalc_status concalc_presentation_reorder(const concalc_presentation* p,
                                                        const uint32_t* precedence,
                                                        size_t n,
                                                        concalc_presentation** out);
CONCALC_API concalc_status concalc_presentation_print(const concalc_presentation* p,
                                                      char** out);
CONCALC_API const char* concalc_presentation_name(const concalc_presentation* p);
CONCALC_API size_t concalc_presentation_generator_count(const concalc_presentation* p);
CONCALC_API const char* concalc_presentation_generator(const concalc_presentation* p,
                                                       size_t i);
CONCALC_API size_t concalc_presentation_relation_count(const concalc_presentation* p);
/* Relation i printed as a polynomial (read as "= 0"). */
CONCALC_API concalc_status concalc_presentation_relation(const concalc_presentation* p,
                                                         size_t i, char** out);
CONCALC_API size_t concalc_presentation_max_relation_degree(const concalc_presentation* p);
CONCALC_API void concalc_presentation_free(concalc_presentation* p);

/* ------------------------------------------------------------------------ */
/* Completion and dimensions                                                */
/* ------------------------------------------------------------------------ */

typedef struct concalc_completion_config {
  size_t max_degree; /* ambiguities above this degree are not resolved */
  size_t max_rules;  /* safety cap on the rewrite system */
} concalc_completion_config;

CONCALC_API void concalc_completion_config_default(concalc_completion_config* cfg);

typedef struct concalc_dimension concalc_dimension;

/* Completes the presentation and counts normal words per degree. A NULL cfg
 * uses the defaults (max_degree 32, max_rules 10000). */
CONCALC_API concalc_status concalc_dimension_compute(const concalc_presentation* p,
                                                     const concalc_completion_config* cfg,
                                                     concalc_dimension** out);
/* 1 when some degree has no normal words and the basis is complete. */
CONCALC_API int concalc_dimension_is_finite(const concalc_dimension* d);
CONCALC_API int concalc_dimension_is_truncated(const concalc_dimension* d);
/* The dimension when finite, otherwise the partial sum up to the cutoff. */
CONCALC_API uint64_t concalc_dimension_total(const concalc_dimension* d);
CONCALC_API size_t concalc_dimension_cutoff(const concalc_dimension* d);
CONCALC_API size_t concalc_dimension_rule_count(const concalc_dimension* d);
/* Number of per-degree counts (degrees 0 .. n-1). */
CONCALC_API size_t concalc_dimension_degree_count(const concalc_dimension* d);
CONCALC_API uint64_t concalc_dimension_count(const concalc_dimension* d, size_t degree);
CONCALC_API void concalc_dimension_free(concalc_dimension* d);

/* Brute-force linear algebra over all words of degree <= cutoff. Writes
 * cutoff + 1 counts; capacity must allow that. */
CONCALC_API concalc_status concalc_oracle_dimension(const concalc_presentation* p,
                                                   size_t cutoff, uint64_t* counts,
                                                   size_t capacity, size_t* written);

/* *out = 1 when all generators commute in the quotient. */
CONCALC_API concalc_status concalc_is_commutative(const concalc_presentation* p,
                                                  const concalc_completion_config* cfg,
                                                  int* out);

/* Normal form of a polynomial (same text syntax as relations). */
CONCALC_API concalc_status concalc_normal_form(const concalc_presentation* p,
                                               const concalc_completion_config* cfg,
                                               const char* polynomial, char** out);

/* ------------------------------------------------------------------------ */
/* Root systems                                                             */
/* ------------------------------------------------------------------------ */

typedef struct concalc_marked_dynkin concalc_marked_dynkin;

/* type: "A1", "D4", "E8", ...; mark: 1-based Bourbaki vertex or "center". */
CONCALC_API concalc_status concalc_marked_dynkin_parse(const char* type, const char* mark,
                                                       concalc_marked_dynkin** out);
CONCALC_API const char* concalc_marked_dynkin_type(const concalc_marked_dynkin* m);
CONCALC_API size_t concalc_marked_dynkin_rank(const concalc_marked_dynkin* m);
CONCALC_API size_t concalc_marked_dynkin_mark(const concalc_marked_dynkin* m);
CONCALC_API int concalc_marked_dynkin_realizable(const concalc_marked_dynkin* m);
CONCALC_API size_t concalc_positive_root_count(const concalc_marked_dynkin* m);
CONCALC_API size_t concalc_length_invariant(const concalc_marked_dynkin* m);
CONCALC_API size_t concalc_component_count(const concalc_marked_dynkin* m);
CONCALC_API concalc_status concalc_component_info(const concalc_marked_dynkin* m,
                                                  size_t component, size_t* curve_class,
                                                  size_t* orbit_size);
/* Writes rank coefficients of one orbit member. */
CONCALC_API concalc_status concalc_component_root(const concalc_marked_dynkin* m,
                                                  size_t component, size_t member,
                                                  int* coeffs, size_t capacity);
CONCALC_API void concalc_marked_dynkin_free(concalc_marked_dynkin* m);

/* Row-major rank x rank Cartan matrix. */
CONCALC_API concalc_status concalc_cartan_matrix(const char* type, int* out,
                                                 size_t capacity, size_t* rank);
/* Marks of type that occur for flopping curves (possibly none). */
CONCALC_API concalc_status concalc_realizable_marks(const char* type, size_t* marks,
                                                    size_t capacity, size_t* written);

/* ------------------------------------------------------------------------ */
/* Gopakumar-Vafa invariants                                                */
/* ------------------------------------------------------------------------ */

/* n[0] = n_1, ..., n[length-1] = n_l. */
CONCALC_API concalc_status concalc_widths_from_gv(const uint64_t* n, size_t length,
                                                  uint64_t* wid, uint64_t* cwid);

typedef struct concalc_gv_list concalc_gv_list;

CONCALC_API concalc_status concalc_gv_from_widths(uint64_t wid, uint64_t cwid,
                                                  size_t length, concalc_gv_list** out);
CONCALC_API size_t concalc_gv_list_size(const concalc_gv_list* l);
CONCALC_API size_t concalc_gv_list_length(const concalc_gv_list* l);
/* j is 1-based: entry(l, k, 1) is n_1 of the k-th profile. */
CONCALC_API uint64_t concalc_gv_list_entry(const concalc_gv_list* l, size_t profile, size_t j);
CONCALC_API void concalc_gv_list_free(concalc_gv_list* l);

/* *ok = 0 when wid is below the bound for the type; *bound = 0 if none. */
CONCALC_API concalc_status concalc_width_bound_check(const concalc_marked_dynkin* m,
                                                     uint64_t wid, int* ok,
                                                     uint64_t* bound);

typedef enum concalc_path_mode {
  CONCALC_PATH_AT_ORIGIN = 0,
  CONCALC_PATH_TOTAL = 1
} concalc_path_mode;

typedef struct concalc_path_result concalc_path_result;

/* coords: one polynomial in t per simple root, separated by ';'. */
CONCALC_API concalc_status concalc_path_gv(const concalc_marked_dynkin* m, const char* coords,
                                           concalc_path_mode mode,
                                           concalc_path_result** out);
CONCALC_API size_t concalc_path_result_length(const concalc_path_result* r);
CONCALC_API uint64_t concalc_path_result_entry(const concalc_path_result* r, size_t j);
CONCALC_API uint64_t concalc_path_result_singular_incidence(const concalc_path_result* r);
CONCALC_API size_t concalc_path_result_singular_identically_zero(const concalc_path_result* r);
CONCALC_API void concalc_path_result_free(concalc_path_result* r);

/* ------------------------------------------------------------------------ */
/* Catalogue                                                                */
/* ------------------------------------------------------------------------ */

typedef struct concalc_catalog_info {
  const char* key;
  const char* name;
  int has_wid;
  uint64_t wid;
  int has_cwid;
  uint64_t cwid;
  const char* dynkin_type; /* NULL when unknown */
  size_t mark;
  size_t gv_length;        /* 0 when unknown */
  const uint64_t* gv;
} concalc_catalog_info;

CONCALC_API size_t concalc_catalog_size(void);
/* Pointers in info refer to static storage. */
CONCALC_API concalc_status concalc_catalog_entry(size_t i, concalc_catalog_info* info);

typedef struct concalc_verification concalc_verification;

CONCALC_API concalc_status concalc_catalog_verify(size_t i,
                                                  const concalc_completion_config* cfg,
                                                  concalc_verification** out);
CONCALC_API int concalc_verification_passed(const concalc_verification* v);
/* Borrowed views of the dimension reports for A and its abelianization. */
CONCALC_API const concalc_dimension* concalc_verification_wid(const concalc_verification* v);
CONCALC_API const concalc_dimension* concalc_verification_cwid(const concalc_verification* v);
/* -1 when undecided, else 0 / 1. */
CONCALC_API int concalc_verification_commutative(const concalc_verification* v);
CONCALC_API size_t concalc_verification_length(const concalc_verification* v);
/* Profiles solving Toda's formula for the computed widths. */
CONCALC_API const concalc_gv_list* concalc_verification_gv(const concalc_verification* v);
CONCALC_API int concalc_verification_bound_ok(const concalc_verification* v);
CONCALC_API size_t concalc_verification_mismatch_count(const concalc_verification* v);
CONCALC_API const char* concalc_verification_mismatch(const concalc_verification* v,
                                                      size_t i);
CONCALC_API void concalc_verification_free(concalc_verification* v);

#ifdef __cplusplus
}
#endif

#endif /* CONCALC_CONCALC_H */
