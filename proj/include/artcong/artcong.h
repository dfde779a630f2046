// Copyright 2026 The artcong Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the artcong library. Every call returns an artcong_status;
 * on failure artcong_last_error() holds a message for the calling thread.
 * Strings returned through char** are JSON and must be released with
 * artcong_string_free. */
#ifndef ARTCONG_ARTCONG_H_
#define ARTCONG_ARTCONG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ARTCONG_API __declspec(dllexport)
#else
#define ARTCONG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum artcong_status {
  ARTCONG_OK = 0,
  ARTCONG_E_SYNTAX = 1,
  ARTCONG_E_INVALID_LABEL = 2,
  ARTCONG_E_DUPLICATE_PAIR = 3,
  ARTCONG_E_VERTEX_OUT_OF_RANGE = 4,
  ARTCONG_E_UNKNOWN_NAME = 5,
  ARTCONG_E_RANK_OUT_OF_RANGE = 6,
  ARTCONG_E_DIMENSION_MISMATCH = 7,
  ARTCONG_E_NON_UNIT_VALUE = 8,
  ARTCONG_E_NOT_UNIMODULAR = 9,
  ARTCONG_E_BAD_MODULUS = 10,
  ARTCONG_E_MODULUS_MISMATCH = 11,
  ARTCONG_E_NOT_SMALL = 12,
  ARTCONG_E_BAD_INDEX = 13,
  ARTCONG_E_INVERSE_IN_COXETER_MODE = 14,
  ARTCONG_E_CAP_EXCEEDED = 15,
  ARTCONG_E_NOT_SPHERICAL = 16,
  ARTCONG_E_NOT_CONNECTED = 17,
  ARTCONG_E_NOT_ADE = 18,
  ARTCONG_E_TABLE_INCONSISTENT = 19,
  ARTCONG_E_NOT_AFFINE_ADE = 20,
  ARTCONG_E_HYPOTHESIS_VIOLATED = 21,
  ARTCONG_E_BAD_LEVEL = 22,
  ARTCONG_E_UNKNOWN_TYPE = 23,
  ARTCONG_E_INVALID_ARGUMENT = 24,
  ARTCONG_E_OVERFLOW = 25,
  ARTCONG_E_IO = 26,
  ARTCONG_E_INTERNAL = 99
} artcong_status;

typedef enum artcong_rep_kind {
  ARTCONG_REP_TITS = 0,
  ARTCONG_REP_BURAU = 1,
  ARTCONG_REP_SIGMA_TILDE = 2
} artcong_rep_kind;

typedef enum artcong_group_kind {
  ARTCONG_ARTIN = 0,
  ARTCONG_COXETER = 1
} artcong_group_kind;

typedef struct artcong_graph artcong_graph;
typedef struct artcong_session artcong_session;

ARTCONG_API const char* artcong_version(void);
ARTCONG_API const char* artcong_last_error(void);
/* Error name such as "NotSmall"; "OK" for ARTCONG_OK. */
ARTCONG_API const char* artcong_status_name(artcong_status status);
ARTCONG_API void artcong_string_free(char* s);

/* Graphs. spec is a catalog name, "@path" (DSL or JSON file), raw DSL
 * text, or several of these joined with '+' for a disjoint union. */
ARTCONG_API artcong_status artcong_graph_load(const char* spec, artcong_graph** out);
ARTCONG_API void artcong_graph_free(artcong_graph* g);
ARTCONG_API artcong_status artcong_graph_rank(const artcong_graph* g, int* out);
ARTCONG_API artcong_status artcong_graph_json(const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_graph_dsl(const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_graph_classify(const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_graph_union(const artcong_graph* a, const artcong_graph* b,
                                               artcong_graph** out);

/* Sessions carry computation options and the image-order cache. */
ARTCONG_API artcong_status artcong_session_create(artcong_session** out);
ARTCONG_API void artcong_session_free(artcong_session* s);
ARTCONG_API artcong_status artcong_session_set_cap(artcong_session* s, uint64_t cap);
ARTCONG_API artcong_status artcong_session_set_threads(artcong_session* s, int threads);
ARTCONG_API artcong_status artcong_session_set_seed(artcong_session* s, uint64_t seed);
ARTCONG_API artcong_status artcong_session_set_samples(artcong_session* s, uint64_t samples);
ARTCONG_API artcong_status artcong_session_set_big(artcong_session* s, int big);
ARTCONG_API artcong_status artcong_session_set_timing(artcong_session* s, int timing);
/* path NULL or "" resolves ARTCONG_CACHE, then the default file. */
ARTCONG_API artcong_status artcong_session_set_cache(artcong_session* s, const char* path, int enabled);
/* JSON array of warnings collected so far (corrupt cache lines). */
ARTCONG_API artcong_status artcong_session_warnings(artcong_session* s, char** out);

/* Representations. numeric selects floating-point arithmetic (needed for
 * non-small graphs); mod > 0 reduces an integral image modulo mod. */
ARTCONG_API artcong_status artcong_rep_gram(const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_rep_generators(const artcong_graph* g, artcong_rep_kind kind,
                                                  int numeric, char** out);
ARTCONG_API artcong_status artcong_rep_eval(const artcong_graph* g, artcong_rep_kind kind, int numeric,
                                            const char* word, unsigned pow, uint64_t mod, char** out);
ARTCONG_API artcong_status artcong_rep_relations(const artcong_graph* g, artcong_rep_kind kind,
                                                 int numeric, char** out);
ARTCONG_API artcong_status artcong_rep_hecke(const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_rep_braid(int strands, int i, char** out);

/* Words and group enumeration. */
ARTCONG_API artcong_status artcong_word_parse(const artcong_graph* g, const char* word, int artin,
                                              unsigned pow, char** out);
ARTCONG_API artcong_status artcong_group_enumerate(artcong_session* s, const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_group_longest(const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_group_delta(const artcong_graph* g, char** out);

/* Congruence subgroups. */
ARTCONG_API artcong_status artcong_cong_member(const artcong_graph* g, artcong_group_kind kind,
                                               uint64_t level, const char* word, unsigned pow,
                                               char** out);
ARTCONG_API artcong_status artcong_cong_image_order(artcong_session* s, const artcong_graph* g,
                                                    artcong_group_kind kind, uint64_t level, char** out);
ARTCONG_API artcong_status artcong_cong_normal_closure(artcong_session* s, const artcong_graph* g,
                                                       uint64_t level, char** out);
ARTCONG_API artcong_status artcong_cong_level2(artcong_session* s, const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_cong_level4(artcong_session* s, const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_cong_commutator(const artcong_graph* g, int k, int l, char** out);
ARTCONG_API artcong_status artcong_cong_direct_sum(artcong_session* s, const artcong_graph* a,
                                                   const artcong_graph* b, uint64_t level, char** out);
ARTCONG_API artcong_status artcong_cong_divisors(const artcong_graph* g, const char* word, unsigned pow,
                                                 uint64_t level, char** out);
ARTCONG_API artcong_status artcong_cong_odd_quotient(artcong_session* s, const artcong_graph* g,
                                                     uint64_t k, char** out);
ARTCONG_API artcong_status artcong_cong_conjecture(artcong_session* s, const artcong_graph* g,
                                                   char** out);
ARTCONG_API artcong_status artcong_cong_center(const artcong_graph* g, char** out);

/* Root systems and affine groups. */
ARTCONG_API artcong_status artcong_roots_enumerate(const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_roots_s_theta(const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_roots_conjugator(const artcong_graph* g, int i, char** out);
ARTCONG_API artcong_status artcong_affine_translation(const artcong_graph* g, int i, char** out);
ARTCONG_API artcong_status artcong_affine_translations(const artcong_graph* g, char** out);
ARTCONG_API artcong_status artcong_affine_order(const artcong_graph* g, uint64_t level, char** out);
ARTCONG_API artcong_status artcong_affine_a1_level(uint64_t level, char** out);
ARTCONG_API artcong_status artcong_affine_central(const char* type, char** out);

/* Suites and cache. failed receives 1 when any check failed. */
ARTCONG_API artcong_status artcong_run_suite(artcong_session* s, const char* name, char** out, int* failed);
ARTCONG_API artcong_status artcong_suite_names(char** out);
ARTCONG_API artcong_status artcong_cache_list(artcong_session* s, char** out);
ARTCONG_API artcong_status artcong_cache_clear(artcong_session* s);

#ifdef __cplusplus
}
#endif

#endif  /* ARTCONG_ARTCONG_H_ */
