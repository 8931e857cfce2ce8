/* Copyright 2026 The slowprov Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libslowprov.
 *
 * Conventions:
 *  - Every fallible call returns sp_status. On failure the calling thread's
 *    message is available from sp_last_error() until its next failing call.
 *  - Strings returned through char** are heap-allocated and owned by the
 *    caller; release them with sp_string_free().
 *  - Handles are opaque and owned by the caller; each has a _free function
 *    that accepts NULL.
 *  - Natural numbers cross the boundary as decimal strings.
 */

#ifndef SLOWPROV_SLOWPROV_H_
#define SLOWPROV_SLOWPROV_H_

#include <stddef.h>
#include <stdint.h>

#if defined(SLOWPROV_BUILDING)
#define SP_API __attribute__((visibility("default")))
#else
#define SP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
  SP_OK = 0,
  SP_ERR_PARSE = 1,
  SP_ERR_INVALID_ARG = 2,
  SP_ERR_DOMAIN = 3,
  SP_ERR_BUDGET = 4,
  SP_ERR_MODEL_INVALID = 5,
  SP_ERR_SEMANTICS = 6,
  SP_ERR_UNDECIDED = 7,
  SP_ERR_INTERNAL = 8
} sp_status;

SP_API const char* sp_last_error(void);
/* Byte offset of the last parse error, or -1. */
SP_API long sp_last_error_position(void);
SP_API const char* sp_status_name(sp_status s);
SP_API void sp_string_free(char* s);
SP_API const char* sp_version(void);

/* ---- ordinals ---------------------------------------------------------- */

typedef struct sp_ordinal sp_ordinal;

SP_API sp_status sp_ordinal_parse(const char* text, sp_ordinal** out);
SP_API void sp_ordinal_free(sp_ordinal* a);
SP_API sp_status sp_ordinal_render(const sp_ordinal* a, char** out);
/* *out is -1, 0 or 1. */
SP_API sp_status sp_ordinal_compare(const sp_ordinal* a, const sp_ordinal* b, int* out);
SP_API sp_status sp_ordinal_add(const sp_ordinal* a, const sp_ordinal* b, sp_ordinal** out);
SP_API sp_status sp_ordinal_mul(const sp_ordinal* a, const sp_ordinal* b, sp_ordinal** out);
/* lambda[n]; SP_ERR_DOMAIN unless lambda is a limit. */
SP_API sp_status sp_ordinal_fundseq(const sp_ordinal* lambda, const char* n, sp_ordinal** out);

typedef enum sp_stepdown_outcome {
  SP_STEPDOWN_REACHED = 0,
  SP_STEPDOWN_NOT_ON_PATH = 1,
  SP_STEPDOWN_BUDGET = 2
} sp_stepdown_outcome;

/* Walks the n-stepdown path from a towards target (0 if NULL). *steps is
 * the number of steps walked; *path is the comma-separated path. */
SP_API sp_status sp_ordinal_stepdown(const sp_ordinal* a, const char* n, const sp_ordinal* target,
                                     uint64_t max_steps, sp_stepdown_outcome* outcome,
                                     uint64_t* steps, char** path);

/* ---- fast-growing hierarchy -------------------------------------------- */

typedef struct sp_budget {
  uint64_t max_bit_length;
  uint64_t max_steps;
} sp_budget;

SP_API sp_budget sp_budget_desk(void);

typedef enum sp_fgh_kind {
  SP_FGH_VALUE = 0,
  SP_FGH_LE = 1,
  SP_FGH_GT = 2,
  SP_FGH_BUDGET = 3
} sp_fgh_kind;

typedef struct sp_fgh_result {
  sp_fgh_kind kind;
  char* value;       /* decimal; set for VALUE and LE, else NULL */
  uint64_t bit_length;
  uint64_t steps_used;
  uint64_t largest_bit_length; /* for BUDGET */
  int hit_bit_cap;             /* for BUDGET: 1 bit cap, 0 step cap */
} sp_fgh_result;

SP_API void sp_fgh_result_clear(sp_fgh_result* r);

/* Flags for sp_fgh_eval. SP_FGH_OMIT_VALUE leaves value NULL and reports
 * only bit_length, which avoids a slow decimal conversion of huge values. */
enum { SP_FGH_RAW = 1, SP_FGH_OMIT_VALUE = 2 };

SP_API sp_status sp_fgh_eval(const sp_ordinal* alpha, const char* n, const sp_budget* budget,
                             int flags, sp_fgh_result* out);
SP_API sp_status sp_fgh_eval_iter(const sp_ordinal* alpha, const char* i, const char* n,
                                  const sp_budget* budget, sp_fgh_result* out);
SP_API sp_status sp_fgh_compare_to(const sp_ordinal* alpha, const char* n, const char* threshold,
                                   const sp_budget* budget, sp_fgh_result* out);
SP_API sp_status sp_fgh_shifted(const char* z, const char* x, const sp_budget* budget,
                                sp_fgh_result* out);

/* Memoizing session for the slow functions l and r. */
typedef struct sp_slow sp_slow;

SP_API sp_status sp_slow_new(const sp_budget* budget, sp_slow** out);
SP_API void sp_slow_free(sp_slow* s);
/* SP_ERR_UNDECIDED if a membership test ran out of budget; *undecided_m
 * (if non-NULL) then receives the offending m. */
SP_API sp_status sp_slow_l(sp_slow* s, uint64_t n, uint64_t* out, uint64_t* undecided_m);
SP_API sp_status sp_slow_r(sp_slow* s, uint64_t n, sp_fgh_result* out);

/* ---- modal logic ------------------------------------------------------- */

typedef enum sp_system { SP_GL = 0, SP_GLT = 1, SP_GL2 = 2 } sp_system;

typedef struct sp_formula sp_formula;
typedef struct sp_model sp_model;
typedef struct sp_decision sp_decision;

SP_API sp_status sp_system_from_name(const char* name, sp_system* out);

SP_API sp_status sp_formula_parse(const char* text, sp_formula** out);
SP_API void sp_formula_free(sp_formula* f);
SP_API sp_status sp_formula_render(const sp_formula* f, char** out);

/* SP_ERR_MODEL_INVALID for structural or frame violations. */
SP_API sp_status sp_model_load_file(const char* path, sp_model** out);
SP_API sp_status sp_model_load_json(const char* text, sp_model** out);
SP_API void sp_model_free(sp_model* m);
SP_API sp_status sp_model_dump_json(const sp_model* m, char** out);
SP_API size_t sp_model_world_count(const sp_model* m);

/* *condition is 0 when the model is A-sound for f, else the first violated
 * condition (1..5); *message describes it. */
SP_API sp_status sp_model_validate(const sp_model* m, const sp_formula* f, int* condition,
                                   char** message);
/* SP_ERR_SEMANTICS when the model or formula does not fit the semantics. */
SP_API sp_status sp_model_eval(const sp_model* m, const char* world, const sp_formula* f,
                               sp_system semantics, int* out);

typedef struct sp_limits {
  size_t max_model_size;
  size_t max_proof_depth;
  uint64_t max_work;
} sp_limits;

SP_API sp_limits sp_limits_default(void);

typedef enum sp_verdict {
  SP_THEOREM = 0,
  SP_COUNTERMODEL = 1,
  SP_INCONCLUSIVE = 2
} sp_verdict;

SP_API sp_status sp_decide(sp_system system, const sp_formula* f, const sp_limits* limits,
                           sp_decision** out);
SP_API void sp_decision_free(sp_decision* d);
SP_API sp_verdict sp_decision_verdict(const sp_decision* d);
/* Proof in the proof file format, or the certificate text, for THEOREM. */
SP_API sp_status sp_decision_proof_json(const sp_decision* d, char** out);
SP_API sp_status sp_decision_certificate(const sp_decision* d, char** out);
/* Countermodel and the name of the falsifying world, for COUNTERMODEL. */
SP_API sp_status sp_decision_countermodel(const sp_decision* d, sp_model** model, char** world);
/* Bound and reason, for INCONCLUSIVE. */
SP_API sp_status sp_decision_inconclusive(const sp_decision* d, size_t* bound, char** reason);

/* *ok is 1 if the proof checks; otherwise *line is the 1-based failing
 * line (0 if the document itself is malformed) and *reason says why. */
SP_API sp_status sp_proof_check_json(const char* text, int* ok, size_t* line, char** reason);

/* ---- iterated provability ---------------------------------------------- */

typedef struct sp_iter sp_iter;

SP_API sp_status sp_iter_parse(const char* text, sp_iter** out);
SP_API void sp_iter_free(sp_iter* e);
SP_API sp_status sp_iter_render(const sp_iter* e, char** out);
/* strategy: 0 innermost first, 1 outermost first. */
SP_API sp_status sp_iter_normalize(const sp_iter* e, int box_absorbs_s1, int strategy,
                                   sp_iter** out);
/* *out is 1 for YES, 0 for UNKNOWN. */
SP_API sp_status sp_iter_entails(const sp_iter* a, const sp_iter* b, int box_absorbs_s1, int* out);

/* ---- reference oracles ------------------------------------------------- */

SP_API sp_status sp_oracle_F(const sp_ordinal* alpha, const char* n, char** out);
SP_API sp_status sp_oracle_count_frames(size_t size, uint64_t* out);
/* Number of A-sound extensions of all tree frames of the given size with
 * valuations over at most var_limit variables of f. */
SP_API sp_status sp_oracle_count_a_sound(size_t size, const sp_formula* f, size_t var_limit,
                                         uint64_t* out);
/* Random A-sound model for f with at most max_size worlds. */
SP_API sp_status sp_random_a_sound_model(const sp_formula* f, size_t max_size, uint64_t seed,
                                         sp_model** out);

#ifdef __cplusplus
}
#endif

#endif /* SLOWPROV_SLOWPROV_H_ */
