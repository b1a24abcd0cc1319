/* Copyright 2026 The Centralizer Lab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the centralizer library.
 *
 * A session fixes the ground field and report options. Every command returns
 * a cl_status; on CL_PASS and CL_FAIL it stores a JSON report in *report_json
 * and a short human-readable summary in *summary (either pointer may be
 * NULL). Returned strings are owned by the caller and released with
 * cl_string_free. On CL_PRECONDITION and CL_ERROR no strings are produced and
 * cl_last_error describes the problem.
 */

#ifndef CENTRALIZER_CENTRALIZER_H_
#define CENTRALIZER_CENTRALIZER_H_

#include <stdint.h>

#if defined(_WIN32)
#define CL_API __declspec(dllexport)
#else
#define CL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cl_session cl_session;

typedef enum cl_status {
  CL_PASS = 0,         /* every asserted check holds */
  CL_FAIL = 1,         /* a check failed; the report says which */
  CL_PRECONDITION = 2, /* input rejected before computing */
  CL_ERROR = 3         /* internal error */
} cl_status;

CL_API const char* cl_version(void);

/* field: "Q", "F7", "GF(7)" or "7". Returns NULL on a bad field; the reason is
 * then available from cl_last_error(NULL). */
CL_API cl_session* cl_session_new(const char* field);
CL_API void cl_session_free(cl_session* s);
CL_API const char* cl_last_error(const cl_session* s);
CL_API void cl_session_set_timings(cl_session* s, int enabled);
CL_API void cl_session_set_seed(cl_session* s, uint64_t seed);

CL_API void cl_string_free(char* str);

/* Brauer algebra with parameter -2m. Diagrams use the text form
 * "[(1,2),(1',2')]". */
CL_API cl_status cl_brauer_mul(cl_session* s, const char* a, const char* b, int m,
                               char** report_json, char** summary);
CL_API cl_status cl_brauer_ideal_dim(cl_session* s, int n, int f, int m, char** report_json,
                                     char** summary);

/* Symplectic tensor space V^n with dim V = 2m. */
CL_API cl_status cl_spsw_schur(cl_session* s, int m, int n, char** report_json, char** summary);
CL_API cl_status cl_spsw_harmonic(cl_session* s, int m, int n, int f, char** report_json,
                                  char** summary);
CL_API cl_status cl_spsw_quotient_duality(cl_session* s, int m, int n, int f, char** report_json,
                                          char** summary);
/* p = 0 skips the dot-action separation search. */
CL_API cl_status cl_spsw_weights(cl_session* s, int m, int n, int f, long p, char** report_json,
                                 char** summary);

/* Double centralizer of a module given as JSON files; module_path NULL uses
 * the regular module. The field comes from the algebra file. */
CL_API cl_status cl_dcp_file(cl_session* s, const char* algebra_path, const char* module_path,
                             char** report_json, char** summary);
/* Built-in corpus; name NULL or "" runs every entry. */
CL_API cl_status cl_corpus_check(cl_session* s, const char* name, char** report_json,
                                 char** summary);

#ifdef __cplusplus
}
#endif

#endif /* CENTRALIZER_CENTRALIZER_H_ */
