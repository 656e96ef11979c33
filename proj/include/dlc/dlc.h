/*
 *   Copyright 2026 The dlc Authors
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

#ifndef DLC_DLC_H
#define DLC_DLC_H

/*
 * C interface to the dlc library. All objects are opaque and owned by the
 * caller once returned; free them with the matching *_free function.
 * Functions return DLC_OK or an error status; on error the session keeps a
 * human-readable message retrievable with dlc_session_last_error().
 * Strings passed in are UTF-8 and NUL-terminated; they are copied.
 */

#include <stddef.h>
#include <stdint.h>

#if defined( _WIN32 )
#define DLC_API __declspec( dllexport )
#else
#define DLC_API __attribute__( ( visibility( "default" ) ) )
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 1..22 mirror the library's error codes in declaration order. */
typedef enum dlc_status {
	DLC_OK = 0,
	DLC_E_FLAG_VIOLATION = 1,
	DLC_E_ARITY_MISMATCH,
	DLC_E_TYPE_MISMATCH,
	DLC_E_INDEX_OUT_OF_RANGE,
	DLC_E_PARSE,
	DLC_E_VALIDATION,
	DLC_E_CARRIER,
	DLC_E_DOMAIN,
	DLC_E_DIVISION_BY_ZERO,
	DLC_E_UNDEFINED_CONNECTIVE,
	DLC_E_UNRESOLVED_FUNCTION,
	DLC_E_RANGE,
	DLC_E_SCHEMA,
	DLC_E_ARITY,
	DLC_E_UNDECLARED_IDENTIFIER,
	DLC_E_DUPLICATE_DECLARATION,
	DLC_E_REJECTED_LOGIC,
	DLC_E_RULE_NOT_IN_CALCULUS,
	DLC_E_SCHEMA_MISMATCH,
	DLC_E_PREMISE_ARITY_MISMATCH,
	DLC_E_IO,
	DLC_E_USAGE,
	DLC_E_NULL_ARGUMENT = 100,
	DLC_E_INTERNAL = 101
} dlc_status;

/* Configuration, loaded networks and input bindings, plus the last error. */
typedef struct dlc_session dlc_session;
/* A JSON report ("dlc-report/1") with a pass/fail verdict. */
typedef struct dlc_report dlc_report;

DLC_API const char *dlc_version( void );
DLC_API const char *dlc_status_name( dlc_status status );

DLC_API dlc_status dlc_session_new( dlc_session **out );
DLC_API void dlc_session_free( dlc_session *session );
/* Message of the last failed call on this session, "" if none. Valid until the next call. */
DLC_API const char *dlc_session_last_error( const dlc_session *session );

/* name: goedel|lukasiewicz|yager|product|dl2|stl|stl-inf; r and nu must be > 0. */
DLC_API dlc_status dlc_session_set_logic( dlc_session *session, const char *name, double r, double nu );
/* "f64", "xreal", or "" for the logic's default. */
DLC_API dlc_status dlc_session_set_carrier( dlc_session *session, const char *carrier );
DLC_API dlc_status dlc_session_set_tolerance( dlc_session *session, double tol );
DLC_API dlc_status dlc_session_set_seed( dlc_session *session, uint64_t seed );
DLC_API dlc_status dlc_session_set_samples( dlc_session *session, size_t samples );

/* Registers a "dlc-net/1" network under `name` (NULL: the name stored in the file). */
DLC_API dlc_status dlc_session_load_network( dlc_session *session, const char *path, const char *name );
/* Adds bindings from a CSV ("name,v1,...") or JSON object file; later bindings win. */
DLC_API dlc_status dlc_session_load_bindings( dlc_session *session, const char *path );
DLC_API dlc_status dlc_session_bind( dlc_session *session, const char *name, const double *values, size_t n );

/* ⟦goal⟧ of `spec_text` under the session's logic and carrier. */
DLC_API dlc_status dlc_evaluate( dlc_session *session, const char *spec_text, double *out );

/* Subcommands. Each stores a report in *out on success. */
DLC_API dlc_status dlc_cmd_compile( dlc_session *session, const char *spec_text, dlc_report **out );
/* wrt may be NULL or "" for value only. */
DLC_API dlc_status dlc_cmd_eval( dlc_session *session, const char *spec_text, const char *wrt, dlc_report **out );
DLC_API dlc_status dlc_cmd_train_demo( dlc_session *session, const char *spec_text, size_t steps, double learning_rate,
	dlc_report **out );
/* all_logics != 0 runs every law-matrix row instead of the session's logic. */
DLC_API dlc_status dlc_cmd_laws( dlc_session *session, int all_logics, dlc_report **out );
DLC_API dlc_status dlc_cmd_shadow( dlc_session *session, size_t max_n, dlc_report **out );
DLC_API dlc_status dlc_cmd_converge( dlc_session *session, size_t count, dlc_report **out );
/* The session's logic selects the calculus. */
DLC_API dlc_status dlc_cmd_proof_check( dlc_session *session, const char *proof_json, dlc_report **out );
DLC_API dlc_status dlc_cmd_proof_search( dlc_session *session, const char *goal, size_t depth, dlc_report **out );
/* save_dir may be NULL. */
DLC_API dlc_status dlc_cmd_weakcomp( dlc_session *session, size_t depth, const char *save_dir, dlc_report **out );
DLC_API dlc_status dlc_cmd_fuzz_soundness( dlc_session *session, size_t trials, size_t depth, size_t rule_instances,
	dlc_report **out );

/* 1 on pass, 0 on verdict failure. */
DLC_API int dlc_report_passed( const dlc_report *report );
/* Pretty-printed JSON, owned by the report. */
DLC_API const char *dlc_report_json( const dlc_report *report );
DLC_API void dlc_report_free( dlc_report *report );

#ifdef __cplusplus
}
#endif

#endif
