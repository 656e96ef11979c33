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

/* Exercises the shared library through its C header only. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include <dlc/dlc.h>

static int failures = 0;

#define EXPECT( cond )                                                          \
	do {                                                                        \
		if( !( cond ) ) {                                                       \
			fprintf( stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond ); \
			++failures;                                                         \
		}                                                                       \
	} while( 0 )

static const char *kSpec =
	"vector x : 2;\nvector v : 2;\nscalar eps;\nscalar delta;\nnetwork N : 2 -> 2;\n"
	"goal |sub(x, v)|_inf <= eps => |sub(N(x), N(v))|_inf <= delta;\n";

int main( void ) {
	dlc_session *s = NULL;
	dlc_report *r = NULL;
	double loss = 0.0;
	const double x[] = { 0.1, 0.0 }, v[] = { 0.0, 0.0 }, eps = 0.2, delta = 0.05;

	EXPECT( dlc_session_new( NULL ) == DLC_E_NULL_ARGUMENT );
	EXPECT( dlc_session_new( &s ) == DLC_OK );
	EXPECT( strlen( dlc_version() ) > 0 );
	EXPECT( strcmp( dlc_status_name( DLC_OK ), "Ok" ) == 0 );
	EXPECT( strcmp( dlc_status_name( DLC_E_FLAG_VIOLATION ), "FlagViolation" ) == 0 );

	EXPECT( dlc_session_set_logic( s, "nonsense", 2.0, 1.0 ) == DLC_E_USAGE );
	EXPECT( strlen( dlc_session_last_error( s ) ) > 0 );
	EXPECT( dlc_session_set_logic( s, "dl2", 2.0, 1.0 ) == DLC_OK );

	EXPECT( dlc_session_load_network( s, DLC_TEST_FIXTURES "/networks/identity2.json", NULL ) == DLC_OK );
	EXPECT( dlc_session_load_network( s, DLC_TEST_FIXTURES "/networks/missing.json", NULL ) == DLC_E_IO );
	EXPECT( dlc_session_bind( s, "x", x, 2 ) == DLC_OK );
	EXPECT( dlc_session_bind( s, "v", v, 2 ) == DLC_OK );
	EXPECT( dlc_session_bind( s, "eps", &eps, 1 ) == DLC_OK );
	EXPECT( dlc_session_bind( s, "delta", &delta, 1 ) == DLC_OK );

	EXPECT( dlc_evaluate( s, kSpec, &loss ) == DLC_OK );
	EXPECT( fabs( loss + 0.05 ) < 1e-12 );
	EXPECT( dlc_evaluate( s, kSpec, NULL ) == DLC_E_NULL_ARGUMENT );
	EXPECT( dlc_evaluate( s, "goal ;", &loss ) == DLC_E_PARSE );

	EXPECT( dlc_cmd_eval( s, kSpec, "x", &r ) == DLC_OK );
	EXPECT( r != NULL && dlc_report_passed( r ) == 1 );
	EXPECT( r != NULL && strstr( dlc_report_json( r ), "dlc-report/1" ) != NULL );
	dlc_report_free( r );
	r = NULL;

	/* STL has no implication, so the robustness goal does not compile. */
	EXPECT( dlc_session_set_logic( s, "stl", 2.0, 1.0 ) == DLC_OK );
	EXPECT( dlc_cmd_compile( s, kSpec, &r ) == DLC_E_FLAG_VIOLATION );
	EXPECT( r == NULL );

	EXPECT( dlc_session_set_logic( s, "goedel", 2.0, 1.0 ) == DLC_OK );
	EXPECT( dlc_cmd_proof_search( s, "|- 0 <= 1 => 0 <= 1", 6, &r ) == DLC_OK );
	EXPECT( r != NULL && dlc_report_passed( r ) == 1 );
	dlc_report_free( r );

	dlc_report_free( NULL );
	dlc_session_free( s );
	dlc_session_free( NULL );

	if( failures ) fprintf( stderr, "%d C API expectation(s) failed\n", failures );
	else printf( "C API: all expectations met\n" );
	return failures ? 1 : 0;
}
