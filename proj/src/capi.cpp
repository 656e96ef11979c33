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

#include <dlc/dlc.h>

#include <functional>
#include <new>
#include <string>

#include <dlc/commands.hpp>
#include <dlc/network.hpp>

struct dlc_session {
	dlc::RunConfig config;
	dlc::Env env;
	dlc::Bindings inputs;
	std::string last_error;
};

struct dlc_report {
	bool passed = false;
	std::string text;
};

namespace {

dlc_status to_status( dlc::ErrorCode code ) { return static_cast< dlc_status >( static_cast< int >( code ) + 1 ); }

/** Runs `body`, mapping exceptions to status codes and recording the message. */
template< class F >
dlc_status guarded( dlc_session *s, F body ) {
	if( !s ) return DLC_E_NULL_ARGUMENT;
	s->last_error.clear();
	try {
		body();
		return DLC_OK;
	} catch( const dlc::Error &e ) {
		s->last_error = e.what();
		return to_status( e.code() );
	} catch( const nlohmann::json::exception &e ) {
		s->last_error = std::string( "SchemaError: " ) + e.what();
		return DLC_E_SCHEMA;
	} catch( const std::bad_alloc & ) {
		s->last_error = "out of memory";
		return DLC_E_INTERNAL;
	} catch( const std::exception &e ) {
		s->last_error = e.what();
		return DLC_E_INTERNAL;
	}
}

dlc_status null_arg( dlc_session *s, const char *what ) {
	if( s ) s->last_error = std::string( "Usage: " ) + what + " must not be NULL";
	return DLC_E_NULL_ARGUMENT;
}

dlc_status emit( dlc_session *s, dlc_report **out, const std::function< nlohmann::json() > &make ) {
	if( !out ) return null_arg( s, "out" );
	*out = nullptr;
	return guarded( s, [ & ] {
		const nlohmann::json j = make();
		auto *r = new dlc_report;
		r->passed = j.value( "pass", false );
		r->text = j.dump( 2 );
		*out = r;
	} );
}

} // namespace

extern "C" {

const char *dlc_version( void ) { return "0.1.0"; }

const char *dlc_status_name( dlc_status status ) {
	switch( status ) {
	case DLC_OK: return "Ok";
	case DLC_E_NULL_ARGUMENT: return "NullArgument";
	case DLC_E_INTERNAL: return "Internal";
	default: break;
	}
	const int code = static_cast< int >( status ) - 1;
	if( code >= 0 && code <= static_cast< int >( dlc::ErrorCode::Usage ) ) {
		return dlc::error_code_name( static_cast< dlc::ErrorCode >( code ) );
	}
	return "Unknown";
}

dlc_status dlc_session_new( dlc_session **out ) {
	if( !out ) return DLC_E_NULL_ARGUMENT;
	*out = new( std::nothrow ) dlc_session;
	return *out ? DLC_OK : DLC_E_INTERNAL;
}

void dlc_session_free( dlc_session *session ) { delete session; }

const char *dlc_session_last_error( const dlc_session *session ) { return session ? session->last_error.c_str() : ""; }

dlc_status dlc_session_set_logic( dlc_session *s, const char *name, double r, double nu ) {
	if( !name ) return null_arg( s, "name" );
	return guarded( s, [ & ] {
		dlc::RunConfig c = s->config;
		c.logic = name;
		c.r = r;
		c.nu = nu;
		c.make_logic();
		s->config = c;
	} );
}

dlc_status dlc_session_set_carrier( dlc_session *s, const char *carrier ) {
	if( !carrier ) return null_arg( s, "carrier" );
	return guarded( s, [ & ] {
		const std::string c = carrier;
		if( !c.empty() && c != "f64" && c != "xreal" ) dlc::fail( dlc::ErrorCode::Usage, "unknown carrier '" + c + "'" );
		s->config.carrier = c;
	} );
}

dlc_status dlc_session_set_tolerance( dlc_session *s, double tol ) {
	return guarded( s, [ & ] {
		if( !( tol >= 0.0 ) ) dlc::fail( dlc::ErrorCode::Usage, "tolerance must be >= 0" );
		s->config.tol = tol;
	} );
}

dlc_status dlc_session_set_seed( dlc_session *s, uint64_t seed ) {
	return guarded( s, [ & ] { s->config.seed = seed; } );
}

dlc_status dlc_session_set_samples( dlc_session *s, size_t samples ) {
	return guarded( s, [ & ] {
		if( samples == 0 ) dlc::fail( dlc::ErrorCode::Usage, "samples must be positive" );
		s->config.samples = samples;
	} );
}

dlc_status dlc_session_load_network( dlc_session *s, const char *path, const char *name ) {
	if( !path ) return null_arg( s, "path" );
	return guarded( s, [ & ] {
		const dlc::NetworkDef net = dlc::load_network( path );
		dlc::register_network( s->env, net, name ? name : "" );
	} );
}

dlc_status dlc_session_load_bindings( dlc_session *s, const char *path ) {
	if( !path ) return null_arg( s, "path" );
	return guarded( s, [ & ] {
		for( auto &[ k, v ] : dlc::load_bindings( path ) ) s->inputs[ k ] = std::move( v );
	} );
}

dlc_status dlc_session_bind( dlc_session *s, const char *name, const double *values, size_t n ) {
	if( !name ) return null_arg( s, "name" );
	if( !values && n ) return null_arg( s, "values" );
	return guarded( s, [ & ] { s->inputs[ name ] = std::vector< double >( values, values + n ); } );
}

dlc_status dlc_evaluate( dlc_session *s, const char *spec_text, double *out ) {
	if( !spec_text ) return null_arg( s, "spec_text" );
	if( !out ) return null_arg( s, "out" );
	return guarded( s, [ & ] {
		const dlc::CompiledSpec spec = dlc::compile_spec( spec_text, s->config.make_logic(), s->env );
		*out = dlc::evaluate( spec, s->inputs, s->config.resolved_carrier() );
	} );
}

dlc_status dlc_cmd_compile( dlc_session *s, const char *spec_text, dlc_report **out ) {
	if( !spec_text ) return null_arg( s, "spec_text" );
	return emit( s, out, [ & ] { return dlc::cmd::compile( s->config, spec_text, s->env ); } );
}

dlc_status dlc_cmd_eval( dlc_session *s, const char *spec_text, const char *wrt, dlc_report **out ) {
	if( !spec_text ) return null_arg( s, "spec_text" );
	return emit( s, out, [ & ] { return dlc::cmd::eval( s->config, spec_text, s->env, s->inputs, wrt ? wrt : "" ); } );
}

dlc_status dlc_cmd_train_demo( dlc_session *s, const char *spec_text, size_t steps, double learning_rate,
	dlc_report **out ) {
	if( !spec_text ) return null_arg( s, "spec_text" );
	return emit( s, out,
		[ & ] { return dlc::cmd::train_demo( s->config, spec_text, s->env, s->inputs, steps, learning_rate ); } );
}

dlc_status dlc_cmd_laws( dlc_session *s, int all_logics, dlc_report **out ) {
	return emit( s, out, [ & ] { return dlc::cmd::laws( s->config, all_logics != 0 ); } );
}

dlc_status dlc_cmd_shadow( dlc_session *s, size_t max_n, dlc_report **out ) {
	return emit( s, out, [ & ] { return dlc::cmd::shadow( s->config, max_n ); } );
}

dlc_status dlc_cmd_converge( dlc_session *s, size_t count, dlc_report **out ) {
	return emit( s, out, [ & ] { return dlc::cmd::converge( s->config, count ); } );
}

dlc_status dlc_cmd_proof_check( dlc_session *s, const char *proof_json, dlc_report **out ) {
	if( !proof_json ) return null_arg( s, "proof_json" );
	return emit( s, out, [ & ] {
		nlohmann::json doc;
		try {
			doc = nlohmann::json::parse( proof_json );
		} catch( const nlohmann::json::parse_error &e ) {
			dlc::fail( dlc::ErrorCode::SchemaError, std::string( "invalid JSON: " ) + e.what() );
		}
		return dlc::cmd::proof_check( s->config, doc );
	} );
}

dlc_status dlc_cmd_proof_search( dlc_session *s, const char *goal, size_t depth, dlc_report **out ) {
	if( !goal ) return null_arg( s, "goal" );
	return emit( s, out, [ & ] { return dlc::cmd::proof_search( s->config, goal, depth ); } );
}

dlc_status dlc_cmd_weakcomp( dlc_session *s, size_t depth, const char *save_dir, dlc_report **out ) {
	return emit( s, out, [ & ] { return dlc::cmd::weakcomp( s->config, depth, save_dir ? save_dir : "" ); } );
}

dlc_status dlc_cmd_fuzz_soundness( dlc_session *s, size_t trials, size_t depth, size_t rule_instances,
	dlc_report **out ) {
	return emit( s, out, [ & ] { return dlc::cmd::fuzz_soundness( s->config, trials, depth, rule_instances ); } );
}

int dlc_report_passed( const dlc_report *report ) { return report && report->passed ? 1 : 0; }

const char *dlc_report_json( const dlc_report *report ) { return report ? report->text.c_str() : ""; }

void dlc_report_free( dlc_report *report ) { delete report; }

} // extern "C"
