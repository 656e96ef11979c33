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

// dlc: command-line front end over the C API.
//
// Exit codes: 0 when the report passes, 1 when it records a failed verdict,
// 2 for usage, I/O and every other error (message on stderr).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dlc/dlc.h>

namespace {

constexpr int kPass = 0;
constexpr int kVerdictFailure = 1;
constexpr int kError = 2;

struct Options {
	std::string logic = "dl2";
	std::string calculus;   // proof commands; falls back to logic
	double r = 2.0;
	double nu = 1.0;
	std::string carrier;
	std::size_t samples = 1000;
	std::uint64_t seed = 7;
	double tol = 1e-9;
	std::string out;

	std::string spec_path;
	std::vector< std::string > networks;   // NAME=PATH or PATH
	std::vector< std::string > inputs;
	std::string wrt;
	std::size_t steps = 15;
	double lr = 0.05;
	std::size_t max_n = 8;
	std::size_t count = 20;
	std::string proof_path;
	std::string goal;
	std::size_t depth = 12;
	std::string save_proofs;
	std::size_t fuzz_depth = 6;
	std::size_t trials = 10000;
	std::size_t rule_instances = 1000;
};

/** Thrown to leave main with an error exit after printing `message`. */
struct Failure {
	std::string message;
};

using Session = std::unique_ptr< dlc_session, decltype( &dlc_session_free ) >;
using Report = std::unique_ptr< dlc_report, decltype( &dlc_report_free ) >;

void check( dlc_session *s, dlc_status st ) {
	if( st != DLC_OK ) {
		const std::string msg = dlc_session_last_error( s );
		throw Failure { msg.empty() ? dlc_status_name( st ) : msg };
	}
}

std::string read_file( const std::string &path ) {
	std::ifstream in( path, std::ios::binary );
	if( !in ) throw Failure { std::string( "IoError: cannot read " ) + path };
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

Session open_session( const Options &o, bool set_logic = true ) {
	dlc_session *raw = nullptr;
	if( dlc_session_new( &raw ) != DLC_OK ) throw Failure { "cannot allocate a session" };
	Session s( raw, &dlc_session_free );
	if( set_logic ) check( s.get(), dlc_session_set_logic( s.get(), o.logic.c_str(), o.r, o.nu ) );
	check( s.get(), dlc_session_set_carrier( s.get(), o.carrier.c_str() ) );
	check( s.get(), dlc_session_set_tolerance( s.get(), o.tol ) );
	check( s.get(), dlc_session_set_seed( s.get(), o.seed ) );
	check( s.get(), dlc_session_set_samples( s.get(), o.samples ) );
	for( const auto &n : o.networks ) {
		const auto eq = n.find( '=' );
		if( eq == std::string::npos ) {
			check( s.get(), dlc_session_load_network( s.get(), n.c_str(), nullptr ) );
		} else {
			const std::string name = n.substr( 0, eq ), path = n.substr( eq + 1 );
			check( s.get(), dlc_session_load_network( s.get(), path.c_str(), name.c_str() ) );
		}
	}
	for( const auto &p : o.inputs ) check( s.get(), dlc_session_load_bindings( s.get(), p.c_str() ) );
	return s;
}

/** Proof commands take --calculus, defaulting to --logic. */
Session open_calculus_session( Options o ) {
	if( !o.calculus.empty() ) o.logic = o.calculus;
	return open_session( o );
}

/** `slot` is read only after `st` has been computed, i.e. after the command filled it. */
int finish( dlc_session *s, dlc_status st, dlc_report *const *slot, const Options &o ) {
	check( s, st );
	Report r( *slot, &dlc_report_free );
	const std::string text = std::string( dlc_report_json( r.get() ) ) + "\n";
	if( o.out.empty() ) {
		std::cout << text;
	} else {
		std::ofstream f( o.out, std::ios::binary );
		if( !f || !( f << text ) ) throw Failure { "IoError: cannot write " + o.out };
	}
	return dlc_report_passed( r.get() ) ? kPass : kVerdictFailure;
}

void add_common( CLI::App &app, Options &o ) {
	app.add_option( "--logic", o.logic, "goedel|lukasiewicz|yager|product|dl2|stl|stl-inf" )->capture_default_str();
	app.add_option( "--r", o.r, "Yager exponent (> 0)" )->capture_default_str();
	app.add_option( "--nu", o.nu, "STL sharpness (> 0)" )->capture_default_str();
	app.add_option( "--carrier", o.carrier, "f64|xreal (default: xreal for stl-inf, f64 otherwise)" );
	app.add_option( "--samples", o.samples, "samples per law check" )->capture_default_str();
	app.add_option( "--seed", o.seed, "random seed" )->capture_default_str();
	app.add_option( "--tol", o.tol, "comparison tolerance" )->capture_default_str();
	app.add_option( "--out", o.out, "write the JSON report here instead of stdout" );
}

void add_spec_inputs( CLI::App &cmd, Options &o, bool with_inputs ) {
	cmd.add_option( "spec", o.spec_path, "spec file" )->required();
	cmd.add_option( "--network", o.networks, "network file, optionally NAME=PATH; repeatable" );
	if( with_inputs ) cmd.add_option( "--inputs", o.inputs, "bindings file (.csv or .json); repeatable" );
}

} // namespace

int main( int argc, char **argv ) {
	Options o;
	CLI::App app { "dlc: differentiable logics toolkit" };
	app.require_subcommand( 1 );
	app.fallthrough();
	add_common( app, o );

	auto *compile = app.add_subcommand( "compile", "elaborate a spec and print the core expression" );
	add_spec_inputs( *compile, o, false );

	auto *eval = app.add_subcommand( "eval", "value of a spec's goal and its gradient" );
	add_spec_inputs( *eval, o, true );
	eval->add_option( "--wrt", o.wrt, "input vector to differentiate against" );

	auto *train = app.add_subcommand( "train-demo", "adversarial ascent inside the premise box" );
	add_spec_inputs( *train, o, true );
	train->add_option( "--steps", o.steps )->capture_default_str();
	train->add_option( "--lr", o.lr, "learning rate" )->capture_default_str();

	auto *laws = app.add_subcommand( "laws", "algebraic law matrix (--logic all for every row)" );

	auto *shadow = app.add_subcommand( "shadow", "shadow-lifting of the logic's conjunction" );
	shadow->add_option( "--max-n", o.max_n, "largest arity" )->capture_default_str();

	auto *converge = app.add_subcommand( "converge", "limits: stl towards min, yager towards goedel" );
	converge->add_option( "--count", o.count, "random inputs" )->capture_default_str();

	auto *proof = app.add_subcommand( "proof", "hypersequent proofs" );
	proof->require_subcommand( 1 );
	auto *pcheck = proof->add_subcommand( "check", "check a dlc-proof/1 file" );
	pcheck->add_option( "--calculus", o.calculus, "calculus (default: --logic)" );
	pcheck->add_option( "file", o.proof_path )->required();
	auto *psearch = proof->add_subcommand( "search", "bounded proof search" );
	psearch->add_option( "--calculus", o.calculus, "calculus (default: --logic)" );
	psearch->add_option( "--depth", o.depth, "height budget" )->capture_default_str();
	psearch->add_option( "goal", o.goal, "hypersequent, e.g. \"0 <= 1 /\\ 0 <= 2 |- 0 <= 1\"" )->required();

	auto *weak = app.add_subcommand( "weakcomp", "weak completeness goals R1-R9" );
	weak->add_option( "--calculus", o.calculus, "calculus (default: --logic)" );
	weak->add_option( "--depth", o.depth, "height budget" )->capture_default_str();
	weak->add_option( "--save-proofs", o.save_proofs, "directory for the proofs found" );

	auto *fuzz = app.add_subcommand( "fuzz-soundness", "random derivations must have true conclusions" );
	fuzz->add_option( "--calculus", o.calculus, "calculus (default: --logic)" );
	fuzz->add_option( "--trials", o.trials )->capture_default_str();
	fuzz->add_option( "--depth", o.fuzz_depth, "maximum nesting of random rules" )->capture_default_str();
	fuzz->add_option( "--rule-instances", o.rule_instances, "local checks per rule, 0 to skip" )->capture_default_str();

	try {
		app.parse( argc, argv );
	} catch( const CLI::CallForHelp &e ) {
		return app.exit( e );
	} catch( const CLI::CallForAllHelp &e ) {
		return app.exit( e );
	} catch( const CLI::ParseError &e ) {
		app.exit( e );
		return kError;
	}

	try {
		dlc_report *r = nullptr;
		if( *compile ) {
			Session s = open_session( o );
			const std::string text = read_file( o.spec_path );
			return finish( s.get(), dlc_cmd_compile( s.get(), text.c_str(), &r ), &r, o );
		}
		if( *eval ) {
			Session s = open_session( o );
			const std::string text = read_file( o.spec_path );
			return finish( s.get(), dlc_cmd_eval( s.get(), text.c_str(), o.wrt.c_str(), &r ), &r, o );
		}
		if( *train ) {
			Session s = open_session( o );
			const std::string text = read_file( o.spec_path );
			return finish( s.get(), dlc_cmd_train_demo( s.get(), text.c_str(), o.steps, o.lr, &r ), &r, o );
		}
		if( *laws ) {
			const bool all = o.logic == "all";
			Session s = open_session( o, !all );
			return finish( s.get(), dlc_cmd_laws( s.get(), all ? 1 : 0, &r ), &r, o );
		}
		if( *shadow ) {
			Session s = open_session( o );
			return finish( s.get(), dlc_cmd_shadow( s.get(), o.max_n, &r ), &r, o );
		}
		if( *converge ) {
			Session s = open_session( o );
			return finish( s.get(), dlc_cmd_converge( s.get(), o.count, &r ), &r, o );
		}
		if( *pcheck ) {
			Session s = open_calculus_session( o );
			const std::string text = read_file( o.proof_path );
			return finish( s.get(), dlc_cmd_proof_check( s.get(), text.c_str(), &r ), &r, o );
		}
		if( *psearch ) {
			Session s = open_calculus_session( o );
			return finish( s.get(), dlc_cmd_proof_search( s.get(), o.goal.c_str(), o.depth, &r ), &r, o );
		}
		if( *weak ) {
			Session s = open_calculus_session( o );
			const char *dir = o.save_proofs.empty() ? nullptr : o.save_proofs.c_str();
			return finish( s.get(), dlc_cmd_weakcomp( s.get(), o.depth, dir, &r ), &r, o );
		}
		if( *fuzz ) {
			Session s = open_calculus_session( o );
			return finish( s.get(), dlc_cmd_fuzz_soundness( s.get(), o.trials, o.fuzz_depth, o.rule_instances, &r ), &r, o );
		}
	} catch( const Failure &f ) {
		std::cerr << "dlc: " << f.message << "\n";
		return kError;
	}
	return kError;
}
