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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <dlc/errors.hpp>
#include <dlc/eval.hpp>
#include <dlc/network.hpp>

using namespace dlc;

namespace {

const std::filesystem::path kFixtures = DLC_TEST_FIXTURES;

std::string slurp( const std::filesystem::path &p ) {
	std::ifstream in( p );
	REQUIRE( in.good() );
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

Env identity_env() {
	Env env;
	register_network( env, load_network( ( kFixtures / "networks/identity2.json" ).string() ) );
	return env;
}

Bindings rob_inputs() { return load_bindings( ( kFixtures / "inputs/robustness.csv" ).string() ); }

CompiledSpec rob( const Logic &l ) { return compile_spec( slurp( kFixtures / "specs/robustness.dlc" ), l, identity_env() ); }

// Independent reading of the robustness goal under DL2 with N = id:
// premise P = -max(|x - v|_inf - eps, 0), conclusion C = -max(|x - v|_inf - delta, 0),
// and the implication is -max(P - C, 0).
double dl2_reference( const std::vector< double > &x, const std::vector< double > &v, double eps, double delta ) {
	double d = 0.0;
	for( std::size_t i = 0; i < x.size(); ++i ) d = std::max( d, std::fabs( x[ i ] - v[ i ] ) );
	const double p = -std::max( d - eps, 0.0 ), c = -std::max( d - delta, 0.0 );
	return -std::max( p - c, 0.0 );
}

ErrorCode code_of( auto &&fn ) {
	try {
		fn();
	} catch( const Error &e ) {
		return e.code();
	}
	FAIL( "expected an Error" );
	return ErrorCode::Usage;
}

} // namespace

TEST_CASE( "DL2 robustness loss and gradient at the fixture point" ) {
	const CompiledSpec s = rob( Logic::dl2() );
	const Bindings in = rob_inputs();
	CHECK( evaluate( s, in ) == doctest::Approx( dl2_reference( in.at( "x" ), in.at( "v" ), 0.2, 0.05 ) ) );
	CHECK( evaluate( s, in ) == doctest::Approx( -0.05 ) );
	RunConfig cfg;
	const EvalReport r = eval_loss( cfg, s, in, "x" );
	REQUIRE( r.gradient.size() == 2 );
	CHECK( r.gradient[ 0 ].dual == doctest::Approx( -1.0 ) );
	CHECK( r.gradient[ 1 ].dual == doctest::Approx( 0.0 ) );
	CHECK( r.gradient_ok );
}

TEST_CASE( "property: DL2 loss matches the reference formula at random points" ) {
	const CompiledSpec s = rob( Logic::dl2() );
	Bindings in = rob_inputs();
	std::mt19937_64 rng( 21 );
	std::uniform_real_distribution< double > u( -0.5, 0.5 );
	for( int k = 0; k < 200; ++k ) {
		in[ "x" ] = { u( rng ), u( rng ) };
		CHECK( evaluate( s, in ) == doctest::Approx( dl2_reference( in.at( "x" ), in.at( "v" ), 0.2, 0.05 ) ) );
	}
}

TEST_CASE( "STL-inf robustness on the extended reals" ) {
	const CompiledSpec s = rob( Logic::stl_infty() );
	Bindings in = rob_inputs();
	// Premise margin 0.2 - 0.1 exceeds conclusion margin 0.05 - 0.1, so the conclusion is returned.
	CHECK( evaluate( s, in, "xreal" ) == doctest::Approx( -0.05 ).epsilon( 1e-12 ) );
	in[ "x" ] = in.at( "v" );
	CHECK( evaluate( s, in, "xreal" ) == doctest::Approx( 0.05 ).epsilon( 1e-12 ) );
	in[ "x" ] = { 0.0, 0.0 };
	in[ "eps" ] = { 0.01 };
	CHECK( std::isinf( evaluate( s, in, "xreal" ) ) );
	CHECK( evaluate( s, in, "xreal" ) > 0 );
}

TEST_CASE( "compiling the robustness goal under STL is a FlagViolation" ) {
	CHECK( code_of( [] { rob( Logic::stl( 1.0 ) ); } ) == ErrorCode::FlagViolation );
	CHECK( code_of( [] { compile_spec( slurp( kFixtures / "specs/robustness.dlc" ), Logic::dl2(), Env {} ); } )
		== ErrorCode::UnresolvedFunction );
}

TEST_CASE( "unbound inputs are a ValidationError" ) {
	Bindings in = rob_inputs();
	in.erase( "delta" );
	CHECK( code_of( [ & ] { evaluate( rob( Logic::dl2() ), in ); } ) == ErrorCode::ValidationError );
}

TEST_CASE( "evaluation is deterministic" ) {
	const CompiledSpec s = rob( Logic::dl2() );
	const Bindings in = rob_inputs();
	CHECK( evaluate( s, in ) == evaluate( s, in ) );
	RunConfig cfg;
	CHECK( eval_loss( cfg, s, in, "x" ).to_json() == eval_loss( cfg, s, in, "x" ).to_json() );
}

TEST_CASE( "dual gradient agrees with central differences at smooth points" ) {
	RunConfig cfg;
	const GradientAgreement g = gradient_agreement( cfg, rob( Logic::dl2() ), rob_inputs(), "x", 50, 0.5, 3 );
	CHECK( g.points == 50 );
	CHECK( g.ok );
	CHECK( g.max_rel_err <= 1e-4 );
}

TEST_CASE( "adversarial training demo" ) {
	RunConfig cfg;
	const CompiledSpec s = rob( Logic::dl2() );
	const TrainTrace t = train_demo( cfg, s, rob_inputs(), 15, 0.05 );
	CHECK( t.steps.size() == 16 );
	CHECK( t.non_decreasing( 11, 1e-12 ) );
	CHECK( t.steps.back().violation >= t.steps.front().violation );
	for( const auto &st : t.steps ) {
		for( double xi : st.x ) CHECK( std::fabs( xi ) <= 0.2 + 1e-12 );
	}

	const TrainTrace still = train_demo( cfg, s, rob_inputs(), 5, 0.0 );
	for( const auto &st : still.steps ) CHECK( st.violation == still.steps.front().violation );

	cfg.logic = "goedel";
	CHECK( code_of( [ & ] { train_demo( cfg, rob( Logic::godel() ), rob_inputs(), 5, 0.05 ); } )
		== ErrorCode::RejectedLogic );
}
