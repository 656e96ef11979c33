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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <dlc/errors.hpp>
#include <dlc/eval.hpp>
#include <dlc/network.hpp>
#include <dlc/random_formula.hpp>
#include <dlc/spec.hpp>

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

Error error_of( auto &&fn ) {
	try {
		fn();
	} catch( const Error &e ) {
		return e;
	}
	FAIL( "expected an Error" );
	return Error( ErrorCode::Usage, "" );
}

} // namespace

TEST_CASE( "robustness spec parses into declarations and a goal" ) {
	const SpecDoc doc = parse_spec( slurp( kFixtures / "specs/robustness.dlc" ) );
	CHECK( doc.declarations.size() == 5 );
	REQUIRE( doc.find( "N" ) != nullptr );
	CHECK( doc.find( "N" )->kind == DeclKind::Network );
	CHECK( doc.find( "N" )->m == 2 );
	CHECK( doc.goal->kind == SurfaceKind::Impl );
}

TEST_CASE( "parse errors carry line and column" ) {
	const Error e = error_of( [] { parse_spec( "vector x : 2;\ngoal x[0] <= ;\n" ); } );
	CHECK( e.code() == ErrorCode::ParseError );
	CHECK( e.path().rfind( "2:", 0 ) == 0 );
}

TEST_CASE( "scope errors" ) {
	CHECK( error_of( [] { parse_spec( "goal y[0] <= 1;" ); } ).code() == ErrorCode::UndeclaredIdentifier );
	CHECK( error_of( [] { parse_spec( "scalar a;\nscalar a;\ngoal a <= 1;" ); } ).code()
		== ErrorCode::DuplicateDeclaration );
}

TEST_CASE( "elaboration rejects connectives the logic lacks" ) {
	const SpecDoc rob = parse_spec( slurp( kFixtures / "specs/robustness.dlc" ) );
	CHECK( error_of( [ & ] { elaborate( rob, Logic::stl( 1.0 ) ); } ).code() == ErrorCode::FlagViolation );
	CHECK_NOTHROW( elaborate( rob, Logic::stl_infty() ) );
	const SpecDoc mix = parse_spec( slurp( kFixtures / "specs/fuzzy_mix.dlc" ) );
	CHECK( error_of( [ & ] { elaborate( mix, Logic::dl2() ); } ).code() == ErrorCode::FlagViolation );
	CHECK_NOTHROW( elaborate( mix, Logic::lukasiewicz() ) );
}

TEST_CASE( "property: every corpus spec round-trips through the printer" ) {
	std::size_t seen = 0;
	for( const auto &entry : std::filesystem::directory_iterator( kFixtures / "specs" ) ) {
		if( entry.path().extension() != ".dlc" ) continue;
		CAPTURE( entry.path().filename().string() );
		const SpecDoc doc = parse_spec( slurp( entry.path() ) );
		const std::string printed = print_spec( doc );
		const SpecDoc back = parse_spec( printed );
		CHECK( spec_equal( doc, back ) );
		CHECK( print_spec( back ) == printed );
		++seen;
	}
	CHECK( seen >= 5 );
}

TEST_CASE( "property: surface text of random formulas parses back to the same tree" ) {
	for( const Logic &l : { Logic::godel(), Logic::dl2(), Logic::stl( 1.0 ), Logic::product() } ) {
		const auto opts = FormulaOptions::for_logic( l );
		for( std::uint64_t seed = 0; seed < 200; ++seed ) {
			const Expr e = random_formula( l.flag_profile(), 1 + seed % 4, seed, opts );
			const std::string text = to_surface( e );
			CAPTURE( text );
			CHECK( structurally_equal( parse_formula( text, l ), e ) );
		}
	}
}

TEST_CASE( "networks load, compose and check arity" ) {
	const NetworkDef id = load_network( ( kFixtures / "networks/identity2.json" ).string() );
	CHECK( id.forward< double >( { 0.3, -1.0 } ) == std::vector< double > { 0.3, -1.0 } );
	const NetworkDef aff = load_network( ( kFixtures / "networks/affine21.json" ).string() );
	CHECK( aff.output_dim() == 1 );
	CHECK( aff.forward< double >( { 2.0, 0.5 } )[ 0 ] == 1.5 );
	CHECK( error_of( [ & ] { aff.forward< double >( { 1.0 } ); } ).code() == ErrorCode::ArityError );
	CHECK( structurally_equal( ast::real_const( 0 ), ast::real_const( 0 ) ) );
	const NetworkDef back = network_from_json( network_to_json( aff ) );
	CHECK( back.forward< double >( { 2.0, 0.5 } ) == aff.forward< double >( { 2.0, 0.5 } ) );

	nlohmann::json bad = network_to_json( id );
	bad[ "layers" ].push_back( network_to_json( aff )[ "layers" ][ 0 ] );
	bad[ "layers" ][ 1 ][ "weights" ] = { { 1.0, 2.0, 3.0 } };
	CHECK( error_of( [ & ] { network_from_json( bad ); } ).code() == ErrorCode::ArityError );
	CHECK( error_of( [] { network_from_json( nlohmann::json { { "layers", 3 } } ); } ).code() == ErrorCode::SchemaError );
}

TEST_CASE( "CSV and JSON bindings" ) {
	const Bindings b = load_bindings( ( kFixtures / "inputs/robustness.csv" ).string() );
	CHECK( b.at( "x" ) == std::vector< double > { 0.1, 0.0 } );
	CHECK( b.at( "eps" ) == std::vector< double > { 0.2 } );
	CHECK( b.size() == 4 );
	const Bindings j = bindings_from_json( nlohmann::json::parse( R"({"x": [1, 2], "eps": 0.5})" ) );
	CHECK( j.at( "eps" ) == std::vector< double > { 0.5 } );
	CHECK( error_of( [] { parse_bindings_csv( "x,1,abc\n" ); } ).code() == ErrorCode::ParseError );
	CHECK( error_of( [] { bindings_from_json( nlohmann::json::array() ); } ).code() == ErrorCode::SchemaError );
}
