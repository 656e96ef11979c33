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

#include <dlc/ast.hpp>
#include <dlc/ast_json.hpp>
#include <dlc/errors.hpp>
#include <dlc/random_formula.hpp>

using namespace dlc;

namespace {

ErrorCode code_of( auto &&fn ) {
	try {
		fn();
	} catch( const Error &e ) {
		return e.code();
	}
	FAIL( "expected an Error" );
	return ErrorCode::Usage;
}

Expr atom( const ConnectiveFlags &f, double a = 0.0, double b = 1.0 ) {
	return ast::le( ast::real_const( a ), ast::real_const( b ), f );
}

} // namespace

TEST_CASE( "connectives missing from the profile fail at construction" ) {
	const auto dl2 = Logic::dl2().flag_profile();
	const auto stl = Logic::stl( 1.0 ).flag_profile();
	CHECK( code_of( [ & ] { ast::neg( atom( dl2 ) ); } ) == ErrorCode::FlagViolation );
	CHECK( code_of( [ & ] { ast::impl( atom( stl ), atom( stl ) ); } ) == ErrorCode::FlagViolation );
	CHECK( code_of( [ & ] { ast::mand( { atom( stl ), atom( stl ) } ); } ) == ErrorCode::FlagViolation );
	// Constants carry no flag; DL2's missing bottom is caught at interpretation.
	CHECK_NOTHROW( ast::bot( dl2 ) );
}

TEST_CASE( "operands must agree on their flag profile" ) {
	const auto g = Logic::godel().flag_profile();
	const auto d = Logic::dl2().flag_profile();
	CHECK_THROWS_AS( ast::conj( { atom( g ), atom( d ) } ), Error );
}

TEST_CASE( "typing errors" ) {
	CHECK( code_of( [] { ast::lookup( ast::vec_const( { 1.0, 2.0 } ), ast::index_const( 0, 3 ) ); } )
		== ErrorCode::ArityMismatch );
	CHECK( code_of( [] { ast::index_const( 3, 3 ); } ) == ErrorCode::IndexOutOfRange );
	CHECK( code_of( [] { ast::app( ast::fun_ref( "f", 2, 1 ), ast::vec_const( { 1.0, 2.0, 3.0 } ) ); } )
		== ErrorCode::ArityMismatch );
	CHECK( code_of( [] { ast::conj( {} ); } ) == ErrorCode::ArityMismatch );
}

TEST_CASE( "validate_for_logic reports the first offending node" ) {
	const auto g = Logic::godel().flag_profile();
	const Expr e = ast::conj( { atom( g ), ast::neg( atom( g ) ) } );
	CHECK_NOTHROW( validate_for_logic( e, Logic::lukasiewicz() ) );
	try {
		validate_for_logic( e, Logic::dl2() );
		FAIL( "expected FlagViolation" );
	} catch( const Error &err ) {
		CHECK( err.code() == ErrorCode::FlagViolation );
		CHECK( !err.path().empty() );
	}
}

TEST_CASE( "structural equality ignores sharing and sees payload" ) {
	const auto g = Logic::godel().flag_profile();
	CHECK( structurally_equal( atom( g, 1, 2 ), atom( g, 1, 2 ) ) );
	CHECK_FALSE( structurally_equal( atom( g, 1, 2 ), atom( g, 2, 1 ) ) );
	CHECK_FALSE( structurally_equal( atom( g ), ast::eq( ast::real_const( 0 ), ast::real_const( 1 ), g ) ) );
	CHECK( structural_hash( atom( g, 1, 2 ) ) == structural_hash( atom( g, 1, 2 ) ) );
}

TEST_CASE( "property: JSON round trip preserves every random formula" ) {
	for( const Logic &l : { Logic::godel(), Logic::dl2(), Logic::stl( 2.0 ), Logic::stl_infty() } ) {
		const auto profile = l.flag_profile();
		const auto opts = FormulaOptions::for_logic( l );
		for( std::uint64_t seed = 0; seed < 300; ++seed ) {
			const Expr e = random_formula( profile, 1 + seed % 4, seed, opts );
			const Expr back = expr_from_json( expr_to_json( e ) );
			REQUIRE( structurally_equal( e, back ) );
			CHECK( structural_hash( e ) == structural_hash( back ) );
			CHECK( structurally_equal( expr_from_text( expr_to_text( e ) ), e ) );
		}
	}
}

TEST_CASE( "ill-typed JSON is rejected on the way in" ) {
	auto j = expr_to_json( ast::neg( atom( Logic::godel().flag_profile() ) ) );
	j[ "tag" ][ "flags" ][ "neg" ] = false;
	CHECK( code_of( [ & ] { expr_from_json( j ); } ) == ErrorCode::ValidationError );
	CHECK( code_of( [] { expr_from_text( "{not json" ); } ) == ErrorCode::ParseError );
}
