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

#include <cmath>
#include <random>

#include <dlc/errors.hpp>
#include <dlc/random_formula.hpp>
#include <dlc/semantics.hpp>

using namespace dlc;

namespace {

const Env kEnv;

Expr cmp( CmpOp op, double a, double b, const Logic &l ) {
	return ast::cmp( op, ast::real_const( a ), ast::real_const( b ), l.flag_profile() );
}

std::vector< Logic > fuzzy_logics() {
	return { Logic::godel(), Logic::lukasiewicz(), Logic::yager( 2.0 ), Logic::product() };
}

} // namespace

TEST_CASE( "fuzzy comparison golden: [[1 = 2]] = 2/3" ) {
	for( const Logic &l : fuzzy_logics() ) {
		CAPTURE( l.label() );
		CHECK( interpret_bool< double >( l, cmp( CmpOp::Eq, 1, 2, l ), kEnv ) == 2.0 / 3.0 );
	}
}

TEST_CASE( "fuzzy comparisons at the edges" ) {
	const Logic g = Logic::godel();
	// r1 = -r2 short-circuits to 1.
	CHECK( interpret_bool< double >( g, cmp( CmpOp::Eq, 2, -2, g ), kEnv ) == 1.0 );
	CHECK( interpret_bool< double >( g, cmp( CmpOp::Le, 1, 3, g ), kEnv ) == 1.0 );
	// q = (3 - 1) / 4 = 0.5 for 3 <= 1.
	CHECK( interpret_bool< double >( g, cmp( CmpOp::Le, 3, 1, g ), kEnv ) == doctest::Approx( 0.5 ) );
	CHECK( interpret_bool< double >( g, cmp( CmpOp::Eq, 3, 1, g ), kEnv ) == doctest::Approx( 0.5 ) );
}

TEST_CASE( "DL2 clauses" ) {
	const Logic d = Logic::dl2();
	CHECK( interpret_bool< double >( d, cmp( CmpOp::Le, 1, 2, d ), kEnv ) == 0.0 );
	CHECK( interpret_bool< double >( d, cmp( CmpOp::Le, 3, 1, d ), kEnv ) == -2.0 );
	CHECK( clause::mand2( d, -1.0, -2.0 ) == -3.0 );
	CHECK( clause::mor2( d, -1.0, -2.0 ) == -2.0 );
	CHECK( clause::impl( d, -1.0, -3.0 ) == -2.0 );
	CHECK( clause::impl( d, -3.0, -1.0 ) == 0.0 );
	CHECK( clause::top< double >( d ) == 0.0 );
	CHECK_THROWS_AS( clause::bot< double >( d ), Error );
	CHECK_THROWS_AS( clause::neg( d, -1.0 ), Error );
}

TEST_CASE( "negations" ) {
	CHECK( clause::neg( Logic::godel(), 0.0 ) == 1.0 );
	CHECK( clause::neg( Logic::godel(), 0.3 ) == 0.0 );
	CHECK( clause::neg( Logic::product(), 0.0 ) == 1.0 );
	CHECK( clause::neg( Logic::product(), 0.7 ) == 0.0 );
	CHECK( clause::neg( Logic::lukasiewicz(), 0.3 ) == doctest::Approx( 0.7 ) );
}

TEST_CASE( "STL-inf implication and constants live on the extended reals" ) {
	const Logic s = Logic::stl_infty();
	CHECK( clause::impl( s, XReal( 1.0 ), XReal( 2.0 ) ) == XReal::plus_inf() );
	CHECK( clause::impl( s, XReal( 3.0 ), XReal( 2.0 ) ) == XReal( 2.0 ) );
	CHECK( clause::top< XReal >( s ) == XReal::plus_inf() );
	CHECK( clause::bot< XReal >( s ) == XReal::minus_inf() );
	CHECK_THROWS_AS( clause::top< double >( s ), Error );
	const Expr t = ast::top( s.flag_profile() );
	CHECK( interpret_bool< XReal >( s, t, kEnv ) == XReal::plus_inf() );
}

TEST_CASE( "property: STL disjunction is the dual of conjunction" ) {
	std::mt19937_64 rng( 11 );
	std::uniform_real_distribution< double > u( -5.0, 5.0 );
	std::uniform_int_distribution< int > len( 1, 6 );
	for( int k = 0; k < 300; ++k ) {
		std::vector< double > v( static_cast< std::size_t >( len( rng ) ) ), neg_v;
		for( auto &x : v ) x = u( rng );
		for( double x : v ) neg_v.push_back( -x );
		const double nu = 0.5 + 3.0 * std::fabs( u( rng ) );
		CHECK( clause::stl_nary( NaryKind::Disj, nu, v ) == doctest::Approx( -clause::stl_nary( NaryKind::Conj, nu, neg_v ) ) );
	}
}

TEST_CASE( "property: fuzzy formulas evaluate into [0, 1] and deterministically" ) {
	for( const Logic &l : fuzzy_logics() ) {
		const auto opts = FormulaOptions::for_logic( l );
		for( std::uint64_t seed = 0; seed < 300; ++seed ) {
			const Expr e = random_formula( l.flag_profile(), 4, seed, opts );
			const double v = interpret_bool< double >( l, e, kEnv );
			CHECK( v >= 0.0 );
			CHECK( v <= 1.0 );
			CHECK( v == interpret_bool< double >( l, e, kEnv ) );
		}
	}
}

TEST_CASE( "property: DL2 values are never positive" ) {
	const Logic d = Logic::dl2();
	const auto opts = FormulaOptions::for_logic( d );
	for( std::uint64_t seed = 0; seed < 300; ++seed ) {
		CHECK( interpret_bool< double >( d, random_formula( d.flag_profile(), 4, seed, opts ), kEnv ) <= 0.0 );
	}
}

TEST_CASE( "interpreting a formula under the wrong logic is a FlagViolation" ) {
	const Expr e = ast::neg( cmp( CmpOp::Le, 0, 1, Logic::godel() ) );
	try {
		interpret_bool< double >( Logic::dl2(), e, kEnv );
		FAIL( "expected FlagViolation" );
	} catch( const Error &err ) {
		CHECK( err.code() == ErrorCode::FlagViolation );
	}
}

TEST_CASE( "environment built-ins" ) {
	Env env;
	const Expr v = ast::vec_const( { 0.5, -2.0, 1.0 } );
	const Expr n = ast::lookup( ast::app( ast::fun_ref( "norm_inf", 3, 1 ), v ), ast::index_const( 0, 1 ) );
	const auto r = interpret< double >( Logic::godel(), n, env );
	CHECK( r.scalar == 2.0 );
}
