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

#include <dlc/analysis.hpp>
#include <dlc/errors.hpp>

using namespace dlc;

TEST_CASE( "err_vec" ) {
	CHECK( err_vec( 3, 1 ) == std::vector< double > { 0.0, 1.0, 0.0 } );
	CHECK_THROWS_AS( err_vec( 3, 3 ), Error );
}

TEST_CASE( "partial derivative methods agree on a smooth field" ) {
	const auto f = ScalarField::make( "x0*x1^2", []( const auto &x ) { return x[ 0 ] * x[ 1 ] * x[ 1 ]; } );
	PartialSpec s { &f, { 1.5, 2.0 }, 1 };
	const double d = partial( s );
	CHECK( d == doctest::Approx( 6.0 ) );
	s.method = PartialMethod::CentralFd;
	CHECK( partial( s ) == doctest::Approx( 6.0 ).epsilon( 1e-8 ) );
	s.method = PartialMethod::OneSidedFd;
	s.h = 1e-5;
	CHECK( partial( s ) == doctest::Approx( 6.0 ).epsilon( 1e-4 ) );
}

TEST_CASE( "shadow-lifting: DL2 conjunction has unit partials" ) {
	const auto f = conjunction_field( Logic::dl2() );
	for( std::size_t n = 2; n <= 6; ++n ) {
		const auto r = shadow_lifting_check( f, n, { 0.5, 1.0, 2.0 }, 1e-9 );
		CHECK( r.holds );
		for( const auto &e : r.estimates ) CHECK( e.dual == doctest::Approx( 1.0 ) );
	}
}

TEST_CASE( "shadow-lifting: product conjunction partial is p^(n-1)" ) {
	const auto f = conjunction_field( Logic::product() );
	for( std::size_t n = 2; n <= 6; ++n ) {
		const auto r = shadow_lifting_check( f, n, { 0.25, 0.5, 0.75 }, 1e-9 );
		CHECK( r.holds );
		for( const auto &e : r.estimates ) {
			CHECK( e.dual == doctest::Approx( std::pow( e.p, static_cast< double >( n - 1 ) ) ) );
		}
	}
}

TEST_CASE( "shadow-lifting: Goedel min fails with a witness" ) {
	const auto r = shadow_lifting_check( conjunction_field( Logic::godel() ), 3, { 0.5 }, 1e-9 );
	CHECK_FALSE( r.holds );
	REQUIRE( r.witness.has_value() );
	CHECK_FALSE( r.witness->ok );
}

TEST_CASE( "shadow-lifting: STL conjunction holds and its p_min < 0 branch has partial 1/n on the diagonal" ) {
	const auto f = conjunction_field( Logic::stl( 1.0 ) );
	CHECK( shadow_lifting_check( f, 4, { 0.5, 1.0, 2.0 }, 1e-9 ).holds );
	for( std::size_t n = 2; n <= 8; ++n ) {
		for( double p : { 0.5, 1.0, 2.0 } ) {
			const auto b = stl_lt0_branch_derivative( n, p, 1.0 );
			CHECK( b.value == doctest::Approx( 1.0 / static_cast< double >( n ) ).epsilon( 1e-4 ) );
		}
	}
}

TEST_CASE( "non_increasing" ) {
	std::vector< ConvergencePoint > pts { { 1, 0.5 }, { 2, 0.3 }, { 3, 0.3 }, { 4, 0.31 } };
	CHECK_FALSE( non_increasing( pts, 0.0 ) );
	CHECK( non_increasing( pts, 0.02 ) );
	CHECK( non_increasing( pts, 0.0, 0 ) == false );
	pts.pop_back();
	CHECK( non_increasing( pts, 0.0 ) );
}

TEST_CASE( "STL conjunction tends to min as nu grows" ) {
	const auto r = convergence_stl_min( { 1.0, 2.0, -0.5 }, { 1, 3, 10, 30, 100 }, 1e-3 );
	CHECK( r.pass );
	REQUIRE( r.series.size() == 1 );
	CHECK( non_increasing( r.series[ 0 ].points, 0.0 ) );
}

TEST_CASE( "near-tied STL inputs converge too slowly for the schedule" ) {
	// Gap stays near 3e-3 at nu = 100 when two entries nearly tie for the minimum.
	const auto r = convergence_stl_min( { 1.271, 2.580, 1.260 }, { 1, 3, 10, 30, 100 }, 1e-3 );
	CHECK_FALSE( r.pass );
}

TEST_CASE( "Yager tends to Goedel as r grows" ) {
	const auto r = convergence_yager_godel( { { 0.2, 0.7 }, { 0.9, 0.1 } }, { 1, 2, 4, 8, 16, 32 }, 1e-2 );
	CHECK( r.pass );
	CHECK( r.to_csv().find( "," ) != std::string::npos );
}
