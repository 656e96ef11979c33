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

#include <random>

#include <dlc/errors.hpp>
#include <dlc/numeric.hpp>

using namespace dlc;

namespace {

template< class T >
T poly_exp( const T &x ) {
	// x^3 - 2x + exp(x / 2), smooth everywhere.
	return x * x * x - T( 2.0 ) * x + num::exp( x / T( 2.0 ) );
}

} // namespace

TEST_CASE( "xreal: infinities propagate and indeterminate forms fail" ) {
	const XReal inf = XReal::plus_inf();
	CHECK( ( inf + XReal( 1.0 ) ) == inf );
	CHECK( ( -inf ) == XReal::minus_inf() );
	CHECK( XReal::minus_inf() < XReal( -1e300 ) );
	CHECK_THROWS_AS( inf - inf, Error );
	CHECK_THROWS_AS( XReal( 0.0 ) * inf, Error );
	try {
		(void)( XReal( 1.0 ) / XReal( 0.0 ) );
		FAIL( "expected DivisionByZero" );
	} catch( const Error &e ) {
		CHECK( e.code() == ErrorCode::DivisionByZero );
	}
}

TEST_CASE( "carriers without infinity refuse it" ) {
	try {
		(void)plus_infinity< double >();
		FAIL( "expected CarrierError" );
	} catch( const Error &e ) {
		CHECK( e.code() == ErrorCode::CarrierError );
	}
	CHECK_THROWS_AS( minus_infinity< Dual >(), Error );
	CHECK( plus_infinity< XReal >() == XReal::plus_inf() );
}

TEST_CASE( "dual: derivative of x^3 at 2 is 12" ) {
	const auto [ v, d ] = dual_eval( []( Dual x ) { return x * x * x; }, 2.0, 1.0 );
	CHECK( v == 8.0 );
	CHECK( d == 12.0 );
}

TEST_CASE( "dual: abs at 0 keeps the input tangent and min ties take the left operand" ) {
	CHECK( num::abs( Dual( 0.0, 1.0 ) ).t == 1.0 );
	CHECK( num::abs( Dual( -1.0, 1.0 ) ).t == -1.0 );
	CHECK( num::min2( Dual( 1.0, 3.0 ), Dual( 1.0, 5.0 ) ).t == 3.0 );
	CHECK( num::max2( Dual( 1.0, 3.0 ), Dual( 1.0, 5.0 ) ).t == 3.0 );
}

TEST_CASE( "rpow edge values" ) {
	CHECK( num::rpow( 0.0, 0.0 ) == 1.0 );
	CHECK( num::rpow( 0.0, 2.5 ) == 0.0 );
	CHECK( num::rpow( 4.0, 0.5 ) == doctest::Approx( 2.0 ) );
}

TEST_CASE( "property: dual derivative matches central differences on a smooth function" ) {
	std::mt19937_64 rng( 3 );
	std::uniform_real_distribution< double > u( -3.0, 3.0 );
	for( int k = 0; k < 200; ++k ) {
		const double x = u( rng );
		const double h = 1e-6 * std::max( 1.0, std::fabs( x ) );
		const double fd = ( poly_exp( x + h ) - poly_exp( x - h ) ) / ( 2.0 * h );
		const double d = dual_eval( []( Dual y ) { return poly_exp( y ); }, x, 1.0 ).second;
		CHECK( std::fabs( d - fd ) <= 1e-6 * std::max( 1.0, std::fabs( fd ) ) );
	}
}

TEST_CASE( "property: rpow dual tangent matches a * x^(a - 1)" ) {
	std::mt19937_64 rng( 5 );
	std::uniform_real_distribution< double > ux( 0.1, 4.0 ), ua( 0.2, 6.0 );
	for( int k = 0; k < 200; ++k ) {
		const double x = ux( rng ), a = ua( rng );
		const Dual r = num::rpow( Dual( x, 1.0 ), a );
		CHECK( r.v == doctest::Approx( std::pow( x, a ) ).epsilon( 1e-12 ) );
		CHECK( r.t == doctest::Approx( a * std::pow( x, a - 1.0 ) ).epsilon( 1e-10 ) );
	}
}
