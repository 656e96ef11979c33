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

#include <dlc/numeric.hpp>

#include <charconv>

namespace dlc {

std::string XReal::to_string() const {
	if( v_ == std::numeric_limits< double >::infinity() ) return "+inf";
	if( v_ == -std::numeric_limits< double >::infinity() ) return "-inf";
	char buf[ 64 ];
	auto res = std::to_chars( buf, buf + sizeof( buf ), v_ );
	return std::string( buf, res.ptr );
}

namespace num {

namespace {

void check_base( double x ) {
	if( x < 0.0 || std::isnan( x ) ) {
		fail( ErrorCode::DomainError, "rpow base must be >= 0, got " + std::to_string( x ) );
	}
}

void check_exponent( double a ) {
	if( !std::isfinite( a ) ) fail( ErrorCode::DomainError, "rpow exponent must be finite" );
}

} // namespace

double rpow( double x, double a ) {
	check_base( x );
	check_exponent( a );
	if( x == 0.0 ) {
		if( a > 0.0 ) return 0.0;
		if( a == 0.0 ) return 1.0;
		fail( ErrorCode::DomainError, "rpow(0, a) with a < 0" );
	}
	return std::pow( x, a );
}

XReal rpow( const XReal &x, double a ) {
	check_base( x.value() );
	check_exponent( a );
	if( !x.is_finite() ) {
		if( a > 0.0 ) return XReal::plus_inf();
		if( a == 0.0 ) return XReal( 1.0 );
		return XReal( 0.0 );
	}
	return XReal( rpow( x.value(), a ) );
}

Dual rpow( const Dual &x, double a ) {
	const double v = rpow( x.v, a );
	if( x.t == 0.0 ) return { v, 0.0 };
	double d;
	if( x.v > 0.0 ) {
		d = a * std::pow( x.v, a - 1.0 );
	} else if( a == 1.0 ) {
		d = 1.0;
	} else if( a > 1.0 || a == 0.0 ) {
		d = 0.0;
	} else {
		d = std::numeric_limits< double >::infinity();
	}
	return { v, d * x.t };
}

} // namespace num

} // namespace dlc
