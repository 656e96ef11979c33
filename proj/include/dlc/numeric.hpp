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

#ifndef DLC_NUMERIC_HPP
#define DLC_NUMERIC_HPP

#include <cmath>
#include <concepts>
#include <limits>
#include <string>
#include <utility>

#include <dlc/errors.hpp>

namespace dlc {

/**
 * Extended real: a finite double or one of +inf, -inf; never NaN.
 * Indeterminate forms (inf - inf, 0 * inf, inf / inf) raise CarrierError.
 */
class XReal {
public:
	constexpr XReal() noexcept = default;
	XReal( double v ) : v_( checked( v, "construction" ) ) {}

	static XReal plus_inf() noexcept { return raw( std::numeric_limits< double >::infinity() ); }
	static XReal minus_inf() noexcept { return raw( -std::numeric_limits< double >::infinity() ); }

	double value() const noexcept { return v_; }
	bool is_finite() const noexcept { return std::isfinite( v_ ); }

	friend XReal operator+( XReal a, XReal b ) { return XReal( checked( a.v_ + b.v_, "inf - inf" ) ); }
	friend XReal operator-( XReal a, XReal b ) { return XReal( checked( a.v_ - b.v_, "inf - inf" ) ); }
	friend XReal operator*( XReal a, XReal b ) { return XReal( checked( a.v_ * b.v_, "0 * inf" ) ); }
	friend XReal operator/( XReal a, XReal b ) {
		if( b.v_ == 0.0 ) fail( ErrorCode::DivisionByZero, "extended-real division by zero" );
		return XReal( checked( a.v_ / b.v_, "inf / inf" ) );
	}
	friend XReal operator-( XReal a ) noexcept { return raw( -a.v_ ); }

	friend bool operator==( XReal a, XReal b ) noexcept { return a.v_ == b.v_; }
	friend auto operator<=>( XReal a, XReal b ) noexcept { return a.v_ <=> b.v_; }

	std::string to_string() const;

private:
	static XReal raw( double v ) noexcept {
		XReal x;
		x.v_ = v;
		return x;
	}
	static double checked( double v, const char *what ) {
		if( std::isnan( v ) ) fail( ErrorCode::CarrierError, std::string( "indeterminate form: " ) + what );
		return v;
	}

	double v_ = 0.0;
};

/** Forward-mode dual number; min/max ties take the left operand's tangent. */
struct Dual {
	double v = 0.0;
	double t = 0.0;

	constexpr Dual() noexcept = default;
	constexpr Dual( double value ) noexcept : v( value ), t( 0.0 ) {}
	constexpr Dual( double value, double tangent ) noexcept : v( value ), t( tangent ) {}

	friend constexpr Dual operator+( Dual a, Dual b ) noexcept { return { a.v + b.v, a.t + b.t }; }
	friend constexpr Dual operator-( Dual a, Dual b ) noexcept { return { a.v - b.v, a.t - b.t }; }
	friend constexpr Dual operator*( Dual a, Dual b ) noexcept { return { a.v * b.v, a.t * b.v + a.v * b.t }; }
	friend Dual operator/( Dual a, Dual b ) {
		if( b.v == 0.0 ) fail( ErrorCode::DivisionByZero, "dual division by zero" );
		return { a.v / b.v, ( a.t * b.v - a.v * b.t ) / ( b.v * b.v ) };
	}
	friend constexpr Dual operator-( Dual a ) noexcept { return { -a.v, -a.t }; }
};

namespace num {

inline double primal( double x ) noexcept { return x; }
inline double primal( const XReal &x ) noexcept { return x.value(); }
inline double primal( const Dual &x ) noexcept { return x.v; }

inline double exp( double x ) { return std::exp( x ); }
inline XReal exp( const XReal &x ) { return XReal( std::exp( x.value() ) ); }
inline Dual exp( const Dual &x ) {
	const double e = std::exp( x.v );
	return { e, x.t * e };
}

inline double abs( double x ) noexcept { return std::fabs( x ); }
inline XReal abs( const XReal &x ) { return XReal( std::fabs( x.value() ) ); }
/** Written as max(x, -x), so x = 0 takes the tangent of x. */
inline Dual abs( const Dual &x ) noexcept { return x.v >= -x.v ? x : -x; }

template< class T >
T min2( const T &a, const T &b ) {
	return primal( a ) <= primal( b ) ? a : b;
}

template< class T >
T max2( const T &a, const T &b ) {
	return primal( a ) >= primal( b ) ? a : b;
}

/** x^a for primal(x) >= 0 with 0^a = 0 (a > 0) and 0^0 = 1. */
double rpow( double x, double a );
XReal rpow( const XReal &x, double a );
Dual rpow( const Dual &x, double a );

} // namespace num

/** The operation suite the generic interpreter needs from a scalar carrier. */
template< class T >
concept CarrierScalar = requires( T a, T b, double d ) {
	{ a + b } -> std::convertible_to< T >;
	{ a - b } -> std::convertible_to< T >;
	{ a * b } -> std::convertible_to< T >;
	{ a / b } -> std::convertible_to< T >;
	{ -a } -> std::convertible_to< T >;
	{ num::exp( a ) } -> std::convertible_to< T >;
	{ num::abs( a ) } -> std::convertible_to< T >;
	{ num::rpow( a, d ) } -> std::convertible_to< T >;
	{ num::primal( a ) } -> std::convertible_to< double >;
	T( d );
};

template< CarrierScalar T >
struct CarrierInfo;

template<>
struct CarrierInfo< double > {
	static constexpr bool has_infinity = false;
	static constexpr const char *name = "f64";
};

template<>
struct CarrierInfo< XReal > {
	static constexpr bool has_infinity = true;
	static constexpr const char *name = "xreal";
	static XReal plus_inf() noexcept { return XReal::plus_inf(); }
	static XReal minus_inf() noexcept { return XReal::minus_inf(); }
};

template<>
struct CarrierInfo< Dual > {
	static constexpr bool has_infinity = false;
	static constexpr const char *name = "dual";
};

template< CarrierScalar T >
T plus_infinity() {
	if constexpr( CarrierInfo< T >::has_infinity ) {
		return CarrierInfo< T >::plus_inf();
	} else {
		fail( ErrorCode::CarrierError, std::string( "carrier " ) + CarrierInfo< T >::name + " has no +inf" );
	}
}

template< CarrierScalar T >
T minus_infinity() {
	if constexpr( CarrierInfo< T >::has_infinity ) {
		return CarrierInfo< T >::minus_inf();
	} else {
		fail( ErrorCode::CarrierError, std::string( "carrier " ) + CarrierInfo< T >::name + " has no -inf" );
	}
}

/** (f(a), f'(a) * direction) via one dual evaluation. */
template< class F >
std::pair< double, double > dual_eval( F &&f, double a, double direction ) {
	const Dual r = f( Dual( a, direction ) );
	return { r.v, r.t };
}

} // namespace dlc

#endif
