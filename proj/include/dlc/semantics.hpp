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

#ifndef DLC_SEMANTICS_HPP
#define DLC_SEMANTICS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <dlc/ast.hpp>
#include <dlc/errors.hpp>
#include <dlc/logic.hpp>
#include <dlc/numeric.hpp>

namespace dlc {

template< class T >
using VecFn = std::function< std::vector< T >( const std::vector< T > & ) >;
template< class T >
using VecFn2 = std::function< std::vector< T >( const std::vector< T > &, const std::vector< T > & ) >;

/** A named R^m -> R^n function with one instantiation per carrier. m = 0 accepts any input arity. */
struct FunEntry {
	std::size_t m = 0, n = 0;
	VecFn< double > f64;
	VecFn< XReal > xreal;
	VecFn< Dual > dual;

	template< class T >
	const VecFn< T > &get() const;
};

/** A named R^l x R^m -> R^n function; l = m = n = 0 means "any n, same for all three". */
struct Fun2Entry {
	std::size_t l = 0, m = 0, n = 0;
	VecFn2< double > f64;
	VecFn2< XReal > xreal;
	VecFn2< Dual > dual;

	template< class T >
	const VecFn2< T > &get() const;
};

template<> inline const VecFn< double > &FunEntry::get< double >() const { return f64; }
template<> inline const VecFn< XReal > &FunEntry::get< XReal >() const { return xreal; }
template<> inline const VecFn< Dual > &FunEntry::get< Dual >() const { return dual; }
template<> inline const VecFn2< double > &Fun2Entry::get< double >() const { return f64; }
template<> inline const VecFn2< XReal > &Fun2Entry::get< XReal >() const { return xreal; }
template<> inline const VecFn2< Dual > &Fun2Entry::get< Dual >() const { return dual; }

/**
 * Function environment. The built-ins `norm_inf` (any m -> 1, max of |x_i|)
 * and `sub` (n, n -> n) are always present.
 */
class Env {
public:
	Env();

	/** `g` is a generic callable usable with every carrier. */
	template< class G >
	void define( const std::string &name, std::size_t m, std::size_t n, G g ) {
		FunEntry e;
		e.m = m;
		e.n = n;
		e.f64 = [ g ]( const std::vector< double > &x ) { return g( x ); };
		e.xreal = [ g ]( const std::vector< XReal > &x ) { return g( x ); };
		e.dual = [ g ]( const std::vector< Dual > &x ) { return g( x ); };
		define_entry( name, std::move( e ) );
	}

	template< class G >
	void define2( const std::string &name, std::size_t l, std::size_t m, std::size_t n, G g ) {
		Fun2Entry e;
		e.l = l;
		e.m = m;
		e.n = n;
		e.f64 = [ g ]( const std::vector< double > &x, const std::vector< double > &y ) { return g( x, y ); };
		e.xreal = [ g ]( const std::vector< XReal > &x, const std::vector< XReal > &y ) { return g( x, y ); };
		e.dual = [ g ]( const std::vector< Dual > &x, const std::vector< Dual > &y ) { return g( x, y ); };
		define2_entry( name, std::move( e ) );
	}

	void define_entry( const std::string &name, FunEntry entry );
	void define2_entry( const std::string &name, Fun2Entry entry );

	const FunEntry *find( const std::string &name ) const;
	const Fun2Entry *find2( const std::string &name ) const;

private:
	std::map< std::string, FunEntry > funs_;
	std::map< std::string, Fun2Entry > funs2_;
};

template< class T >
struct InterpResult {
	TypeKind kind = TypeKind::Bool;
	T scalar {};
	std::vector< T > vec;
	std::size_t index = 0;
};

/** Validates `e` for `logic`, then applies the interpretation clauses. */
template< class T >
InterpResult< T > interpret( const Logic &logic, const Expr &e, const Env &env );

/** Interpretation of a Bool-typed root. */
template< class T >
T interpret_bool( const Logic &logic, const Expr &e, const Env &env );

/** (values[i] - m) / m with m = min(values); DivisionByZero when m = 0. */
double min_dev( std::size_t i, const std::vector< double > &values );

enum class NaryKind { Conj, Disj };

namespace clause {

[[noreturn]] void undefined( const Logic &logic, const char *connective );

template< class T >
T min_dev( std::size_t i, const std::vector< T > &values ) {
	T m = values.at( 0 );
	for( const auto &v : values ) m = num::min2( m, v );
	if( num::primal( m ) == 0.0 ) fail( ErrorCode::DivisionByZero, "min_dev with minimum 0" );
	return ( values.at( i ) - m ) / m;
}

/** STL conjunction branch for p_min < 0, taken verbatim for any argument vector. */
template< class T >
T stl_and_lt0( double nu, const std::vector< T > &values ) {
	T pmin = values.at( 0 );
	for( const auto &v : values ) pmin = num::min2( pmin, v );
	T num_sum( 0.0 ), den_sum( 0.0 );
	for( const auto &v : values ) {
		const T dev = ( v - pmin ) / pmin;
		const T w = num::exp( T( nu ) * dev );
		num_sum = num_sum + pmin * num::exp( dev ) * w;
		den_sum = den_sum + w;
	}
	return num_sum / den_sum;
}

/** STL conjunction branch for p_min > 0. */
template< class T >
T stl_and_gt0( double nu, const std::vector< T > &values ) {
	T pmin = values.at( 0 );
	for( const auto &v : values ) pmin = num::min2( pmin, v );
	T num_sum( 0.0 ), den_sum( 0.0 );
	for( const auto &v : values ) {
		const T dev = ( v - pmin ) / pmin;
		const T w = num::exp( -( T( nu ) * dev ) );
		num_sum = num_sum + v * w;
		den_sum = den_sum + w;
	}
	return num_sum / den_sum;
}

/** STL soft conjunction; the disjunction is its dual -conj(-v). */
template< class T >
T stl_nary( NaryKind kind, double nu, const std::vector< T > &values ) {
	if( values.empty() ) fail( ErrorCode::ArityMismatch, "STL connective needs at least one operand" );
	if( kind == NaryKind::Disj ) {
		std::vector< T > negated;
		negated.reserve( values.size() );
		for( const auto &v : values ) negated.push_back( -v );
		return -stl_nary( NaryKind::Conj, nu, negated );
	}
	T pmin = values[ 0 ];
	for( const auto &v : values ) pmin = num::min2( pmin, v );
	const double m = num::primal( pmin );
	if( m == 0.0 ) return T( 0.0 );
	return m < 0.0 ? stl_and_lt0( nu, values ) : stl_and_gt0( nu, values );
}

template< class T >
T top( const Logic &logic ) {
	switch( logic.kind() ) {
	case LogicKind::DL2: return T( 0.0 );
	case LogicKind::STL: undefined( logic, "top" );
	case LogicKind::STLInfty: return plus_infinity< T >();
	default: return T( 1.0 );
	}
}

template< class T >
T bot( const Logic &logic ) {
	switch( logic.kind() ) {
	case LogicKind::DL2: undefined( logic, "bot" );
	case LogicKind::STL: undefined( logic, "bot" );
	case LogicKind::STLInfty: return minus_infinity< T >();
	default: return T( 0.0 );
	}
}

template< class T >
T neg( const Logic &logic, const T &p ) {
	switch( logic.kind() ) {
	case LogicKind::Godel:
	case LogicKind::Product:
		return num::primal( p ) == 0.0 ? T( 1.0 ) : T( 0.0 );
	case LogicKind::Lukasiewicz:
		return T( 1.0 ) - p;
	case LogicKind::Yager: {
		const double r = logic.r();
		return T( 1.0 ) - num::rpow( T( 1.0 ) - num::rpow( T( 1.0 ) - p, r ), 1.0 / r );
	}
	case LogicKind::DL2:
		undefined( logic, "not" );
	case LogicKind::STL:
	case LogicKind::STLInfty:
		return -p;
	}
	undefined( logic, "not" );
}

template< class T >
T and2( const Logic &logic, const T &a, const T &b ) {
	if( logic.kind() == LogicKind::STL ) return stl_nary< T >( NaryKind::Conj, logic.nu(), { a, b } );
	return num::min2( a, b );
}

template< class T >
T or2( const Logic &logic, const T &a, const T &b ) {
	if( logic.kind() == LogicKind::STL ) return stl_nary< T >( NaryKind::Disj, logic.nu(), { a, b } );
	return num::max2( a, b );
}

template< class T >
T mand2( const Logic &logic, const T &a, const T &b ) {
	switch( logic.kind() ) {
	case LogicKind::Godel:
	case LogicKind::STLInfty:
		return num::min2( a, b );
	case LogicKind::Lukasiewicz:
		return num::max2( a + b - T( 1.0 ), T( 0.0 ) );
	case LogicKind::Yager: {
		const double r = logic.r();
		const T s = num::rpow( T( 1.0 ) - a, r ) + num::rpow( T( 1.0 ) - b, r );
		return num::max2( T( 1.0 ) - num::rpow( s, 1.0 / r ), T( 0.0 ) );
	}
	case LogicKind::Product:
		return a * b;
	case LogicKind::DL2:
		return a + b;
	case LogicKind::STL:
		undefined( logic, "mand" );
	}
	undefined( logic, "mand" );
}

template< class T >
T mor2( const Logic &logic, const T &a, const T &b ) {
	switch( logic.kind() ) {
	case LogicKind::Godel:
	case LogicKind::STLInfty:
		return num::max2( a, b );
	case LogicKind::Lukasiewicz:
		return num::min2( a + b, T( 1.0 ) );
	case LogicKind::Yager: {
		const double r = logic.r();
		return num::min2( num::rpow( num::rpow( a, r ) + num::rpow( b, r ), 1.0 / r ), T( 1.0 ) );
	}
	case LogicKind::Product:
		return a + b - a * b;
	case LogicKind::DL2:
		return -( a * b );
	case LogicKind::STL:
		undefined( logic, "mor" );
	}
	undefined( logic, "mor" );
}

template< class T >
T impl( const Logic &logic, const T &a, const T &b ) {
	const bool below = num::primal( a ) <= num::primal( b );
	switch( logic.kind() ) {
	case LogicKind::Godel:
		return below ? T( 1.0 ) : b;
	case LogicKind::Lukasiewicz:
		return num::min2( T( 1.0 ) - a + b, T( 1.0 ) );
	case LogicKind::Yager: {
		if( below ) return T( 1.0 );
		const double r = logic.r();
		const T d = num::rpow( T( 1.0 ) - b, r ) - num::rpow( T( 1.0 ) - a, r );
		return T( 1.0 ) - num::rpow( d, 1.0 / r );
	}
	case LogicKind::Product:
		return below ? T( 1.0 ) : b / a;
	case LogicKind::DL2:
		return -num::max2( a - b, T( 0.0 ) );
	case LogicKind::STL:
		undefined( logic, "impl" );
	case LogicKind::STLInfty:
		return below ? plus_infinity< T >() : b;
	}
	undefined( logic, "impl" );
}

template< class T >
T cmp( const Logic &logic, CmpOp op, const T &r1, const T &r2 ) {
	if( logic.is_fuzzy() ) {
		if( num::primal( r1 ) == -num::primal( r2 ) ) return T( 1.0 );
		// 1 - |q| and 1 - q with q = d / s, each folded into one division so
		// integer arguments round once: [[1 = 2]] is the double nearest 2/3.
		const T s = r1 + r2, d = r1 - r2;
		if( op == CmpOp::Eq ) {
			const T as = num::abs( s );
			return num::max2( ( as - num::abs( d ) ) / as, T( 0.0 ) );
		}
		if( num::primal( d / s ) < 0.0 ) return T( 1.0 );
		return num::max2( ( s - d ) / s, T( 0.0 ) );
	}
	if( op == CmpOp::Eq ) return -num::abs( r2 - r1 );
	if( logic.kind() == LogicKind::DL2 ) return -num::max2( r1 - r2, T( 0.0 ) );
	return r2 - r1;
}

/** Left fold of the binary clause; STL conjunction/disjunction use the dedicated n-ary formula. */
template< class T >
T fold_nary( const Logic &logic, NodeKind connective, const std::vector< T > &values ) {
	if( values.empty() ) fail( ErrorCode::ArityMismatch, "n-ary connective needs at least one operand" );
	if( logic.kind() == LogicKind::STL && ( connective == NodeKind::And || connective == NodeKind::Or ) ) {
		return stl_nary( connective == NodeKind::And ? NaryKind::Conj : NaryKind::Disj, logic.nu(), values );
	}
	T acc = values[ 0 ];
	for( std::size_t i = 1; i < values.size(); ++i ) {
		switch( connective ) {
		case NodeKind::And: acc = and2( logic, acc, values[ i ] ); break;
		case NodeKind::Or: acc = or2( logic, acc, values[ i ] ); break;
		case NodeKind::MAnd: acc = mand2( logic, acc, values[ i ] ); break;
		case NodeKind::MOr: acc = mor2( logic, acc, values[ i ] ); break;
		default: fail( ErrorCode::TypeMismatch, "fold over a non-n-ary connective" );
		}
	}
	return acc;
}

} // namespace clause

extern template InterpResult< double > interpret< double >( const Logic &, const Expr &, const Env & );
extern template InterpResult< XReal > interpret< XReal >( const Logic &, const Expr &, const Env & );
extern template InterpResult< Dual > interpret< Dual >( const Logic &, const Expr &, const Env & );
extern template double interpret_bool< double >( const Logic &, const Expr &, const Env & );
extern template XReal interpret_bool< XReal >( const Logic &, const Expr &, const Env & );
extern template Dual interpret_bool< Dual >( const Logic &, const Expr &, const Env & );

} // namespace dlc

#endif
