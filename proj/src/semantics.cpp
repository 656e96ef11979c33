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

#include <dlc/semantics.hpp>

#include <sstream>

namespace dlc {

Env::Env() {
	FunEntry norm;
	norm.m = 0;
	norm.n = 1;
	auto norm_fn = []( const auto &x ) {
		using T = typename std::decay_t< decltype( x ) >::value_type;
		T acc = num::abs( x.at( 0 ) );
		for( std::size_t i = 1; i < x.size(); ++i ) acc = num::max2( acc, num::abs( x[ i ] ) );
		return std::vector< T > { acc };
	};
	norm.f64 = norm_fn;
	norm.xreal = norm_fn;
	norm.dual = norm_fn;
	funs_.emplace( "norm_inf", std::move( norm ) );

	Fun2Entry sub;
	auto sub_fn = []( const auto &x, const auto &y ) {
		using T = typename std::decay_t< decltype( x ) >::value_type;
		std::vector< T > out;
		out.reserve( x.size() );
		for( std::size_t i = 0; i < x.size(); ++i ) out.push_back( x[ i ] - y.at( i ) );
		return out;
	};
	sub.f64 = sub_fn;
	sub.xreal = sub_fn;
	sub.dual = sub_fn;
	funs2_.emplace( "sub", std::move( sub ) );
}

void Env::define_entry( const std::string &name, FunEntry entry ) {
	if( name.empty() ) fail( ErrorCode::SchemaError, "function name must be nonempty" );
	funs_[ name ] = std::move( entry );
}

void Env::define2_entry( const std::string &name, Fun2Entry entry ) {
	if( name.empty() ) fail( ErrorCode::SchemaError, "function name must be nonempty" );
	funs2_[ name ] = std::move( entry );
}

const FunEntry *Env::find( const std::string &name ) const {
	auto it = funs_.find( name );
	return it == funs_.end() ? nullptr : &it->second;
}

const Fun2Entry *Env::find2( const std::string &name ) const {
	auto it = funs2_.find( name );
	return it == funs2_.end() ? nullptr : &it->second;
}

double min_dev( std::size_t i, const std::vector< double > &values ) {
	if( i >= values.size() ) fail( ErrorCode::IndexOutOfRange, "min_dev index past the end" );
	return clause::min_dev( i, values );
}

namespace clause {

void undefined( const Logic &logic, const char *connective ) {
	fail( ErrorCode::UndefinedConnective, std::string( connective ) + " has no interpretation under " + logic.label() );
}

} // namespace clause

namespace {

template< class T >
class Interp {
public:
	Interp( const Logic &logic, const Env &env ) : logic_( logic ), env_( env ) {}

	InterpResult< T > any( const Expr &e ) {
		InterpResult< T > r;
		r.kind = e->tag.kind;
		switch( e->tag.kind ) {
		case TypeKind::Bool: r.scalar = boolean( e ); break;
		case TypeKind::Real: r.scalar = real( e ); break;
		case TypeKind::Vector: r.vec = vec( e ); break;
		case TypeKind::Index: r.index = e->ival; break;
		default: fail( ErrorCode::TypeMismatch, "function-typed expressions have no value", where() );
		}
		return r;
	}

	T boolean( const Expr &e ) {
		T v = boolean_raw( e );
		check_range( v );
		return v;
	}

private:
	T boolean_raw( const Expr &e ) {
		switch( e->kind ) {
		case NodeKind::BoolConst:
			return e->bval ? clause::top< T >( logic_ ) : clause::bot< T >( logic_ );
		case NodeKind::Not:
			return clause::neg( logic_, child_bool( e, 0 ) );
		case NodeKind::Impl: {
			T a = child_bool( e, 0 );
			T b = child_bool( e, 1 );
			return clause::impl( logic_, a, b );
		}
		case NodeKind::And: case NodeKind::Or: case NodeKind::MAnd: case NodeKind::MOr: {
			std::vector< T > vals;
			vals.reserve( e->children.size() );
			for( std::size_t i = 0; i < e->children.size(); ++i ) vals.push_back( child_bool( e, i ) );
			return clause::fold_nary( logic_, e->kind, vals );
		}
		case NodeKind::Cmp: {
			T a = child_real( e, 0 );
			T b = child_real( e, 1 );
			return clause::cmp( logic_, e->op, a, b );
		}
		default:
			fail( ErrorCode::TypeMismatch, "not a Bool node", where() );
		}
	}

	void check_range( const T &v ) {
		const double p = num::primal( v );
		if( logic_.is_fuzzy() && !( p >= 0.0 && p <= 1.0 ) ) {
			fail( ErrorCode::RangeError, "fuzzy truth value " + std::to_string( p ) + " outside [0,1]", where() );
		}
		if( logic_.kind() == LogicKind::DL2 && !( p <= 0.0 ) ) {
			fail( ErrorCode::RangeError, "DL2 truth value " + std::to_string( p ) + " above 0", where() );
		}
	}

	T real( const Expr &e ) {
		switch( e->kind ) {
		case NodeKind::RealConst:
			return T( e->rval );
		case NodeKind::Lookup: {
			std::vector< T > v = child_vec( e, 0 );
			return v.at( e->children[ 1 ]->ival );
		}
		default:
			fail( ErrorCode::TypeMismatch, "not a Real node", where() );
		}
	}

	std::vector< T > vec( const Expr &e ) {
		switch( e->kind ) {
		case NodeKind::VecConst: {
			std::vector< T > out;
			out.reserve( e->vval.size() );
			for( double v : e->vval ) out.push_back( T( v ) );
			return out;
		}
		case NodeKind::App: {
			const Expr &f = e->children[ 0 ];
			const FunEntry *entry = env_.find( f->name );
			if( !entry ) fail( ErrorCode::UnresolvedFunction, "no function '" + f->name + "'", where() );
			if( ( entry->m != 0 && entry->m != f->tag.a ) || entry->n != f->tag.b ) {
				fail( ErrorCode::ArityMismatch, "function '" + f->name + "' declared " + f->tag.to_string() +
					" but bound as Fun(" + std::to_string( entry->m ) + "," + std::to_string( entry->n ) + ")", where() );
			}
			std::vector< T > arg = child_vec( e, 1 );
			std::vector< T > out = entry->template get< T >()( arg );
			if( out.size() != f->tag.b ) {
				fail( ErrorCode::ArityError, "function '" + f->name + "' returned " + std::to_string( out.size() ) +
					" values", where() );
			}
			return out;
		}
		case NodeKind::App2: {
			const Expr &f = e->children[ 0 ];
			const Fun2Entry *entry = env_.find2( f->name );
			if( !entry ) fail( ErrorCode::UnresolvedFunction, "no binary function '" + f->name + "'", where() );
			const bool poly = entry->l == 0 && entry->m == 0 && entry->n == 0;
			if( poly ? !( f->tag.a == f->tag.b && f->tag.b == f->tag.c )
			         : ( entry->l != f->tag.a || entry->m != f->tag.b || entry->n != f->tag.c ) ) {
				fail( ErrorCode::ArityMismatch, "binary function '" + f->name + "' used at " + f->tag.to_string(), where() );
			}
			std::vector< T > x = child_vec( e, 1 );
			std::vector< T > y = child_vec( e, 2 );
			std::vector< T > out = entry->template get< T >()( x, y );
			if( out.size() != f->tag.c ) {
				fail( ErrorCode::ArityError, "binary function '" + f->name + "' returned " +
					std::to_string( out.size() ) + " values", where() );
			}
			return out;
		}
		default:
			fail( ErrorCode::TypeMismatch, "not a Vector node", where() );
		}
	}

	T child_bool( const Expr &e, std::size_t i ) {
		path_.push_back( i );
		T v = boolean( e->children[ i ] );
		path_.pop_back();
		return v;
	}

	T child_real( const Expr &e, std::size_t i ) {
		path_.push_back( i );
		T v = real( e->children[ i ] );
		path_.pop_back();
		return v;
	}

	std::vector< T > child_vec( const Expr &e, std::size_t i ) {
		path_.push_back( i );
		std::vector< T > v = vec( e->children[ i ] );
		path_.pop_back();
		return v;
	}

	std::string where() const {
		std::ostringstream os;
		os << "$";
		for( auto i : path_ ) os << "/" << i;
		return os.str();
	}

	const Logic &logic_;
	const Env &env_;
	std::vector< std::size_t > path_;
};

} // namespace

template< class T >
InterpResult< T > interpret( const Logic &logic, const Expr &e, const Env &env ) {
	validate_for_logic( e, logic );
	return Interp< T >( logic, env ).any( e );
}

template< class T >
T interpret_bool( const Logic &logic, const Expr &e, const Env &env ) {
	validate_for_logic( e, logic );
	if( e->tag.kind != TypeKind::Bool ) fail( ErrorCode::TypeMismatch, "root is not Bool-typed" );
	return Interp< T >( logic, env ).boolean( e );
}

template InterpResult< double > interpret< double >( const Logic &, const Expr &, const Env & );
template InterpResult< XReal > interpret< XReal >( const Logic &, const Expr &, const Env & );
template InterpResult< Dual > interpret< Dual >( const Logic &, const Expr &, const Env & );
template double interpret_bool< double >( const Logic &, const Expr &, const Env & );
template XReal interpret_bool< XReal >( const Logic &, const Expr &, const Env & );
template Dual interpret_bool< Dual >( const Logic &, const Expr &, const Env & );

} // namespace dlc
