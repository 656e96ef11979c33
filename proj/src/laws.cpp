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

#include <dlc/errors.hpp>
#include <dlc/laws.hpp>
#include <dlc/random_formula.hpp>
#include <dlc/semantics.hpp>

#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

namespace dlc {

using nlohmann::json;

namespace {

struct AxiomInfo {
	AxiomId id;
	const char *name;
	std::size_t arity;
};

const AxiomInfo kAxioms[] = {
	{ AxiomId::R1, "R1", 2 }, { AxiomId::R2, "R2", 3 }, { AxiomId::R3, "R3", 2 }, { AxiomId::R4, "R4", 3 },
	{ AxiomId::R5, "R5", 2 }, { AxiomId::R6, "R6", 2 }, { AxiomId::R7, "R7", 3 }, { AxiomId::R8, "R8", 3 },
	{ AxiomId::R9, "R9", 1 }, { AxiomId::R10, "R10", 3 }, { AxiomId::N1, "N1", 1 }, { AxiomId::N2, "N2", 1 },
	{ AxiomId::N3, "N3", 2 }, { AxiomId::N4, "N4", 2 }, { AxiomId::M1, "M1", 3 }, { AxiomId::M2, "M2", 2 },
	{ AxiomId::M3, "M3", 2 }, { AxiomId::IDEM_MONOID, "IDEM_MONOID", 1 },
};

const AxiomInfo &info( AxiomId a ) { return kAxioms[ static_cast< int >( a ) ]; }

bool has_top( const Logic &l ) { return l.kind() != LogicKind::STL; }
bool has_bot( const Logic &l ) { return l.kind() != LogicKind::STL && l.kind() != LogicKind::DL2; }

/** Empty string when applicable, else the reason. */
std::string applicability( const Logic &l, AxiomId a ) {
	const ConnectiveFlags f = l.flag_profile();
	auto need = [ & ]( bool ok, const char *what ) { return ok ? std::string() : std::string( what ) + " undefined"; };
	std::string r;
	switch( a ) {
	case AxiomId::R1: case AxiomId::R2: case AxiomId::R3: case AxiomId::R4:
	case AxiomId::R5: case AxiomId::R6: case AxiomId::R7:
		return need( f.lattice, "lattice connectives" );
	case AxiomId::R8: case AxiomId::M1:
		return need( f.monoid, "monoidal connectives" );
	case AxiomId::R9:
		if( !( r = need( f.monoid, "monoidal connectives" ) ).empty() ) return r;
		return need( has_top( l ), "top" );
	case AxiomId::R10:
		if( !( r = need( f.monoid, "monoidal connectives" ) ).empty() ) return r;
		return need( f.impl, "implication" );
	case AxiomId::N1:
		if( !( r = need( f.neg, "negation" ) ).empty() ) return r;
		if( !( r = need( f.impl, "implication" ) ).empty() ) return r;
		return need( has_bot( l ), "bot" );
	case AxiomId::N2:
		return need( f.neg, "negation" );
	case AxiomId::N3: case AxiomId::N4:
		if( !( r = need( f.neg, "negation" ) ).empty() ) return r;
		return need( f.lattice, "lattice connectives" );
	case AxiomId::M2: case AxiomId::M3:
		if( !( r = need( f.neg, "negation" ) ).empty() ) return r;
		return need( f.monoid, "monoidal connectives" );
	case AxiomId::IDEM_MONOID:
		return need( f.monoid || f.lattice, "conjunction" );
	}
	return r;
}

enum class Shape { Eq, Le };

template< class T >
struct Sides {
	T lhs, rhs;
	Shape shape = Shape::Eq;
};

template< class T >
Sides< T > eval_sides( const Logic &L, AxiomId a, const T &x, const T &y, const T &z ) {
	using namespace clause;
	auto A = [ & ]( const T &p, const T &q ) { return and2( L, p, q ); };
	auto O = [ & ]( const T &p, const T &q ) { return or2( L, p, q ); };
	auto MA = [ & ]( const T &p, const T &q ) { return mand2( L, p, q ); };
	auto MO = [ & ]( const T &p, const T &q ) { return mor2( L, p, q ); };
	auto N = [ & ]( const T &p ) { return neg( L, p ); };
	switch( a ) {
	case AxiomId::R1: return { A( x, y ), A( y, x ) };
	case AxiomId::R2: return { A( x, A( y, z ) ), A( A( x, y ), z ) };
	case AxiomId::R3: return { O( x, y ), O( y, x ) };
	case AxiomId::R4: return { O( x, O( y, z ) ), O( O( x, y ), z ) };
	case AxiomId::R5: return { A( x, O( x, y ) ), x };
	case AxiomId::R6: return { O( x, A( x, y ) ), x };
	case AxiomId::R7: return { A( x, O( y, z ) ), O( A( x, y ), A( x, z ) ), Shape::Le };
	case AxiomId::R8: return { MA( x, MA( y, z ) ), MA( MA( x, y ), z ) };
	case AxiomId::R9: return { MA( x, top< T >( L ) ), x };
	case AxiomId::N1: return { N( x ), impl( L, x, bot< T >( L ) ) };
	case AxiomId::N2: return { N( N( x ) ), x };
	case AxiomId::N3: return { N( A( x, y ) ), O( N( x ), N( y ) ) };
	case AxiomId::N4: return { N( O( x, y ) ), A( N( x ), N( y ) ) };
	case AxiomId::M1: return { MO( x, MO( y, z ) ), MO( MO( x, y ), z ) };
	case AxiomId::M2: return { N( MA( x, y ) ), MO( N( x ), N( y ) ) };
	case AxiomId::M3: return { N( MO( x, y ) ), MA( N( x ), N( y ) ) };
	case AxiomId::IDEM_MONOID:
		return { L.flag_profile().monoid ? MA( x, x ) : A( x, x ), x };
	case AxiomId::R10: break;
	}
	fail( ErrorCode::Usage, "R10 is checked by check_residuation" );
}

bool close( double a, double b, double tol ) {
	if( !std::isfinite( a ) || !std::isfinite( b ) ) return a == b;
	return std::fabs( a - b ) <= tol;
}

bool leq( double a, double b, double tol ) {
	if( !std::isfinite( a ) || !std::isfinite( b ) ) return a <= b;
	return a <= b + tol;
}

bool sides_ok( double l, double r, Shape s, double tol ) { return s == Shape::Eq ? close( l, r, tol ) : leq( l, r, tol ); }

std::vector< double > witness_set( const Logic &l ) {
	const double inf = std::numeric_limits< double >::infinity();
	switch( l.kind() ) {
	case LogicKind::DL2: return { -2.0 / 3, -1.0 / 3, -0.5, 0.0, -1.0 };
	case LogicKind::STL: return { 2.0 / 3, 1.0 / 3, 0.5, 0.0, 1.0, -1.0 / 3, -1.0 };
	case LogicKind::STLInfty: return { 2.0 / 3, 1.0 / 3, 0.5, 0.0, 1.0, -1.0 / 3, -1.0, inf, -inf };
	default: return { 2.0 / 3, 1.0 / 3, 0.5, 0.0, 1.0 };
	}
}

double sample( const Logic &l, std::mt19937_64 &rng ) {
	std::uniform_real_distribution< double > u( 0.0, 1.0 );
	const double k = u( rng );
	switch( l.kind() ) {
	case LogicKind::DL2:
		return k < 0.05 ? 0.0 : -kDl2Bound * u( rng );
	case LogicKind::STL:
		return kStlBound * ( 2.0 * u( rng ) - 1.0 );
	case LogicKind::STLInfty:
		if( k < 0.05 ) return std::numeric_limits< double >::infinity();
		if( k < 0.10 ) return -std::numeric_limits< double >::infinity();
		return kStlBound * ( 2.0 * u( rng ) - 1.0 );
	default:
		if( k < 0.025 ) return 0.0;
		if( k < 0.05 ) return 1.0;
		return u( rng );
	}
}

/** Calls `visit(tuple)` on every arity-tuple over `set` until it returns false. */
template< class F >
void for_each_tuple( const std::vector< double > &set, std::size_t arity, F &&visit ) {
	std::vector< std::size_t > idx( arity, 0 );
	std::vector< double > t( 3, 0.0 );
	while( true ) {
		for( std::size_t k = 0; k < arity; ++k ) t[ k ] = set[ idx[ k ] ];
		if( !visit( t ) ) return;
		std::size_t k = arity;
		while( k > 0 ) {
			--k;
			if( ++idx[ k ] < set.size() ) break;
			idx[ k ] = 0;
			if( k == 0 ) return;
		}
	}
}

template< class T >
Sides< double > eval_double( const Logic &l, AxiomId a, const std::vector< double > &v ) {
	auto s = eval_sides< T >( l, a, T( v[ 0 ] ), T( v[ 1 ] ), T( v[ 2 ] ) );
	return { num::primal( s.lhs ), num::primal( s.rhs ), s.shape };
}

Sides< double > eval_any( const Logic &l, AxiomId a, const std::vector< double > &v ) {
	if( l.kind() == LogicKind::STLInfty ) return eval_double< XReal >( l, a, v );
	return eval_double< double >( l, a, v );
}

struct Residuation {
	double lhs_value, rhs_value;     // x (*) y and x => z
	bool lhs, rhs;                   // x (*) y <= z, y <= x => z
	bool grazing;
};

template< class T >
Residuation residuation( const Logic &L, double x, double y, double z, double tol ) {
	const double m = num::primal( clause::mand2( L, T( x ), T( y ) ) );
	const double i = num::primal( clause::impl( L, T( x ), T( z ) ) );
	Residuation r;
	r.lhs_value = m;
	r.rhs_value = i;
	r.lhs = m <= z;
	r.rhs = y <= i;
	r.grazing = close( m, z, tol ) || close( y, i, tol );
	return r;
}

Residuation residuation_any( const Logic &l, double x, double y, double z, double tol ) {
	if( l.kind() == LogicKind::STLInfty ) return residuation< XReal >( l, x, y, z, tol );
	return residuation< double >( l, x, y, z, tol );
}

LawReport base_report( const Logic &logic, AxiomId axiom, const char *level, double tol ) {
	LawReport rep;
	rep.logic = logic.label();
	rep.axiom = axiom;
	rep.level = level;
	rep.tol = tol;
	return rep;
}

json number( double v ) {
	if( std::isfinite( v ) ) return v;
	if( std::isnan( v ) ) return "nan";
	return v > 0 ? "+inf" : "-inf";
}

} // namespace

const char *axiom_name( AxiomId a ) noexcept { return info( a ).name; }

AxiomId axiom_from_name( const std::string &name ) {
	for( const auto &i : kAxioms ) {
		if( name == i.name ) return i.id;
	}
	if( name == "IDEM" ) return AxiomId::IDEM_MONOID;
	fail( ErrorCode::Usage, "unknown axiom '" + name + "'" );
}

std::size_t axiom_arity( AxiomId a ) noexcept { return info( a ).arity; }

const std::vector< AxiomId > &all_axioms() {
	static const std::vector< AxiomId > all = [] {
		std::vector< AxiomId > v;
		for( const auto &i : kAxioms ) v.push_back( i.id );
		return v;
	}();
	return all;
}

const char *verdict_name( Verdict v ) noexcept {
	switch( v ) {
	case Verdict::Pass: return "pass";
	case Verdict::Counterexample: return "counterexample";
	case Verdict::NotApplicable: return "not_applicable";
	}
	return "?";
}

json LawReport::to_json() const {
	json j { { "logic", logic }, { "axiom", axiom_name( axiom ) }, { "level", level },
		{ "samples_run", samples_run }, { "verdict", verdict_name( verdict ) }, { "tol", tol } };
	if( !note.empty() ) j[ "note" ] = note;
	if( witness ) {
		json vals = json::array();
		for( double v : witness->values ) vals.push_back( number( v ) );
		json w { { "values", vals }, { "lhs", number( witness->lhs ) }, { "rhs", number( witness->rhs ) } };
		if( !witness->formulas.empty() ) w[ "formulas" ] = witness->formulas;
		if( axiom == AxiomId::R10 ) {
			w[ "mand_le_z" ] = witness->lhs_holds;
			w[ "y_le_impl" ] = witness->rhs_holds;
		}
		j[ "witness" ] = w;
	}
	return j;
}

LawReport check_axiom_values( const Logic &logic, AxiomId axiom, std::size_t n_samples, double tol, std::uint64_t seed ) {
	if( axiom == AxiomId::R10 ) return check_residuation( logic, n_samples, tol, seed );
	LawReport rep = base_report( logic, axiom, "value", tol );
	const std::string why = applicability( logic, axiom );
	if( !why.empty() ) {
		rep.verdict = Verdict::NotApplicable;
		rep.note = why;
		return rep;
	}
	const std::size_t arity = axiom_arity( axiom );
	auto try_tuple = [ & ]( const std::vector< double > &v ) {
		++rep.samples_run;
		const auto s = eval_any( logic, axiom, v );
		if( sides_ok( s.lhs, s.rhs, s.shape, tol ) ) return true;
		rep.verdict = Verdict::Counterexample;
		rep.witness = LawWitness { std::vector< double >( v.begin(), v.begin() + arity ), {}, s.lhs, s.rhs };
		return false;
	};
	for_each_tuple( witness_set( logic ), arity, try_tuple );
	if( rep.verdict == Verdict::Counterexample ) return rep;
	std::mt19937_64 rng( seed );
	std::vector< double > v( 3, 0.0 );
	for( std::size_t k = 0; k < n_samples; ++k ) {
		for( std::size_t j = 0; j < arity; ++j ) v[ j ] = sample( logic, rng );
		if( !try_tuple( v ) ) return rep;
	}
	return rep;
}

LawReport check_residuation( const Logic &logic, std::size_t n_samples, double tol, std::uint64_t seed ) {
	LawReport rep = base_report( logic, AxiomId::R10, "value", tol );
	const std::string why = applicability( logic, AxiomId::R10 );
	if( !why.empty() ) {
		rep.verdict = Verdict::NotApplicable;
		rep.note = why;
		return rep;
	}
	std::size_t grazing = 0;
	auto try_triple = [ & ]( double x, double y, double z ) {
		const Residuation r = residuation_any( logic, x, y, z, tol );
		if( r.grazing ) {
			++grazing;
			return true;
		}
		++rep.samples_run;
		if( r.lhs == r.rhs ) return true;
		rep.verdict = Verdict::Counterexample;
		rep.witness = LawWitness { { x, y, z }, {}, r.lhs_value, r.rhs_value, r.lhs, r.rhs };
		return false;
	};
	bool ok = true;
	for_each_tuple( witness_set( logic ), 3, [ & ]( const std::vector< double > &v ) {
		ok = try_triple( v[ 0 ], v[ 1 ], v[ 2 ] );
		return ok;
	} );
	if( !ok ) return rep;
	std::mt19937_64 rng( seed );
	const std::size_t target = rep.samples_run + n_samples;
	const std::size_t max_draws = 1000 * ( n_samples + 1 );
	for( std::size_t d = 0; d < max_draws && rep.samples_run < target; ++d ) {
		const double x = sample( logic, rng ), y = sample( logic, rng ), z = sample( logic, rng );
		if( !try_triple( x, y, z ) ) return rep;
	}
	rep.note = std::to_string( grazing ) + " boundary-grazing triples redrawn";
	if( rep.samples_run < target ) rep.note += "; off-boundary budget not reached";
	return rep;
}

namespace {

Expr formula_side( const Logic &L, AxiomId a, const Expr &x, const Expr &y, const Expr &z, bool left ) {
	const ConnectiveFlags f = L.flag_profile();
	auto A = []( Expr p, Expr q ) { return ast::conj( { std::move( p ), std::move( q ) } ); };
	auto O = []( Expr p, Expr q ) { return ast::disj( { std::move( p ), std::move( q ) } ); };
	auto MA = []( Expr p, Expr q ) { return ast::mand( { std::move( p ), std::move( q ) } ); };
	auto MO = []( Expr p, Expr q ) { return ast::mor( { std::move( p ), std::move( q ) } ); };
	auto N = []( Expr p ) { return ast::neg( std::move( p ) ); };
	switch( a ) {
	case AxiomId::R1: return left ? A( x, y ) : A( y, x );
	case AxiomId::R2: return left ? A( x, A( y, z ) ) : A( A( x, y ), z );
	case AxiomId::R3: return left ? O( x, y ) : O( y, x );
	case AxiomId::R4: return left ? O( x, O( y, z ) ) : O( O( x, y ), z );
	case AxiomId::R5: return left ? A( x, O( x, y ) ) : x;
	case AxiomId::R6: return left ? O( x, A( x, y ) ) : x;
	case AxiomId::R7: return left ? A( x, O( y, z ) ) : O( A( x, y ), A( x, z ) );
	case AxiomId::R8: return left ? MA( x, MA( y, z ) ) : MA( MA( x, y ), z );
	case AxiomId::R9: return left ? MA( x, ast::top( f ) ) : x;
	case AxiomId::N1: return left ? N( x ) : ast::impl( x, ast::bot( f ) );
	case AxiomId::N2: return left ? N( N( x ) ) : x;
	case AxiomId::N3: return left ? N( A( x, y ) ) : O( N( x ), N( y ) );
	case AxiomId::N4: return left ? N( O( x, y ) ) : A( N( x ), N( y ) );
	case AxiomId::M1: return left ? MO( x, MO( y, z ) ) : MO( MO( x, y ), z );
	case AxiomId::M2: return left ? N( MA( x, y ) ) : MO( N( x ), N( y ) );
	case AxiomId::M3: return left ? N( MO( x, y ) ) : MA( N( x ), N( y ) );
	case AxiomId::IDEM_MONOID: return left ? ( f.monoid ? MA( x, x ) : A( x, x ) ) : x;
	case AxiomId::R10: break;
	}
	fail( ErrorCode::Usage, "R10 has no single formula side" );
}

double value_of( const Logic &L, const Expr &e, const Env &env ) {
	if( L.kind() == LogicKind::STLInfty ) return interpret_bool< XReal >( L, e, env ).value();
	return interpret_bool< double >( L, e, env );
}

} // namespace

LawReport check_axiom_formulas( const Logic &logic, AxiomId axiom, std::size_t depth, std::size_t n_samples,
	std::uint64_t seed, double tol ) {
	LawReport rep = base_report( logic, axiom, "formula", tol );
	const std::string why = applicability( logic, axiom );
	if( !why.empty() ) {
		rep.verdict = Verdict::NotApplicable;
		rep.note = why;
		return rep;
	}
	const ConnectiveFlags profile = logic.flag_profile();
	const FormulaOptions opts = FormulaOptions::for_logic( logic );
	const Env env;
	std::mt19937_64 rng( seed );
	const std::size_t arity = axiom_arity( axiom );
	std::size_t grazing = 0;
	for( std::size_t k = 0; k < n_samples; ++k ) {
		std::vector< Expr > m;
		for( std::size_t j = 0; j < 3; ++j ) m.push_back( random_formula( profile, depth, rng, opts ) );
		std::vector< double > vals;
		std::vector< std::string > texts;
		for( std::size_t j = 0; j < arity; ++j ) {
			vals.push_back( value_of( logic, m[ j ], env ) );
			texts.push_back( to_surface( m[ j ] ) );
		}
		if( axiom == AxiomId::R10 ) {
			const double mv = value_of( logic, ast::mand( { m[ 0 ], m[ 1 ] } ), env );
			const double iv = value_of( logic, ast::impl( m[ 0 ], m[ 2 ] ), env );
			if( close( mv, vals[ 2 ], tol ) || close( vals[ 1 ], iv, tol ) ) {
				++grazing;
				continue;
			}
			++rep.samples_run;
			const bool l = mv <= vals[ 2 ], r = vals[ 1 ] <= iv;
			if( l != r ) {
				rep.verdict = Verdict::Counterexample;
				rep.witness = LawWitness { vals, texts, mv, iv, l, r };
				return rep;
			}
			continue;
		}
		++rep.samples_run;
		const double lhs = value_of( logic, formula_side( logic, axiom, m[ 0 ], m[ 1 ], m[ 2 ], true ), env );
		const double rhs = value_of( logic, formula_side( logic, axiom, m[ 0 ], m[ 1 ], m[ 2 ], false ), env );
		const Shape shape = axiom == AxiomId::R7 ? Shape::Le : Shape::Eq;
		if( !sides_ok( lhs, rhs, shape, tol ) ) {
			rep.verdict = Verdict::Counterexample;
			rep.witness = LawWitness { vals, texts, lhs, rhs };
			return rep;
		}
	}
	if( grazing ) rep.note = std::to_string( grazing ) + " boundary-grazing triples skipped";
	return rep;
}

std::vector< Logic > table3_logics() {
	return { Logic::godel(), Logic::lukasiewicz(), Logic::yager( 2.0 ), Logic::product(), Logic::dl2(),
		Logic::stl( 1.0 ), Logic::stl_infty() };
}

const char *table3_column_name( Table3Column c ) noexcept {
	switch( c ) {
	case Table3Column::Residuated: return "R1-R10";
	case Table3Column::NegImpl: return "N1";
	case Table3Column::Involutive: return "N2-N4";
	case Table3Column::MonoidalDual: return "M1-M3";
	case Table3Column::Idempotence: return "IDEM";
	}
	return "?";
}

std::vector< AxiomId > table3_column_axioms( Table3Column c ) {
	switch( c ) {
	case Table3Column::Residuated:
		return { AxiomId::R1, AxiomId::R2, AxiomId::R3, AxiomId::R4, AxiomId::R5, AxiomId::R6, AxiomId::R7,
			AxiomId::R8, AxiomId::R9, AxiomId::R10 };
	case Table3Column::NegImpl: return { AxiomId::N1 };
	case Table3Column::Involutive: return { AxiomId::N2, AxiomId::N3, AxiomId::N4 };
	case Table3Column::MonoidalDual: return { AxiomId::M1, AxiomId::M2, AxiomId::M3 };
	case Table3Column::Idempotence: return { AxiomId::IDEM_MONOID };
	}
	return {};
}

bool table3_expected( const Logic &logic, Table3Column c ) {
	// Columns: R1-R10, N1, N2-N4, M1-M3, IDEM.
	static const bool rows[ 7 ][ 5 ] = {
		{ true, true, false, true, true },      // Goedel
		{ true, true, true, true, false },      // Lukasiewicz
		{ true, true, true, true, false },      // Yager
		{ true, true, false, true, false },     // Product
		{ true, false, false, false, false },   // DL2
		{ false, false, true, false, true },    // STL
		{ true, false, true, true, true },      // STL-inf
	};
	return rows[ static_cast< int >( logic.kind() ) ][ static_cast< int >( c ) ];
}

bool Table3Cell::matches() const {
	if( expected ) return observed;
	if( observed ) return false;
	for( const auto &r : reports ) {
		if( r.verdict == Verdict::Counterexample || r.verdict == Verdict::NotApplicable ) return true;
	}
	return false;
}

bool Table3Matrix::all_match() const {
	for( const auto &row : rows ) {
		for( const auto &c : row.cells ) {
			if( !c.matches() ) return false;
		}
	}
	return true;
}

Table3Row table3_row( const Logic &logic, std::size_t n_samples, double tol, std::uint64_t seed ) {
	Table3Row row;
	row.logic = logic.label();
	for( int c = 0; c < 5; ++c ) {
		Table3Cell cell;
		cell.column = static_cast< Table3Column >( c );
		cell.expected = table3_expected( logic, cell.column );
		cell.observed = true;
		for( AxiomId a : table3_column_axioms( cell.column ) ) {
			cell.reports.push_back( check_axiom_values( logic, a, n_samples, tol, seed + static_cast< int >( a ) ) );
			if( cell.reports.back().verdict != Verdict::Pass ) cell.observed = false;
		}
		row.cells.push_back( std::move( cell ) );
	}
	return row;
}

Table3Matrix table3_matrix( std::uint64_t seed, std::size_t n_samples, double tol, const std::vector< Logic > &logics ) {
	Table3Matrix m;
	m.samples = n_samples;
	m.seed = seed;
	m.tol = tol;
	for( const auto &l : logics ) m.rows.push_back( table3_row( l, n_samples, tol, seed ) );
	return m;
}

json Table3Matrix::to_json() const {
	json rows_j = json::array();
	for( const auto &row : rows ) {
		json cells = json::array();
		for( const auto &c : row.cells ) {
			json reps = json::array();
			for( const auto &r : c.reports ) reps.push_back( r.to_json() );
			cells.push_back( { { "column", table3_column_name( c.column ) }, { "expected", c.expected ? "yes" : "no" },
				{ "observed", c.observed ? "yes" : "no" }, { "matches", c.matches() }, { "reports", reps } } );
		}
		rows_j.push_back( { { "logic", row.logic }, { "cells", cells } } );
	}
	return json { { "samples", samples }, { "seed", seed }, { "tol", tol }, { "rows", rows_j },
		{ "all_match", all_match() } };
}

std::string Table3Matrix::render() const {
	std::ostringstream os;
	os << std::left << std::setw( 18 ) << "logic";
	for( int c = 0; c < 5; ++c ) os << std::setw( 14 ) << table3_column_name( static_cast< Table3Column >( c ) );
	os << "\n";
	for( const auto &row : rows ) {
		os << std::setw( 18 ) << row.logic;
		for( const auto &c : row.cells ) {
			std::string s = c.observed ? "yes" : "no";
			if( !c.matches() ) s += " (exp " + std::string( c.expected ? "yes" : "no" ) + ")";
			os << std::setw( 14 ) << s;
		}
		os << "\n";
	}
	return os.str();
}

PrelinearityProbe yager_prelinearity_probe( double r, double p0, double p1 ) {
	const Logic y = Logic::yager( r );
	PrelinearityProbe p;
	p.residuated = clause::or2( y, clause::impl( y, p0, p1 ), clause::impl( y, p1, p0 ) );
	auto s_impl = [ r ]( double a, double b ) {
		return std::min( num::rpow( num::rpow( 1.0 - a, r ) + num::rpow( b, r ), 1.0 / r ), 1.0 );
	};
	p.s_implication = std::max( s_impl( p0, p1 ), s_impl( p1, p0 ) );
	return p;
}

} // namespace dlc
