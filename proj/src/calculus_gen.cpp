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

#include <dlc/calculus.hpp>
#include <dlc/random_formula.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dlc {

namespace {

using Formulas = std::vector< Expr >;

bool same( const Formulas &a, const Formulas &b ) {
	if( a.size() != b.size() ) return false;
	for( std::size_t i = 0; i < a.size(); ++i ) {
		if( !structurally_equal( a[ i ], b[ i ] ) ) return false;
	}
	return true;
}

template< class V >
V without( V v, std::size_t i ) {
	v.erase( v.begin() + static_cast< std::ptrdiff_t >( i ) );
	return v;
}

template< class V, class X >
V inserted( V v, std::size_t i, X x ) {
	v.insert( v.begin() + static_cast< std::ptrdiff_t >( i ), std::move( x ) );
	return v;
}

template< class V >
V inserted_all( V v, std::size_t i, const V &xs ) {
	v.insert( v.begin() + static_cast< std::ptrdiff_t >( i ), xs.begin(), xs.end() );
	return v;
}

template< class V >
V part( const V &v, std::size_t from, std::size_t to ) {
	return V( v.begin() + static_cast< std::ptrdiff_t >( from ), v.begin() + static_cast< std::ptrdiff_t >( to ) );
}

bool single_conclusion( LogicKind k ) { return k == LogicKind::Godel || k == LogicKind::STLInfty; }

/**
 * Forward generator. `gen(d)` runs d rounds: a round applies one randomly
 * chosen rule to subderivations from earlier rounds. Alignment steps (EW and
 * WeakL that give two premises a common context) are extra nodes.
 */
class Generator {
public:
	Generator( const Calculus &calc, std::mt19937_64 &rng, const DerivationOptions &opt )
		: calc_( calc ), rng_( rng ), opt_( opt ), profile_( calc.logic().flag_profile() ),
		  fopts_( FormulaOptions::for_logic( calc.logic() ) ) {
		fopts_.max_arity = 2;
	}

	ProofTree gen( std::size_t rounds ) {
		if( rounds <= 1 ) return axiom();
		const auto &rules = calc_.rules();
		for( int attempt = 0; attempt < 24; ++attempt ) {
			const RuleId r = rules[ pick( rules.size() ) ];
			if( is_axiom_rule( r ) ) continue;
			if( auto t = try_rule( r, rounds ) ) return std::move( *t );
		}
		return axiom();
	}

	std::size_t pick( std::size_t n ) { return std::uniform_int_distribution< std::size_t >( 0, n - 1 )( rng_ ); }
	std::size_t upto( std::size_t n ) { return std::uniform_int_distribution< std::size_t >( 0, n )( rng_ ); }
	bool coin( double p = 0.5 ) { return std::bernoulli_distribution( p )( rng_ ); }

	Expr formula() { return random_formula( profile_, upto( opt_.formula_depth ), rng_, fopts_ ); }

	Formulas formulas( std::size_t lo, std::size_t hi ) {
		Formulas out;
		const std::size_t n = lo + upto( hi - lo );
		for( std::size_t i = 0; i < n; ++i ) out.push_back( formula() );
		return out;
	}

	Sequent sequent() { return { formulas( 0, opt_.max_context ), formulas( 0, opt_.max_context ) }; }

	std::vector< Sequent > side_components( std::size_t lo, std::size_t hi ) {
		std::vector< Sequent > out;
		const std::size_t n = lo + upto( hi - lo );
		for( std::size_t i = 0; i < n; ++i ) out.push_back( sequent() );
		return out;
	}

	Expr top() const { return ast::top( profile_ ); }
	Expr bot() const { return ast::bot( profile_ ); }
	const Calculus &calc() const { return calc_; }

private:
	ProofTree node( RuleInstance inst, Hypersequent concl, std::vector< ProofTree > premises ) {
		ProofTree t { std::move( concl ), inst, std::move( premises ) };
		std::vector< Hypersequent > ps;
		for( const auto &p : t.premises ) ps.push_back( p.conclusion );
		const CheckResult r = check_step( calc_, t.rule, t.conclusion, ps );
		if( !r.ok ) throw std::logic_error( std::string( "generator built a bad " ) + rule_name( inst.rule ) + ": " + r.message );
		return t;
	}

	ProofTree axiom() {
		std::vector< RuleId > axioms;
		for( RuleId r : calc_.rules() ) {
			if( is_axiom_rule( r ) ) axioms.push_back( r );
		}
		const RuleId r = axioms[ pick( axioms.size() ) ];
		Hypersequent h;
		h.components = side_components( 0, coin( 0.5 ) ? opt_.max_side : 0 );
		const std::size_t c = upto( h.size() );
		RuleInstance inst { r, c };
		Sequent s;
		switch( r ) {
		case RuleId::Init: {
			Expr f = formula();
			s = { { f }, { f } };
			break;
		}
		case RuleId::Emp: break;
		case RuleId::BotL:
			s.left = formulas( 0, opt_.max_context );
			inst.pos = upto( s.left.size() );
			s.left = inserted( s.left, inst.pos, bot() );
			s.right = calc_.kind() == LogicKind::Lukasiewicz ? Formulas { formula() } : formulas( 0, opt_.max_context );
			break;
		case RuleId::TopR:
			s = { formulas( 0, opt_.max_context ), { top() } };
			break;
		default: break;
		}
		h.components = inserted( h.components, c, s );
		return node( inst, std::move( h ), {} );
	}

	ProofTree ew( ProofTree t, std::size_t at, const std::vector< Sequent > &block ) {
		if( block.empty() ) return t;
		Hypersequent h = t.conclusion;
		h.components = inserted_all( h.components, at, block );
		std::vector< ProofTree > ps;
		ps.push_back( std::move( t ) );
		return node( { RuleId::EW, at, 0, block.size() }, std::move( h ), std::move( ps ) );
	}

	ProofTree weaken( ProofTree t, std::size_t c, std::size_t pos, const Formulas &block ) {
		if( block.empty() ) return t;
		Hypersequent h = t.conclusion;
		h.components[ c ].left = inserted_all( h.components[ c ].left, pos, block );
		std::vector< ProofTree > ps;
		ps.push_back( std::move( t ) );
		return node( { RuleId::WeakL, c, pos, block.size() }, std::move( h ), std::move( ps ) );
	}

	ProofTree unary( RuleInstance inst, Hypersequent concl, ProofTree sub ) {
		std::vector< ProofTree > ps;
		ps.push_back( std::move( sub ) );
		return node( inst, std::move( concl ), std::move( ps ) );
	}

	ProofTree binary( RuleInstance inst, Hypersequent concl, ProofTree a, ProofTree b ) {
		std::vector< ProofTree > ps;
		ps.push_back( std::move( a ) );
		ps.push_back( std::move( b ) );
		return node( inst, std::move( concl ), std::move( ps ) );
	}

	/** Both trees end in P1 P2 S Q1 Q2 with their own S at index |P1|+|P2|. */
	struct Aligned {
		ProofTree a, b;
		std::size_t c;
	};

	Aligned align( ProofTree a, std::size_t ca, ProofTree b, std::size_t cb ) {
		const auto &ha = a.conclusion.components;
		const auto &hb = b.conclusion.components;
		const auto p1 = part( ha, 0, ca ), q1 = part( ha, ca + 1, ha.size() );
		const auto p2 = part( hb, 0, cb ), q2 = part( hb, cb + 1, hb.size() );
		const std::size_t c = p1.size() + p2.size();
		a = ew( std::move( a ), p1.size(), p2 );
		a = ew( std::move( a ), c + 1 + q1.size(), q2 );
		b = ew( std::move( b ), 0, p1 );
		b = ew( std::move( b ), c + 1, q1 );
		return { std::move( a ), std::move( b ), c };
	}

	template< class Pred >
	std::optional< std::size_t > find_component( const Hypersequent &h, Pred pred ) {
		std::vector< std::size_t > ok;
		for( std::size_t i = 0; i < h.size(); ++i ) {
			if( pred( h.components[ i ] ) ) ok.push_back( i );
		}
		if( ok.empty() ) return std::nullopt;
		return ok[ pick( ok.size() ) ];
	}

	ProofTree emp_with_context( const Hypersequent &like, std::size_t c ) {
		Hypersequent h = like;
		h.components[ c ] = {};
		return node( { RuleId::Emp, c }, std::move( h ), {} );
	}

	std::optional< ProofTree > try_rule( RuleId r, std::size_t rounds ) {
		const LogicKind kind = calc_.kind();
		const std::size_t d = rounds - 1;
		switch( r ) {
		case RuleId::EW: {
			ProofTree sub = gen( d );
			auto block = side_components( 1, std::max< std::size_t >( 1, opt_.max_side ) );
			const std::size_t at = upto( sub.conclusion.size() );
			return ew( std::move( sub ), at, block );
		}
		case RuleId::EC: {
			ProofTree sub = gen( d );
			const std::size_t n = sub.conclusion.size();
			const std::size_t c = pick( n );
			const std::size_t k = 1 + pick( n - c );
			const auto block = part( sub.conclusion.components, c, c + k );
			Hypersequent concl = sub.conclusion;
			ProofTree dup = ew( std::move( sub ), c + k, block );
			return unary( { RuleId::EC, c, 0, k }, std::move( concl ), std::move( dup ) );
		}
		case RuleId::EEx: {
			ProofTree sub = gen( d );
			if( sub.conclusion.size() < 2 ) return std::nullopt;
			const std::size_t c = pick( sub.conclusion.size() - 1 );
			Hypersequent concl = sub.conclusion;
			std::swap( concl.components[ c ], concl.components[ c + 1 ] );
			return unary( { RuleId::EEx, c }, std::move( concl ), std::move( sub ) );
		}
		case RuleId::WeakL: {
			ProofTree sub = gen( d );
			const std::size_t c = pick( sub.conclusion.size() );
			const std::size_t pos = upto( sub.conclusion.components[ c ].left.size() );
			return weaken( std::move( sub ), c, pos, formulas( 1, std::max< std::size_t >( 1, opt_.max_context ) ) );
		}
		case RuleId::ContrL: {
			ProofTree sub = gen( d );
			auto c = find_component( sub.conclusion, []( const Sequent &s ) { return !s.left.empty(); } );
			if( !c ) return std::nullopt;
			const auto &left = sub.conclusion.components[ *c ].left;
			const std::size_t pos = pick( left.size() );
			const std::size_t k = 1 + pick( left.size() - pos );
			const auto block = part( left, pos, pos + k );
			Hypersequent concl = sub.conclusion;
			ProofTree dup = weaken( std::move( sub ), *c, pos + k, block );
			return unary( { RuleId::ContrL, *c, pos, k }, std::move( concl ), std::move( dup ) );
		}
		case RuleId::LEx:
		case RuleId::REx: {
			const bool left = r == RuleId::LEx;
			ProofTree sub = gen( d );
			auto c = find_component( sub.conclusion,
				[ left ]( const Sequent &s ) { return ( left ? s.left : s.right ).size() >= 2; } );
			if( !c ) return std::nullopt;
			Hypersequent concl = sub.conclusion;
			auto &side = left ? concl.components[ *c ].left : concl.components[ *c ].right;
			const std::size_t pos = pick( side.size() - 1 );
			std::swap( side[ pos ], side[ pos + 1 ] );
			return unary( { r, *c, pos }, std::move( concl ), std::move( sub ) );
		}
		case RuleId::Split: {
			ProofTree sub = gen( d );
			const std::size_t c = pick( sub.conclusion.size() );
			const Sequent s = sub.conclusion.components[ c ];
			const std::size_t k1 = upto( s.left.size() ), k2 = upto( s.right.size() );
			Sequent a { part( s.left, 0, k1 ), part( s.right, 0, k2 ) };
			Sequent b { part( s.left, k1, s.left.size() ), part( s.right, k2, s.right.size() ) };
			Hypersequent concl = sub.conclusion;
			concl.components[ c ] = a;
			concl.components = inserted( concl.components, c + 1, b );
			return unary( { RuleId::Split, c, 0, 1, k1, k2 }, std::move( concl ), std::move( sub ) );
		}
		case RuleId::LAnd:
		case RuleId::ROr: {
			const bool left = r == RuleId::LAnd;
			ProofTree sub = gen( d );
			const bool single = !left && single_conclusion( kind );
			auto c = find_component( sub.conclusion, [ & ]( const Sequent &s ) {
				return left ? !s.left.empty() : ( single ? s.right.size() == 1 : !s.right.empty() );
			} );
			if( !c ) return std::nullopt;
			const Sequent s = sub.conclusion.components[ *c ];
			const auto &side = left ? s.left : s.right;
			const std::size_t pos = pick( side.size() );
			Formulas children { side[ pos ] };
			std::vector< Sequent > extra;
			const std::size_t k = 1 + pick( 2 );
			for( std::size_t j = 0; j < k; ++j ) {
				Expr f = formula();
				children.push_back( f );
				Sequent e = s;
				( left ? e.left : e.right )[ pos ] = f;
				extra.push_back( e );
			}
			ProofTree prem = ew( std::move( sub ), *c + 1, extra );
			Hypersequent concl = prem.conclusion;
			concl.components.erase( concl.components.begin() + static_cast< std::ptrdiff_t >( *c + 1 ),
				concl.components.begin() + static_cast< std::ptrdiff_t >( *c + 1 + k ) );
			( left ? concl.components[ *c ].left : concl.components[ *c ].right )[ pos ] =
				left ? ast::conj( children ) : ast::disj( children );
			return unary( { r, *c, pos }, std::move( concl ), std::move( prem ) );
		}
		case RuleId::RImpl: {
			if( single_conclusion( kind ) ) {
				ProofTree sub = gen( d );
				auto c = find_component( sub.conclusion,
					[]( const Sequent &s ) { return !s.left.empty() && s.right.size() == 1; } );
				if( !c ) return std::nullopt;
				const Sequent s = sub.conclusion.components[ *c ];
				Hypersequent concl = sub.conclusion;
				concl.components[ *c ] = { without( s.left, s.left.size() - 1 ), { ast::impl( s.left.back(), s.right[ 0 ] ) } };
				return unary( { r, *c, 0 }, std::move( concl ), std::move( sub ) );
			}
			ProofTree d2 = gen( d );
			auto c2 = find_component( d2.conclusion, []( const Sequent &s ) { return !s.left.empty() && !s.right.empty(); } );
			if( !c2 ) return std::nullopt;
			const Sequent s2 = d2.conclusion.components[ *c2 ];
			const Expr a = s2.left.back();
			const Formulas gamma = without( s2.left, s2.left.size() - 1 );
			const std::size_t pos = pick( s2.right.size() );
			const Formulas delta = without( s2.right, pos );
			std::optional< Aligned > al;
			if( delta.empty() ) {
				ProofTree p1 = weaken( emp_with_context( d2.conclusion, *c2 ), *c2, 0, gamma );
				al = Aligned { std::move( p1 ), std::move( d2 ), *c2 };
			} else {
				ProofTree d1 = gen( d );
				auto c1 = find_component( d1.conclusion, [ & ]( const Sequent &s ) { return same( s.right, delta ); } );
				if( !c1 ) return std::nullopt;
				const Formulas l1 = d1.conclusion.components[ *c1 ].left;
				al = align( std::move( d1 ), *c1, std::move( d2 ), *c2 );
				al->a = weaken( std::move( al->a ), al->c, l1.size(), gamma );
				al->b = weaken( std::move( al->b ), al->c, 0, l1 );
			}
			Hypersequent concl = al->b.conclusion;
			Sequent &s = concl.components[ al->c ];
			const Expr b = s.right[ pos ];
			s.left.pop_back();
			s.right[ pos ] = ast::impl( a, b );
			return binary( { r, al->c, pos }, std::move( concl ), std::move( al->a ), std::move( al->b ) );
		}
		case RuleId::LImpl:
			return limpl( d );
		case RuleId::LNeg: {
			ProofTree sub = gen( d );
			auto c = find_component( sub.conclusion, []( const Sequent &s ) { return s.right.size() == 1; } );
			if( !c ) return std::nullopt;
			const Sequent s = sub.conclusion.components[ *c ];
			const std::size_t pos = upto( s.left.size() );
			Hypersequent concl = sub.conclusion;
			concl.components[ *c ] = { inserted( s.left, pos, ast::neg( s.right[ 0 ] ) ), formulas( 0, opt_.max_context ) };
			return unary( { r, *c, pos }, std::move( concl ), std::move( sub ) );
		}
		case RuleId::LOdot:
		case RuleId::ROdot: {
			const bool left = r == RuleId::LOdot;
			if( !left && kind == LogicKind::DL2 ) return dl2_rodot( d );
			ProofTree sub = gen( d );
			auto c = find_component( sub.conclusion,
				[ left ]( const Sequent &s ) { return ( left ? s.left : s.right ).size() >= 2; } );
			if( !c ) return std::nullopt;
			Hypersequent concl = sub.conclusion;
			auto &side = left ? concl.components[ *c ].left : concl.components[ *c ].right;
			const std::size_t pos = pick( side.size() - 1 );
			const Expr m = ast::mand( { side[ pos ], side[ pos + 1 ] } );
			side.erase( side.begin() + static_cast< std::ptrdiff_t >( pos + 1 ) );
			side[ pos ] = m;
			return unary( { r, *c, pos }, std::move( concl ), std::move( sub ) );
		}
		case RuleId::Com:
		case RuleId::Mix: {
			ProofTree d1 = gen( d ), d2 = gen( d );
			const std::size_t c1 = pick( d1.conclusion.size() ), c2 = pick( d2.conclusion.size() );
			const Sequent s1 = d1.conclusion.components[ c1 ], s2 = d2.conclusion.components[ c2 ];
			Aligned al = align( std::move( d1 ), c1, std::move( d2 ), c2 );
			Hypersequent concl = al.a.conclusion;
			RuleInstance inst { r, al.c };
			if( r == RuleId::Mix ) {
				concl.components[ al.c ] = { concat( s1.left, s2.left ), concat( s1.right, s2.right ) };
				inst.k1 = s1.left.size();
				inst.k2 = s1.right.size();
			} else {
				const std::size_t k = upto( s1.left.size() ), m = upto( s2.left.size() );
				Sequent x { concat( part( s1.left, 0, k ), part( s2.left, 0, m ) ), s1.right };
				Sequent y { concat( part( s1.left, k, s1.left.size() ), part( s2.left, m, s2.left.size() ) ), s2.right };
				concl.components[ al.c ] = x;
				concl.components = inserted( concl.components, al.c + 1, y );
				inst.k1 = k;
				inst.k2 = s1.left.size() - k;
			}
			return binary( inst, std::move( concl ), std::move( al.a ), std::move( al.b ) );
		}
		case RuleId::RAnd:
		case RuleId::LOr:
			return shared_context_binary( r, d );
		default:
			return std::nullopt;
		}
	}

	static Formulas concat( Formulas a, const Formulas &b ) {
		a.insert( a.end(), b.begin(), b.end() );
		return a;
	}

	/** R∧ on right[0] of both premises; L∨ takes φ0 last in Γ₁ and φ1 first in Γ₂. */
	std::optional< ProofTree > shared_context_binary( RuleId r, std::size_t d ) {
		const bool single = single_conclusion( calc_.kind() );
		ProofTree d1 = gen( d );
		ProofTree d2 = gen( d );
		if( r == RuleId::RAnd ) {
			// Premises Γ ⊢ φi, Δ with Δ shared; single-conclusion calculi force Δ empty.
			for( std::size_t i = 0; i < d1.conclusion.size(); ++i ) {
				for( std::size_t j = 0; j < d2.conclusion.size(); ++j ) {
					const Sequent &s1 = d1.conclusion.components[ i ], &s2 = d2.conclusion.components[ j ];
					if( s1.right.empty() || s2.right.empty() ) continue;
					if( single && ( s1.right.size() != 1 || s2.right.size() != 1 ) ) continue;
					if( !same( without( s1.right, 0 ), without( s2.right, 0 ) ) ) continue;
					const Formulas l1 = s1.left, l2 = s2.left;
					const Expr a = s1.right[ 0 ], b = s2.right[ 0 ];
					Aligned al = align( std::move( d1 ), i, std::move( d2 ), j );
					al.a = weaken( std::move( al.a ), al.c, l1.size(), l2 );
					al.b = weaken( std::move( al.b ), al.c, 0, l1 );
					Hypersequent concl = al.a.conclusion;
					concl.components[ al.c ].right[ 0 ] = ast::conj( { a, b } );
					return binary( { r, al.c, 0 }, std::move( concl ), std::move( al.a ), std::move( al.b ) );
				}
			}
			// Same subderivation twice: φ ∧ φ with any shared context.
			auto c = find_component( d1.conclusion,
				[ single ]( const Sequent &s ) { return single ? s.right.size() == 1 : !s.right.empty(); } );
			if( !c ) return std::nullopt;
			const std::size_t pos = pick( d1.conclusion.components[ *c ].right.size() );
			Hypersequent concl = d1.conclusion;
			Expr &f = concl.components[ *c ].right[ pos ];
			f = ast::conj( { f, f } );
			ProofTree copy = d1;
			return binary( { r, *c, pos }, std::move( concl ), std::move( d1 ), std::move( copy ) );
		}
		// L∨: premises Γ, φi ⊢ Δ.
		for( std::size_t i = 0; i < d1.conclusion.size(); ++i ) {
			for( std::size_t j = 0; j < d2.conclusion.size(); ++j ) {
				const Sequent &s1 = d1.conclusion.components[ i ], &s2 = d2.conclusion.components[ j ];
				if( s1.left.empty() || s2.left.empty() || !same( s1.right, s2.right ) ) continue;
				const Formulas l1 = s1.left, l2 = s2.left;
				const std::size_t pos = l1.size() - 1;
				const Expr a = l1.back(), b = l2.front();
				Aligned al = align( std::move( d1 ), i, std::move( d2 ), j );
				al.a = weaken( std::move( al.a ), al.c, l1.size(), without( l2, 0 ) );
				al.b = weaken( std::move( al.b ), al.c, 0, without( l1, pos ) );
				Hypersequent concl = al.a.conclusion;
				concl.components[ al.c ].left[ pos ] = ast::disj( { a, b } );
				return binary( { r, al.c, pos }, std::move( concl ), std::move( al.a ), std::move( al.b ) );
			}
		}
		auto c = find_component( d1.conclusion, []( const Sequent &s ) { return !s.left.empty(); } );
		if( !c ) return std::nullopt;
		const std::size_t pos = pick( d1.conclusion.components[ *c ].left.size() );
		Hypersequent concl = d1.conclusion;
		const Expr a = concl.components[ *c ].left[ pos ];
		if( calc_.has( RuleId::BotL ) ) {
			// Second premise closed by the bot axiom: φ ∨ ⊥.
			Hypersequent h = d1.conclusion;
			h.components[ *c ].left[ pos ] = bot();
			ProofTree leaf = node( { RuleId::BotL, *c, pos }, std::move( h ), {} );
			concl.components[ *c ].left[ pos ] = ast::disj( { a, bot() } );
			return binary( { r, *c, pos }, std::move( concl ), std::move( d1 ), std::move( leaf ) );
		}
		concl.components[ *c ].left[ pos ] = ast::disj( { a, a } );
		ProofTree copy = d1;
		return binary( { r, *c, pos }, std::move( concl ), std::move( d1 ), std::move( copy ) );
	}

	std::optional< ProofTree > limpl( std::size_t d ) {
		const LogicKind kind = calc_.kind();
		if( kind == LogicKind::Lukasiewicz ) {
			ProofTree sub = gen( d );
			auto c = find_component( sub.conclusion, []( const Sequent &s ) { return !s.left.empty() && !s.right.empty(); } );
			if( !c ) return std::nullopt;
			const Sequent s = sub.conclusion.components[ *c ];
			const std::size_t pos = pick( s.left.size() );
			Hypersequent concl = sub.conclusion;
			concl.components[ *c ] = { s.left, without( s.right, 0 ) };
			concl.components[ *c ].left[ pos ] = ast::impl( s.right[ 0 ], s.left[ pos ] );
			return unary( { RuleId::LImpl, *c, pos }, std::move( concl ), std::move( sub ) );
		}
		if( kind == LogicKind::Product ) {
			// Both premises from one derivation of Γ ⊢ φ0: L¬ gives Γ, ¬φ0 ⊢, weakening gives Γ, φ1 ⊢ φ0.
			ProofTree sub = gen( d );
			auto c = find_component( sub.conclusion, []( const Sequent &s ) { return s.right.size() == 1; } );
			if( !c ) return std::nullopt;
			const Sequent s = sub.conclusion.components[ *c ];
			const std::size_t pos = upto( s.left.size() );
			const Expr a = s.right[ 0 ], b = formula();
			Hypersequent neg_h = sub.conclusion;
			neg_h.components[ *c ] = { inserted( s.left, pos, ast::neg( a ) ), {} };
			ProofTree copy = sub;
			ProofTree p1 = unary( { RuleId::LNeg, *c, pos }, std::move( neg_h ), std::move( copy ) );
			ProofTree p2 = weaken( std::move( sub ), *c, pos, { b } );
			Hypersequent concl = p1.conclusion;
			concl.components[ *c ].left[ pos ] = ast::impl( a, b );
			return binary( { RuleId::LImpl, *c, pos }, std::move( concl ), std::move( p1 ), std::move( p2 ) );
		}
		if( single_conclusion( kind ) ) {
			ProofTree d1 = gen( d ), d2 = gen( d );
			auto c1 = find_component( d1.conclusion, []( const Sequent &s ) { return s.right.size() == 1; } );
			auto c2 = find_component( d2.conclusion, []( const Sequent &s ) { return !s.left.empty(); } );
			if( !c1 || !c2 ) return std::nullopt;
			const Formulas l1 = d1.conclusion.components[ *c1 ].left;
			const Formulas l2 = d2.conclusion.components[ *c2 ].left;
			const Expr a = d1.conclusion.components[ *c1 ].right[ 0 ], b = l2.front();
			Aligned al = align( std::move( d1 ), *c1, std::move( d2 ), *c2 );
			al.a = weaken( std::move( al.a ), al.c, l1.size(), without( l2, 0 ) );
			al.b = weaken( std::move( al.b ), al.c, 0, l1 );
			Hypersequent concl = al.b.conclusion;
			concl.components[ al.c ].left[ l1.size() ] = ast::impl( a, b );
			return binary( { RuleId::LImpl, al.c, l1.size() }, std::move( concl ), std::move( al.a ), std::move( al.b ) );
		}
		// DL2: premises Γ ⊢ Δ and Γ, φ1 ⊢ φ0, Δ; the first comes from emp when Δ is empty.
		ProofTree d2 = gen( d );
		auto c2 = find_component( d2.conclusion, []( const Sequent &s ) { return !s.left.empty() && !s.right.empty(); } );
		if( !c2 ) return std::nullopt;
		const Sequent s2 = d2.conclusion.components[ *c2 ];
		const std::size_t p = pick( s2.left.size() );
		const Formulas gamma = without( s2.left, p );
		const Formulas delta = without( s2.right, 0 );
		std::optional< Aligned > al;
		std::size_t pos = p;
		if( delta.empty() ) {
			ProofTree p1 = weaken( emp_with_context( d2.conclusion, *c2 ), *c2, 0, gamma );
			al = Aligned { std::move( p1 ), std::move( d2 ), *c2 };
		} else {
			ProofTree d1 = gen( d );
			auto c1 = find_component( d1.conclusion, [ & ]( const Sequent &s ) { return same( s.right, delta ); } );
			if( !c1 ) return std::nullopt;
			const Formulas l1 = d1.conclusion.components[ *c1 ].left;
			al = align( std::move( d1 ), *c1, std::move( d2 ), *c2 );
			al->a = weaken( std::move( al->a ), al->c, l1.size(), gamma );
			al->b = weaken( std::move( al->b ), al->c, 0, l1 );
			pos = l1.size() + p;
		}
		Hypersequent concl = al->b.conclusion;
		Sequent &s = concl.components[ al->c ];
		s.left[ pos ] = ast::impl( s.right[ 0 ], s.left[ pos ] );
		s.right.erase( s.right.begin() );
		return binary( { RuleId::LImpl, al->c, pos }, std::move( concl ), std::move( al->a ), std::move( al->b ) );
	}

	std::optional< ProofTree > dl2_rodot( std::size_t d ) {
		ProofTree d1 = gen( d ), d2 = gen( d );
		auto nonempty_right = []( const Sequent &s ) { return !s.right.empty(); };
		auto c1 = find_component( d1.conclusion, nonempty_right );
		auto c2 = find_component( d2.conclusion, nonempty_right );
		if( !c1 || !c2 ) return std::nullopt;
		const Sequent s1 = d1.conclusion.components[ *c1 ], s2 = d2.conclusion.components[ *c2 ];
		Aligned al = align( std::move( d1 ), *c1, std::move( d2 ), *c2 );
		Formulas rest = concat( without( s1.right, 0 ), without( s2.right, 0 ) );
		const std::size_t pos = upto( rest.size() );
		Hypersequent concl = al.a.conclusion;
		concl.components[ al.c ] = { concat( s1.left, s2.left ),
			inserted( rest, pos, ast::mand( { s1.right[ 0 ], s2.right[ 0 ] } ) ) };
		return binary( { RuleId::ROdot, al.c, pos, 1, s1.left.size(), s1.right.size() - 1 }, std::move( concl ),
			std::move( al.a ), std::move( al.b ) );
	}

	const Calculus &calc_;
	std::mt19937_64 &rng_;
	DerivationOptions opt_;
	ConnectiveFlags profile_;
	FormulaOptions fopts_;
};

void visit( const ProofTree &t, const std::function< void( const ProofTree & ) > &f ) {
	f( t );
	for( const auto &p : t.premises ) visit( p, f );
}

} // namespace

ProofTree random_derivation( const Calculus &calc, std::uint64_t seed, std::size_t depth,
	const DerivationOptions &options ) {
	if( depth == 0 ) fail( ErrorCode::Usage, "derivation depth must be >= 1" );
	std::mt19937_64 rng( seed );
	Generator g( calc, rng, options );
	return g.gen( depth );
}

nlohmann::json SoundnessReport::to_json() const {
	nlohmann::json counts = nlohmann::json::object();
	for( std::size_t i = 0; i < rule_counts.size(); ++i ) {
		if( rule_counts[ i ] ) counts[ rule_name( static_cast< RuleId >( i ) ) ] = rule_counts[ i ];
	}
	nlohmann::json v = nlohmann::json::array();
	for( const auto &x : violations ) {
		v.push_back( { { "trial_seed", x.trial_seed }, { "conclusion", x.conclusion }, { "rule", x.rule } } );
	}
	return { { "logic", logic }, { "trials", trials }, { "max_depth", max_depth }, { "seed", seed }, { "tol", tol },
		{ "total_nodes", total_nodes }, { "rule_counts", counts }, { "violations", v }, { "passed", passed() } };
}

SoundnessReport soundness_fuzz( const Calculus &calc, std::size_t trials, std::size_t max_depth, std::uint64_t seed,
	double tol ) {
	SoundnessReport rep;
	rep.logic = calc.logic().label();
	rep.trials = trials;
	rep.max_depth = max_depth;
	rep.seed = seed;
	rep.tol = tol;
	rep.rule_counts.assign( static_cast< std::size_t >( RuleId::Hyp ) + 1, 0 );
	const Env env;
	for( std::size_t t = 0; t < trials; ++t ) {
		const std::uint64_t s = seed + t;
		const ProofTree tree = random_derivation( calc, s, 1 + t % std::max< std::size_t >( 1, max_depth ) );
		visit( tree, [ & ]( const ProofTree &n ) {
			++rep.total_nodes;
			++rep.rule_counts[ static_cast< std::size_t >( n.rule.rule ) ];
			if( !hypersequent_holds( calc.logic(), n.conclusion, env, tol ) ) {
				rep.violations.push_back( { s, n.conclusion.to_string(), rule_name( n.rule.rule ) } );
			}
		} );
	}
	return rep;
}

std::pair< RuleInstance, Hypersequent > random_rule_instance( const Calculus &calc, RuleId rule, std::mt19937_64 &rng,
	const DerivationOptions &options ) {
	Generator g( calc, rng, options );
	const LogicKind kind = calc.kind();
	Hypersequent h;
	h.components.push_back( g.sequent() );
	for( std::size_t i = g.upto( 2 ); i > 0; --i ) h.components.push_back( g.sequent() );
	const bool two = rule == RuleId::EW || rule == RuleId::EEx || rule == RuleId::Com || rule == RuleId::Split;
	if( two && h.size() < 2 ) h.components.push_back( g.sequent() );
	const std::size_t n = h.size();
	RuleInstance inst { rule };
	inst.comp = g.pick( two ? n - 1 : n );
	Sequent &s = h.components[ inst.comp ];
	auto ensure = [ & ]( Formulas &side, std::size_t k ) {
		while( side.size() < k ) side.push_back( g.formula() );
	};
	auto binary_children = [ & ]() { return Formulas { g.formula(), g.formula() }; };
	auto place = [ & ]( bool left, Expr f ) {
		auto &side = left ? s.left : s.right;
		inst.pos = g.upto( side.size() );
		side = inserted( side, inst.pos, std::move( f ) );
	};
	const bool single = single_conclusion( kind );
	switch( rule ) {
	case RuleId::Init: {
		Expr f = g.formula();
		s = { { f }, { f } };
		break;
	}
	case RuleId::Emp: s = {}; break;
	case RuleId::BotL:
		place( true, g.bot() );
		if( kind == LogicKind::Lukasiewicz ) s.right = { g.formula() };
		break;
	case RuleId::TopR: s.right = { g.top() }; break;
	case RuleId::EW:
		inst.count = 1 + g.pick( n - inst.comp - 1 );
		break;
	case RuleId::EC: inst.count = 1 + g.pick( n - inst.comp ); break;
	case RuleId::EEx: break;
	case RuleId::Com:
		inst.k1 = g.upto( s.left.size() );
		inst.k2 = g.upto( h.components[ inst.comp + 1 ].left.size() );
		break;
	case RuleId::Split:
		inst.k1 = s.left.size();
		inst.k2 = s.right.size();
		break;
	case RuleId::Mix:
		inst.k1 = g.upto( s.left.size() );
		inst.k2 = g.upto( s.right.size() );
		break;
	case RuleId::WeakL:
	case RuleId::ContrL:
		ensure( s.left, 1 );
		inst.pos = g.pick( s.left.size() );
		inst.count = 1 + g.pick( s.left.size() - inst.pos );
		break;
	case RuleId::LEx:
		ensure( s.left, 2 );
		inst.pos = g.pick( s.left.size() - 1 );
		break;
	case RuleId::REx:
		ensure( s.right, 2 );
		inst.pos = g.pick( s.right.size() - 1 );
		break;
	case RuleId::LAnd: place( true, ast::conj( binary_children() ) ); break;
	case RuleId::LOr: place( true, ast::disj( binary_children() ) ); break;
	case RuleId::LImpl:
	case RuleId::LImplExt: place( true, ast::impl( g.formula(), g.formula() ) ); break;
	case RuleId::LNeg: place( true, ast::neg( g.formula() ) ); break;
	case RuleId::LOdot: place( true, ast::mand( binary_children() ) ); break;
	case RuleId::RAnd:
	case RuleId::ROr:
	case RuleId::RImpl: {
		Expr f = rule == RuleId::RAnd ? ast::conj( binary_children() )
			: rule == RuleId::ROr    ? ast::disj( binary_children() )
									 : ast::impl( g.formula(), g.formula() );
		if( single ) {
			s.right = { f };
			inst.pos = 0;
		} else {
			place( false, f );
		}
		break;
	}
	case RuleId::ROdot:
		place( false, ast::mand( binary_children() ) );
		if( kind == LogicKind::DL2 ) {
			inst.k1 = g.upto( s.left.size() );
			inst.k2 = g.upto( s.right.size() - 1 );
		}
		break;
	case RuleId::Hyp: break;
	}
	return { inst, h };
}

std::vector< RuleSoundness > rule_local_soundness( const Calculus &calc, std::size_t instances, std::uint64_t seed,
	double tol ) {
	const Env env;
	const Logic &logic = calc.logic();
	std::vector< RuleSoundness > out;
	std::vector< RuleId > rules = calc.rules();
	if( calc.kind() == LogicKind::Lukasiewicz ) rules.push_back( RuleId::LImplExt );
	for( RuleId r : rules ) {
		RuleSoundness rs;
		rs.rule = r;
		std::mt19937_64 rng( seed ^ ( 0x9e3779b97f4a7c15ULL * ( static_cast< std::uint64_t >( r ) + 1 ) ) );
		for( std::size_t i = 0; i < instances; ++i ) {
			auto [ inst, concl ] = random_rule_instance( calc, r, rng );
			const auto premises = expected_premises( calc, inst, concl );
			++rs.instances;
			bool held = true;
			for( const auto &p : premises ) held = held && hypersequent_holds( logic, p, env, tol );
			if( !held ) continue;
			++rs.premises_held;
			if( !hypersequent_holds( logic, concl, env, tol ) ) {
				if( rs.violations++ == 0 ) rs.witness = concl.to_string();
			}
		}
		out.push_back( rs );
	}
	return out;
}

} // namespace dlc
