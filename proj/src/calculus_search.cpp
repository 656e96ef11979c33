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
#include <dlc/spec.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <unordered_map>

namespace dlc {

namespace {

// Semantic pruning. Provable hypersequents hold under every valuation of their
// atoms, so a premise that fails under one sampled valuation is never searched.
// Atoms (non-connective formulas) get values from a per-logic grid keyed by
// their structural hash; the grid includes the boundary values where the
// rules with side conditions (Gödel negation, STL-inf implication) switch.

constexpr std::size_t kValuations = 24;
// Hard cap on expanded nodes per prove_bounded call.
constexpr std::size_t kNodeCap = 4'000'000;

std::vector< double > value_grid( LogicKind k ) {
	switch( k ) {
	case LogicKind::DL2: return { 0.0, -0.25, -0.5, -1.0, -2.0, -3.5 };
	case LogicKind::STLInfty: return { -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0 };
	default: return { 0.0, 0.2, 0.4, 0.5, 0.7, 0.9, 1.0 };
	}
}

std::uint64_t splitmix( std::uint64_t x ) {
	x += 0x9e3779b97f4a7c15ULL;
	x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ULL;
	x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebULL;
	return x ^ ( x >> 31 );
}

class Valuation {
public:
	Valuation( const Logic &logic, std::size_t index ) : logic_( logic ), grid_( value_grid( logic.kind() ) ), index_( index ) {}

	double eval( const Expr &e ) const {
		if( logic_.kind() == LogicKind::STLInfty ) return eval_as< XReal >( e ).value();
		return eval_as< double >( e );
	}

	/** Same side combinations as sequent_holds. */
	bool holds( const Sequent &s ) const {
		double a = 0.0, b = 0.0;
		switch( logic_.kind() ) {
		case LogicKind::Godel:
			a = 1.0;
			for( const auto &f : s.left ) a = std::min( a, eval( f ) );
			for( const auto &f : s.right ) b = std::max( b, eval( f ) );
			break;
		case LogicKind::Lukasiewicz:
			a = b = 1.0;
			for( const auto &f : s.left ) a += eval( f ) - 1.0;
			for( const auto &f : s.right ) b += eval( f ) - 1.0;
			break;
		case LogicKind::Product:
			a = b = 1.0;
			for( const auto &f : s.left ) a *= eval( f );
			for( const auto &f : s.right ) b *= eval( f );
			break;
		case LogicKind::DL2:
			for( const auto &f : s.left ) a += eval( f );
			for( const auto &f : s.right ) b += eval( f );
			break;
		default:
			a = std::numeric_limits< double >::infinity();
			b = -a;
			for( const auto &f : s.left ) a = std::min( a, eval( f ) );
			for( const auto &f : s.right ) b = std::max( b, eval( f ) );
			return a <= b;
		}
		return a <= b + 1e-9;
	}

private:
	template< class T >
	T eval_as( const Expr &e ) const {
		switch( e->kind ) {
		case NodeKind::BoolConst: return e->bval ? clause::top< T >( logic_ ) : clause::bot< T >( logic_ );
		case NodeKind::And: return fold< T >( e, []( const Logic &l, T a, T b ) { return clause::and2( l, a, b ); } );
		case NodeKind::Or: return fold< T >( e, []( const Logic &l, T a, T b ) { return clause::or2( l, a, b ); } );
		case NodeKind::MAnd: return fold< T >( e, []( const Logic &l, T a, T b ) { return clause::mand2( l, a, b ); } );
		case NodeKind::MOr: return fold< T >( e, []( const Logic &l, T a, T b ) { return clause::mor2( l, a, b ); } );
		case NodeKind::Not: return clause::neg( logic_, eval_as< T >( e->children[ 0 ] ) );
		case NodeKind::Impl: return clause::impl( logic_, eval_as< T >( e->children[ 0 ] ), eval_as< T >( e->children[ 1 ] ) );
		default: {
			const std::uint64_t h = splitmix( structural_hash( e ) ^ splitmix( index_ ) );
			return T( grid_[ h % grid_.size() ] );
		}
		}
	}

	template< class T, class F >
	T fold( const Expr &e, F f ) const {
		T acc = eval_as< T >( e->children[ 0 ] );
		for( std::size_t i = 1; i < e->children.size(); ++i ) acc = f( logic_, acc, eval_as< T >( e->children[ i ] ) );
		return acc;
	}

	const Logic &logic_;
	std::vector< double > grid_;
	std::size_t index_;
};

class Searcher {
public:
	Searcher( const Calculus &calc, SearchStats &stats ) : calc_( calc ), stats_( stats ) {
		for( std::size_t i = 0; i < kValuations; ++i ) valuations_.emplace_back( calc.logic(), i );
	}

	std::optional< ProofTree > prove( const Hypersequent &h, std::size_t depth, std::size_t streak ) {
		if( depth == 0 || stats_.nodes >= kNodeCap ) return std::nullopt;
		++stats_.nodes;
		if( !valid( h ) ) return std::nullopt;
		const Key key { h, streak };
		if( auto it = failed_.find( key ); it != failed_.end() && it->second >= depth ) {
			++stats_.memo_hits;
			return std::nullopt;
		}
		auto found = expand( h, depth, streak );
		if( !found ) {
			auto &d = failed_[ key ];
			d = std::max( d, depth );
		}
		return found;
	}

private:
	bool valid( const Hypersequent &h ) {
		for( const auto &v : valuations_ ) {
			bool any = false;
			for( const auto &s : h.components ) {
				if( v.holds( s ) ) {
					any = true;
					break;
				}
			}
			if( !any ) return false;
		}
		return true;
	}

	std::optional< ProofTree > attempt( const Hypersequent &h, const RuleInstance &r, std::size_t depth, std::size_t streak ) {
		std::vector< Hypersequent > premises;
		try {
			premises = expected_premises( calc_, r, h );
		} catch( const Error & ) {
			return std::nullopt;
		}
		for( const auto &p : premises ) {
			if( p == h ) return std::nullopt;   // no-op instance
		}
		ProofTree t { h, r, {} };
		const std::size_t next_streak = is_structural_rule( r.rule ) ? streak + 1 : 0;
		for( const auto &p : premises ) {
			auto sub = prove( p, depth - 1, next_streak );
			if( !sub ) return std::nullopt;
			t.premises.push_back( std::move( *sub ) );
		}
		return t;
	}

	std::optional< ProofTree > expand( const Hypersequent &h, std::size_t depth, std::size_t streak ) {
		const std::size_t n = h.size();
		// Axioms.
		for( std::size_t c = 0; c < n; ++c ) {
			const Sequent &s = h.components[ c ];
			for( RuleId r : { RuleId::Init, RuleId::Emp, RuleId::TopR } ) {
				if( calc_.has( r ) ) {
					if( auto t = attempt( h, { r, c }, depth, streak ) ) return t;
				}
			}
			if( calc_.has( RuleId::BotL ) ) {
				for( std::size_t p = 0; p < s.left.size(); ++p ) {
					if( auto t = attempt( h, { RuleId::BotL, c, p }, depth, streak ) ) return t;
				}
			}
		}
		if( depth == 1 ) return std::nullopt;
		// WeakL permutes up to the leaves, so it is only tried right below an axiom.
		for( std::size_t c = 0; c < n; ++c ) {
			const Sequent &s = h.components[ c ];
			for( std::size_t p = 0; p < s.left.size(); ++p ) {
				for( std::size_t count = 1; p + count <= s.left.size(); ++count ) {
					if( auto t = weaken_to_axiom( h, { RuleId::WeakL, c, p, count } ) ) return t;
				}
			}
		}
		// Invertible rules first: when every premise passes the semantic filter
		// the rule is committed to and no alternative is tried at this node.
		for( std::size_t c = 0; c < n; ++c ) {
			const Sequent &s = h.components[ c ];
			for( int side = 0; side < 2; ++side ) {
				const auto &fs = side == 0 ? s.left : s.right;
				for( std::size_t p = 0; p < fs.size(); ++p ) {
					const RuleId r = side == 0 ? left_rule( fs[ p ]->kind ) : right_rule( fs[ p ]->kind );
					if( !invertible( r ) || !calc_.has( r ) ) continue;
					std::vector< Hypersequent > premises;
					try {
						premises = expected_premises( calc_, { r, c, p }, h );
					} catch( const Error & ) {
						continue;
					}
					if( std::all_of( premises.begin(), premises.end(), [ & ]( const auto &q ) { return valid( q ); } ) ) {
						return attempt( h, { r, c, p }, depth, streak );
					}
				}
			}
		}
		// Logical rules, keyed by the outermost connective.
		for( std::size_t c = 0; c < n; ++c ) {
			const Sequent &s = h.components[ c ];
			for( std::size_t p = 0; p < s.left.size(); ++p ) {
				const RuleId r = left_rule( s.left[ p ]->kind );
				if( r == RuleId::Hyp || !calc_.has( r ) ) continue;
				if( auto t = attempt( h, { r, c, p }, depth, streak ) ) return t;
			}
			for( std::size_t p = 0; p < s.right.size(); ++p ) {
				const RuleId r = right_rule( s.right[ p ]->kind );
				if( r == RuleId::Hyp || !calc_.has( r ) ) continue;
				if( r == RuleId::ROdot && calc_.kind() == LogicKind::DL2 ) {
					for( std::size_t k1 = 0; k1 <= s.left.size(); ++k1 ) {
						for( std::size_t k2 = 0; k2 < s.right.size(); ++k2 ) {
							if( auto t = attempt( h, { r, c, p, 1, k1, k2 }, depth, streak ) ) return t;
						}
					}
					continue;
				}
				if( auto t = attempt( h, { r, c, p }, depth, streak ) ) return t;
			}
		}
		if( streak >= 2 ) return std::nullopt;
		// Structural rules. The enumeration is cut down to instances that can
		// matter: EW never (axioms carry the side hypersequent), exchanges only
		// where an order-sensitive split can follow, Com on atomic components,
		// contraction only of items not already duplicated.
		auto try_rule = [ & ]( RuleInstance r ) -> std::optional< ProofTree > {
			if( !calc_.has( r.rule ) ) return std::nullopt;
			return attempt( h, r, depth, streak );
		};
		const bool ordered_splits = calc_.has( RuleId::Mix ) || calc_.kind() == LogicKind::DL2;
		for( std::size_t c = 0; c < n; ++c ) {
			const Sequent &s = h.components[ c ];
			if( !ordered_splits && !atomic( s ) ) continue;
			for( std::size_t p = 0; p + 1 < s.left.size(); ++p ) {
				if( auto t = try_rule( { RuleId::LEx, c, p } ) ) return t;
			}
			for( std::size_t p = 0; p + 1 < s.right.size(); ++p ) {
				if( auto t = try_rule( { RuleId::REx, c, p } ) ) return t;
			}
		}
		for( std::size_t c = 0; c + 1 < n; ++c ) {
			if( auto t = try_rule( { RuleId::EEx, c } ) ) return t;
			const Sequent &s = h.components[ c ];
			const Sequent &u = h.components[ c + 1 ];
			if( auto t = try_rule( { RuleId::Split, c, 0, 1, s.left.size(), s.right.size() } ) ) return t;
			if( !atomic( s ) || !atomic( u ) ) continue;
			for( std::size_t k1 = 0; k1 <= s.left.size(); ++k1 ) {
				for( std::size_t k2 = 0; k2 <= u.left.size(); ++k2 ) {
					if( auto t = try_rule( { RuleId::Com, c, 0, 1, k1, k2 } ) ) return t;
				}
			}
		}
		for( std::size_t c = 0; c < n; ++c ) {
			const Sequent &s = h.components[ c ];
			for( std::size_t k1 = 0; k1 <= s.left.size(); ++k1 ) {
				for( std::size_t k2 = 0; k2 <= s.right.size(); ++k2 ) {
					const bool trivial = ( k1 == 0 && k2 == 0 ) || ( k1 == s.left.size() && k2 == s.right.size() );
					if( trivial ) continue;
					if( auto t = try_rule( { RuleId::Mix, c, 0, 1, k1, k2 } ) ) return t;
				}
			}
			for( std::size_t p = 0; p < s.left.size(); ++p ) {
				if( is_connective( s.left[ p ]->kind ) && occurrences( s.left, s.left[ p ] ) == 1 ) {
					if( auto t = try_rule( { RuleId::ContrL, c, p, 1 } ) ) return t;
				}
			}
			if( std::count( h.components.begin(), h.components.end(), s ) == 1 ) {
				if( auto t = try_rule( { RuleId::EC, c, 0, 1 } ) ) return t;
			}
		}
		return std::nullopt;
	}

	static bool atomic( const Sequent &s ) {
		for( const auto *side : { &s.left, &s.right } ) {
			for( const auto &f : *side ) {
				if( is_connective( f->kind ) ) return false;
			}
		}
		return true;
	}

	static std::size_t occurrences( const std::vector< Expr > &side, const Expr &f ) {
		std::size_t k = 0;
		for( const auto &g : side ) k += structurally_equal( g, f ) ? 1 : 0;
		return k;
	}

	std::optional< ProofTree > close_by_axiom( const Hypersequent &h ) {
		for( std::size_t c = 0; c < h.size(); ++c ) {
			for( RuleId r : { RuleId::Init, RuleId::Emp, RuleId::TopR } ) {
				if( calc_.has( r ) && fits( h, { r, c } ) ) return ProofTree { h, { r, c }, {} };
			}
			for( std::size_t p = 0; calc_.has( RuleId::BotL ) && p < h.components[ c ].left.size(); ++p ) {
				if( fits( h, { RuleId::BotL, c, p } ) ) return ProofTree { h, { RuleId::BotL, c, p }, {} };
			}
		}
		return std::nullopt;
	}

	bool fits( const Hypersequent &h, const RuleInstance &r ) {
		try {
			expected_premises( calc_, r, h );
			return true;
		} catch( const Error & ) {
			return false;
		}
	}

	std::optional< ProofTree > weaken_to_axiom( const Hypersequent &h, const RuleInstance &r ) {
		if( !calc_.has( r.rule ) ) return std::nullopt;
		std::vector< Hypersequent > premises;
		try {
			premises = expected_premises( calc_, r, h );
		} catch( const Error & ) {
			return std::nullopt;
		}
		auto leaf = close_by_axiom( premises[ 0 ] );
		if( !leaf ) return std::nullopt;
		return ProofTree { h, r, { std::move( *leaf ) } };
	}

	bool invertible( RuleId r ) const noexcept {
		switch( r ) {
		case RuleId::LAnd: case RuleId::RAnd: case RuleId::LOr: case RuleId::ROr: case RuleId::LOdot:
			return true;
		case RuleId::ROdot:
			return calc_.kind() != LogicKind::DL2;
		default:
			return false;
		}
	}

	static RuleId left_rule( NodeKind k ) {
		switch( k ) {
		case NodeKind::And: return RuleId::LAnd;
		case NodeKind::Or: return RuleId::LOr;
		case NodeKind::Impl: return RuleId::LImpl;
		case NodeKind::Not: return RuleId::LNeg;
		case NodeKind::MAnd: return RuleId::LOdot;
		default: return RuleId::Hyp;
		}
	}

	static RuleId right_rule( NodeKind k ) {
		switch( k ) {
		case NodeKind::And: return RuleId::RAnd;
		case NodeKind::Or: return RuleId::ROr;
		case NodeKind::Impl: return RuleId::RImpl;
		case NodeKind::MAnd: return RuleId::ROdot;
		default: return RuleId::Hyp;
		}
	}

	const Calculus &calc_;
	SearchStats &stats_;
	std::vector< Valuation > valuations_;
	struct Key {
		Hypersequent h;
		std::size_t streak;
		bool operator==( const Key &o ) const noexcept { return streak == o.streak && h == o.h; }
	};
	struct KeyHash {
		std::size_t operator()( const Key &k ) const noexcept { return hypersequent_hash( k.h ) * 31 + k.streak; }
	};
	std::unordered_map< Key, std::size_t, KeyHash > failed_;
};

// Fixture registry, loaded lazily from <dir>/proofs where <dir> is
// $DLC_FIXTURE_DIR or the compiled-in default.

struct Registry {
	std::mutex mutex;
	bool loaded = false;
	std::map< LogicKind, std::vector< ProofTree > > proofs;
};

Registry &registry() {
	static Registry r;
	return r;
}

std::filesystem::path fixture_root() {
	if( const char *env = std::getenv( "DLC_FIXTURE_DIR" ) ) return env;
#ifdef DLC_DEFAULT_FIXTURE_DIR
	return DLC_DEFAULT_FIXTURE_DIR;
#else
	return {};
#endif
}

void load_locked( Registry &r ) {
	if( r.loaded ) return;
	r.loaded = true;
	const auto dir = fixture_root() / "proofs";
	std::error_code ec;
	if( fixture_root().empty() || !std::filesystem::is_directory( dir, ec ) ) return;
	std::vector< std::filesystem::path > files;
	for( const auto &entry : std::filesystem::directory_iterator( dir, ec ) ) {
		if( entry.path().extension() == ".json" ) files.push_back( entry.path() );
	}
	std::sort( files.begin(), files.end() );
	for( const auto &f : files ) {
		try {
			std::ifstream in( f );
			const auto j = nlohmann::json::parse( in );
			// Derived-rule fixtures have open leaves and are not closed proofs.
			if( j.contains( "derived_rule" ) ) continue;
			const Calculus calc( Logic::parse( j.at( "logic" ).get< std::string >() ) );
			ProofTree t = proof_from_json( j, calc.logic() );
			if( check_proof( calc, t ).ok ) r.proofs[ calc.kind() ].push_back( std::move( t ) );
		} catch( const std::exception & ) {
			// A broken fixture only costs the search a shortcut; the fixture tests report it.
		}
	}
}

bool has_kind( const Expr &e, NodeKind k ) {
	if( e->kind == k ) return true;
	for( const auto &c : e->children ) {
		if( has_kind( c, k ) ) return true;
	}
	return false;
}

bool has_top( const Expr &e ) {
	if( e->kind == NodeKind::BoolConst && e->bval ) return true;
	for( const auto &c : e->children ) {
		if( has_top( c ) ) return true;
	}
	return false;
}

} // namespace

std::optional< ProofTree > fixture_proof( const Calculus &calc, const Hypersequent &goal ) {
	Registry &r = registry();
	std::lock_guard lock( r.mutex );
	load_locked( r );
	for( const auto &t : r.proofs[ calc.kind() ] ) {
		if( t.conclusion == goal ) return t;
	}
	return std::nullopt;
}

void register_fixture( const Calculus &calc, ProofTree proof ) {
	const CheckResult res = check_proof( calc, proof );
	if( !res.ok ) fail( res.code, "fixture does not check: " + res.message, res.path );
	Registry &r = registry();
	std::lock_guard lock( r.mutex );
	load_locked( r );
	r.proofs[ calc.kind() ].push_back( std::move( proof ) );
}

std::optional< ProofTree > prove_bounded( const Calculus &calc, const Hypersequent &goal, std::size_t depth_budget,
	SearchStats *stats ) {
	SearchStats local;
	SearchStats &st = stats ? *stats : local;
	st = {};
	if( goal.components.empty() ) return std::nullopt;
	for( const auto &s : goal.components ) {
		for( const auto *side : { &s.left, &s.right } ) {
			for( const auto &f : *side ) validate_for_logic( f, calc.logic() );
		}
	}
	if( auto t = fixture_proof( calc, goal ) ) {
		st.from_fixture = true;
		st.depth_reached = t->height();
		return t;
	}
	Searcher searcher( calc, st );
	for( std::size_t d = 1; d <= depth_budget; ++d ) {
		st.depth_reached = d;
		if( auto t = searcher.prove( goal, d, 0 ) ) return t;
		if( st.nodes >= kNodeCap ) break;
	}
	return std::nullopt;
}

std::vector< CompletenessGoal > weak_completeness_goals( const Calculus &calc ) {
	const ConnectiveFlags f = calc.logic().flag_profile();
	const bool lattice_monoid = calc.kind() == LogicKind::Godel || calc.kind() == LogicKind::STLInfty;
	const Expr x = ast::le( ast::real_const( 0 ), ast::real_const( 1 ), f );
	const Expr y = ast::le( ast::real_const( 0 ), ast::real_const( 2 ), f );
	const Expr z = ast::le( ast::real_const( 0 ), ast::real_const( 3 ), f );
	auto A = []( Expr p, Expr q ) { return ast::conj( { std::move( p ), std::move( q ) } ); };
	auto O = []( Expr p, Expr q ) { return ast::disj( { std::move( p ), std::move( q ) } ); };
	auto M = [ & ]( Expr p, Expr q ) {
		return lattice_monoid ? ast::conj( { std::move( p ), std::move( q ) } ) : ast::mand( { std::move( p ), std::move( q ) } );
	};
	struct Eqn {
		const char *name;
		Expr lhs, rhs;
		bool equation;
	};
	const std::vector< Eqn > eqs = {
		{ "R1", A( x, y ), A( y, x ), true },
		{ "R2", A( x, A( y, z ) ), A( A( x, y ), z ), true },
		{ "R3", O( x, y ), O( y, x ), true },
		{ "R4", O( x, O( y, z ) ), O( O( x, y ), z ), true },
		{ "R5", A( x, O( x, y ) ), x, true },
		{ "R6", O( x, A( x, y ) ), x, true },
		{ "R7", A( x, O( y, z ) ), O( A( x, y ), A( x, z ) ), false },
		{ "R8", M( x, M( y, z ) ), M( M( x, y ), z ), true },
		{ "R9", M( x, ast::top( f ) ), x, true },
	};
	std::vector< CompletenessGoal > out;
	for( const auto &e : eqs ) {
		for( int dir = 0; dir < ( e.equation ? 2 : 1 ); ++dir ) {
			CompletenessGoal g;
			g.axiom = e.name;
			g.direction = dir == 0 ? "lhs<=rhs" : "rhs<=lhs";
			const Expr &l = dir == 0 ? e.lhs : e.rhs;
			const Expr &r = dir == 0 ? e.rhs : e.lhs;
			g.goal.components.push_back( Sequent { { l }, { r } } );
			// Applicable when every connective in the goal has its rules here.
			std::vector< std::string > missing;
			auto need = [ & ]( NodeKind k, RuleId lr, RuleId rr, const char *what ) {
				if( ( has_kind( l, k ) || has_kind( r, k ) ) && !( calc.has( lr ) && calc.has( rr ) ) ) missing.push_back( what );
			};
			need( NodeKind::And, RuleId::LAnd, RuleId::RAnd, "lattice conjunction" );
			need( NodeKind::Or, RuleId::LOr, RuleId::ROr, "lattice disjunction" );
			need( NodeKind::MAnd, RuleId::LOdot, RuleId::ROdot, "monoidal conjunction" );
			if( has_top( r ) && !calc.has( RuleId::TopR ) ) missing.push_back( "top on the right" );
			if( !missing.empty() ) {
				g.status = GoalStatus::NotApplicable;
				g.note = "no rules for " + missing.front() + " in this calculus";
			}
			out.push_back( std::move( g ) );
		}
	}
	return out;
}

bool CompletenessReport::all_discharged() const noexcept {
	for( const auto &g : goals ) {
		if( g.status == GoalStatus::Failed ) return false;
	}
	return true;
}

nlohmann::json CompletenessReport::to_json() const {
	nlohmann::json j;
	j[ "logic" ] = logic;
	j[ "depth_budget" ] = depth_budget;
	j[ "all_discharged" ] = all_discharged();
	j[ "goals" ] = nlohmann::json::array();
	for( const auto &g : goals ) {
		nlohmann::json e { { "axiom", g.axiom }, { "direction", g.direction }, { "goal", g.goal.to_string() },
			{ "status", goal_status_name( g.status ) } };
		if( g.proof_size ) e[ "proof_size" ] = g.proof_size;
		if( !g.note.empty() ) e[ "note" ] = g.note;
		j[ "goals" ].push_back( std::move( e ) );
	}
	return j;
}

CompletenessReport weak_completeness_suite( const Calculus &calc, std::size_t depth_budget ) {
	CompletenessReport rep;
	rep.logic = calc.name();
	rep.depth_budget = depth_budget;
	rep.goals = weak_completeness_goals( calc );
	for( auto &g : rep.goals ) {
		if( g.status == GoalStatus::NotApplicable ) continue;
		SearchStats st;
		auto t = prove_bounded( calc, g.goal, depth_budget, &st );
		if( t && check_proof( calc, *t ).ok ) {
			g.status = st.from_fixture ? GoalStatus::Fixture : GoalStatus::Found;
			g.proof_size = t->size();
			g.note = "height " + std::to_string( t->height() );
		} else {
			g.status = GoalStatus::Failed;
			g.note = "not found within depth " + std::to_string( depth_budget ) + " (" + std::to_string( st.nodes ) + " nodes)";
		}
	}
	return rep;
}

} // namespace dlc
