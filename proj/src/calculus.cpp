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

#include <algorithm>
#include <sstream>

namespace dlc {

namespace {

const char *const kRuleNames[] = {
	"Init", "Emp", "BotL", "TopR",
	"EW", "EC", "EEx", "Com", "Split", "Mix",
	"WeakL", "ContrL", "LEx", "REx",
	"LAnd", "RAnd", "LOr", "ROr", "LImpl", "RImpl", "LImplExt", "LNeg", "LOdot", "ROdot",
	"Hyp",
};

std::vector< RuleId > membership( LogicKind k ) {
	using R = RuleId;
	switch( k ) {
	case LogicKind::Godel:
	case LogicKind::STLInfty:
		return { R::Init, R::BotL, R::TopR, R::EW, R::EC, R::EEx, R::Com, R::WeakL, R::ContrL, R::LEx, R::REx,
			R::LAnd, R::RAnd, R::LOr, R::ROr, R::LImpl, R::RImpl };
	case LogicKind::Lukasiewicz:
		return { R::Init, R::Emp, R::BotL, R::EW, R::EC, R::EEx, R::WeakL, R::LEx, R::REx, R::Split, R::Mix,
			R::LImpl, R::RImpl };
	case LogicKind::Product:
		return { R::Init, R::Emp, R::BotL, R::EW, R::EC, R::EEx, R::WeakL, R::LEx, R::REx, R::Split, R::Mix,
			R::LNeg, R::LOdot, R::ROdot, R::LImpl, R::RImpl };
	case LogicKind::DL2:
		return { R::Init, R::Emp, R::TopR, R::EW, R::EC, R::EEx, R::WeakL, R::Com, R::LEx, R::REx, R::LOdot,
			R::ROdot, R::LAnd, R::RAnd, R::LOr, R::ROr, R::LImpl, R::RImpl };
	default:
		return {};
	}
}

bool formulas_equal( const std::vector< Expr > &a, const std::vector< Expr > &b ) noexcept {
	if( a.size() != b.size() ) return false;
	for( std::size_t i = 0; i < a.size(); ++i ) {
		if( !structurally_equal( a[ i ], b[ i ] ) ) return false;
	}
	return true;
}

void join( std::ostringstream &os, const std::vector< Expr > &fs ) {
	for( std::size_t i = 0; i < fs.size(); ++i ) os << ( i ? ", " : "" ) << to_surface( fs[ i ] );
}

template< class V >
V slice( const V &v, std::size_t from, std::size_t to ) {
	return V( v.begin() + static_cast< std::ptrdiff_t >( from ), v.begin() + static_cast< std::ptrdiff_t >( to ) );
}

template< class V >
V concat( V a, const V &b ) {
	a.insert( a.end(), b.begin(), b.end() );
	return a;
}

template< class V, class X >
V replaced( V v, std::size_t i, X x ) {
	v[ i ] = std::move( x );
	return v;
}

template< class V >
V erased( V v, std::size_t i ) {
	v.erase( v.begin() + static_cast< std::ptrdiff_t >( i ) );
	return v;
}

/** Conclusion with component `c` (and `width - 1` following ones) replaced by `with`. */
Hypersequent splice_components( const Hypersequent &h, std::size_t c, std::size_t width, std::vector< Sequent > with ) {
	Hypersequent out;
	out.components = slice( h.components, 0, c );
	out.components.insert( out.components.end(), with.begin(), with.end() );
	out.components.insert( out.components.end(), h.components.begin() + static_cast< std::ptrdiff_t >( c + width ),
		h.components.end() );
	return out;
}

Hypersequent with_component( const Hypersequent &h, std::size_t c, Sequent s ) {
	return splice_components( h, c, 1, { std::move( s ) } );
}

std::string where( std::size_t c ) { return "components[" + std::to_string( c ) + "]"; }
std::string where( std::size_t c, const char *side, std::size_t p ) {
	return where( c ) + "." + side + "[" + std::to_string( p ) + "]";
}

void require( bool cond, const std::string &what, const std::string &path ) {
	if( !cond ) fail( ErrorCode::SchemaMismatch, what, path );
}

const Expr &principal( const Sequent &s, bool left, std::size_t c, std::size_t pos, NodeKind kind ) {
	const auto &side = left ? s.left : s.right;
	const char *name = left ? "left" : "right";
	require( pos < side.size(), std::string( "no formula at " ) + name + " position " + std::to_string( pos ),
		where( c ) );
	require( side[ pos ]->kind == kind, std::string( "principal formula is not " ) + node_kind_name( kind ),
		where( c, name, pos ) );
	return side[ pos ];
}

bool single_conclusion( LogicKind k ) { return k == LogicKind::Godel || k == LogicKind::STLInfty; }

} // namespace

std::string Sequent::to_string() const {
	std::ostringstream os;
	join( os, left );
	os << ( left.empty() ? "|-" : " |-" );
	if( !right.empty() ) os << " ";
	join( os, right );
	return os.str();
}

bool operator==( const Sequent &a, const Sequent &b ) noexcept {
	return formulas_equal( a.left, b.left ) && formulas_equal( a.right, b.right );
}

std::string Hypersequent::to_string() const {
	std::string out;
	for( std::size_t i = 0; i < components.size(); ++i ) {
		if( i ) out += " | ";
		out += components[ i ].to_string();
	}
	return out;
}

bool operator==( const Hypersequent &a, const Hypersequent &b ) noexcept { return a.components == b.components; }

std::size_t hypersequent_hash( const Hypersequent &h ) noexcept {
	std::size_t seed = h.components.size();
	auto mix = [ &seed ]( std::size_t v ) { seed ^= v + 0x9e3779b97f4a7c15ULL + ( seed << 6 ) + ( seed >> 2 ); };
	for( const auto &s : h.components ) {
		mix( s.left.size() );
		for( const auto &f : s.left ) mix( structural_hash( f ) );
		mix( s.right.size() + 0x51 );
		for( const auto &f : s.right ) mix( structural_hash( f ) );
	}
	return seed;
}

const char *rule_name( RuleId r ) noexcept { return kRuleNames[ static_cast< int >( r ) ]; }

RuleId rule_from_name( const std::string &name ) {
	for( int i = 0; i <= static_cast< int >( RuleId::Hyp ); ++i ) {
		if( name == kRuleNames[ i ] ) return static_cast< RuleId >( i );
	}
	fail( ErrorCode::SchemaError, "unknown rule '" + name + "'" );
}

bool is_axiom_rule( RuleId r ) noexcept {
	return r == RuleId::Init || r == RuleId::Emp || r == RuleId::BotL || r == RuleId::TopR;
}

bool is_structural_rule( RuleId r ) noexcept {
	switch( r ) {
	case RuleId::EW: case RuleId::EC: case RuleId::EEx: case RuleId::Com: case RuleId::Split: case RuleId::Mix:
	case RuleId::WeakL: case RuleId::ContrL: case RuleId::LEx: case RuleId::REx:
		return true;
	default:
		return false;
	}
}

Calculus::Calculus( const Logic &logic ) : logic_( logic ), rules_( membership( logic.kind() ) ) {
	if( rules_.empty() ) fail( ErrorCode::RejectedLogic, "no hypersequent calculus for " + logic.label() );
}

bool Calculus::has( RuleId r ) const noexcept { return std::find( rules_.begin(), rules_.end(), r ) != rules_.end(); }

std::size_t ProofTree::size() const noexcept {
	std::size_t n = 1;
	for( const auto &p : premises ) n += p.size();
	return n;
}

std::size_t ProofTree::height() const noexcept {
	std::size_t h = 0;
	for( const auto &p : premises ) h = std::max( h, p.height() );
	return h + 1;
}

CheckResult CheckResult::failure( ErrorCode code, std::string message, std::string path ) {
	CheckResult r;
	r.ok = false;
	r.code = code;
	r.message = std::move( message );
	r.path = std::move( path );
	return r;
}

std::vector< Hypersequent > expected_premises( const Calculus &calc, const RuleInstance &inst,
	const Hypersequent &concl ) {
	const RuleId rule = inst.rule;
	if( rule == RuleId::Hyp ) fail( ErrorCode::SchemaMismatch, "open leaf outside a derived-rule check" );
	if( rule != RuleId::LImplExt && !calc.has( rule ) ) {
		fail( ErrorCode::RuleNotInCalculus, std::string( rule_name( rule ) ) + " is not a rule of the " + calc.name()
			+ " calculus" );
	}
	const std::size_t c = inst.comp;
	const std::size_t n = concl.size();
	require( c < n, "component index " + std::to_string( c ) + " out of range", "components" );
	const Sequent &s = concl.components[ c ];
	const LogicKind kind = calc.kind();
	const std::size_t pos = inst.pos;

	switch( rule ) {
	case RuleId::Init:
		require( s.left.size() == 1 && s.right.size() == 1 && structurally_equal( s.left[ 0 ], s.right[ 0 ] ),
			"init needs a single identical formula on each side", where( c ) );
		return {};
	case RuleId::Emp:
		require( s.left.empty() && s.right.empty(), "emp needs an empty sequent", where( c ) );
		return {};
	case RuleId::BotL: {
		require( pos < s.left.size(), "no formula at the bot position", where( c ) );
		const Expr &f = s.left[ pos ];
		require( f->kind == NodeKind::BoolConst && !f->bval, "principal formula is not bot", where( c, "left", pos ) );
		if( kind == LogicKind::Lukasiewicz ) {
			require( s.right.size() == 1, "Lukasiewicz bot needs exactly one formula on the right", where( c ) );
		}
		return {};
	}
	case RuleId::TopR:
		require( s.right.size() == 1 && s.right[ 0 ]->kind == NodeKind::BoolConst && s.right[ 0 ]->bval,
			"top rule needs exactly top on the right", where( c ) );
		return {};
	case RuleId::EW:
		require( inst.count >= 1 && c + inst.count <= n && inst.count < n, "EW block out of range", where( c ) );
		return { splice_components( concl, c, inst.count, {} ) };
	case RuleId::EC: {
		require( inst.count >= 1 && c + inst.count <= n, "EC block out of range", where( c ) );
		Hypersequent p = concl;
		const auto block = slice( concl.components, c, c + inst.count );
		p.components.insert( p.components.begin() + static_cast< std::ptrdiff_t >( c + inst.count ), block.begin(),
			block.end() );
		return { p };
	}
	case RuleId::EEx: {
		require( c + 1 < n, "EEx needs two adjacent components", where( c ) );
		Hypersequent p = concl;
		std::swap( p.components[ c ], p.components[ c + 1 ] );
		return { p };
	}
	case RuleId::Com: {
		require( c + 1 < n, "com needs two adjacent components", where( c ) );
		const Sequent &t = concl.components[ c + 1 ];
		require( inst.k1 <= s.left.size(), "k1 exceeds the first left side", where( c ) );
		require( inst.k2 <= t.left.size(), "k2 exceeds the second left side", where( c + 1 ) );
		Sequent p1 { concat( slice( s.left, 0, inst.k1 ), slice( t.left, 0, inst.k2 ) ), s.right };
		Sequent p2 { concat( slice( s.left, inst.k1, s.left.size() ), slice( t.left, inst.k2, t.left.size() ) ), t.right };
		return { splice_components( concl, c, 2, { p1 } ), splice_components( concl, c, 2, { p2 } ) };
	}
	case RuleId::Split: {
		require( c + 1 < n, "split needs two adjacent components", where( c ) );
		const Sequent &t = concl.components[ c + 1 ];
		require( inst.k1 == s.left.size() && inst.k2 == s.right.size(), "split partition does not match component sizes",
			where( c ) );
		Sequent merged { concat( s.left, t.left ), concat( s.right, t.right ) };
		return { splice_components( concl, c, 2, { merged } ) };
	}
	case RuleId::Mix: {
		require( inst.k1 <= s.left.size() && inst.k2 <= s.right.size(), "mix partition out of range", where( c ) );
		Sequent p1 { slice( s.left, 0, inst.k1 ), slice( s.right, 0, inst.k2 ) };
		Sequent p2 { slice( s.left, inst.k1, s.left.size() ), slice( s.right, inst.k2, s.right.size() ) };
		return { with_component( concl, c, p1 ), with_component( concl, c, p2 ) };
	}
	case RuleId::WeakL: {
		require( inst.count >= 1 && pos + inst.count <= s.left.size(), "weakened block out of range", where( c ) );
		Sequent p = s;
		p.left.erase( p.left.begin() + static_cast< std::ptrdiff_t >( pos ),
			p.left.begin() + static_cast< std::ptrdiff_t >( pos + inst.count ) );
		return { with_component( concl, c, p ) };
	}
	case RuleId::ContrL: {
		require( inst.count >= 1 && pos + inst.count <= s.left.size(), "contracted block out of range", where( c ) );
		Sequent p = s;
		const auto block = slice( s.left, pos, pos + inst.count );
		p.left.insert( p.left.begin() + static_cast< std::ptrdiff_t >( pos + inst.count ), block.begin(), block.end() );
		return { with_component( concl, c, p ) };
	}
	case RuleId::LEx:
	case RuleId::REx: {
		const bool left = rule == RuleId::LEx;
		Sequent p = s;
		auto &side = left ? p.left : p.right;
		require( pos + 1 < side.size(), "exchange needs two adjacent formulas", where( c ) );
		std::swap( side[ pos ], side[ pos + 1 ] );
		return { with_component( concl, c, p ) };
	}
	case RuleId::LAnd: {
		const Expr &f = principal( s, true, c, pos, NodeKind::And );
		std::vector< Sequent > parts;
		for( const auto &ch : f->children ) parts.push_back( { replaced( s.left, pos, ch ), s.right } );
		return { splice_components( concl, c, 1, parts ) };
	}
	case RuleId::RAnd: {
		const Expr &f = principal( s, false, c, pos, NodeKind::And );
		if( single_conclusion( kind ) ) require( s.right.size() == 1, "right side must be the conjunction alone", where( c ) );
		std::vector< Hypersequent > ps;
		for( const auto &ch : f->children ) ps.push_back( with_component( concl, c, { s.left, replaced( s.right, pos, ch ) } ) );
		return ps;
	}
	case RuleId::LOr: {
		const Expr &f = principal( s, true, c, pos, NodeKind::Or );
		std::vector< Hypersequent > ps;
		for( const auto &ch : f->children ) ps.push_back( with_component( concl, c, { replaced( s.left, pos, ch ), s.right } ) );
		return ps;
	}
	case RuleId::ROr: {
		const Expr &f = principal( s, false, c, pos, NodeKind::Or );
		if( single_conclusion( kind ) ) require( s.right.size() == 1, "right side must be the disjunction alone", where( c ) );
		std::vector< Sequent > parts;
		for( const auto &ch : f->children ) parts.push_back( { s.left, replaced( s.right, pos, ch ) } );
		return { splice_components( concl, c, 1, parts ) };
	}
	case RuleId::LImpl:
	case RuleId::LImplExt: {
		const Expr &f = principal( s, true, c, pos, NodeKind::Impl );
		const Expr &a = f->children[ 0 ];
		const Expr &b = f->children[ 1 ];
		const auto gamma = erased( s.left, pos );
		const Sequent with_b { replaced( s.left, pos, b ), concat( std::vector< Expr > { a }, s.right ) };
		if( rule == RuleId::LImplExt ) {
			Hypersequent p = with_component( concl, c, { gamma, s.right } );
			const Hypersequent q = with_component( concl, c, with_b );
			p.components.insert( p.components.end(), q.components.begin(), q.components.end() );
			return { p };
		}
		switch( kind ) {
		case LogicKind::Godel:
		case LogicKind::STLInfty:
			return { with_component( concl, c, { gamma, { a } } ),
				with_component( concl, c, { replaced( s.left, pos, b ), s.right } ) };
		case LogicKind::Lukasiewicz:
			return { with_component( concl, c, with_b ) };
		case LogicKind::Product:
			return { with_component( concl, c, { replaced( s.left, pos, ast::neg( a ) ), s.right } ),
				with_component( concl, c, with_b ) };
		default:
			return { with_component( concl, c, { gamma, s.right } ), with_component( concl, c, with_b ) };
		}
	}
	case RuleId::RImpl: {
		const Expr &f = principal( s, false, c, pos, NodeKind::Impl );
		const Expr &a = f->children[ 0 ];
		const Expr &b = f->children[ 1 ];
		const auto left_a = concat( s.left, std::vector< Expr > { a } );
		if( single_conclusion( kind ) ) {
			require( s.right.size() == 1, "right side must be the implication alone", where( c ) );
			return { with_component( concl, c, { left_a, { b } } ) };
		}
		return { with_component( concl, c, { s.left, erased( s.right, pos ) } ),
			with_component( concl, c, { left_a, replaced( s.right, pos, b ) } ) };
	}
	case RuleId::LNeg: {
		const Expr &f = principal( s, true, c, pos, NodeKind::Not );
		return { with_component( concl, c, { erased( s.left, pos ), { f->children[ 0 ] } } ) };
	}
	case RuleId::LOdot: {
		const Expr &f = principal( s, true, c, pos, NodeKind::MAnd );
		Sequent p = s;
		p.left.erase( p.left.begin() + static_cast< std::ptrdiff_t >( pos ) );
		p.left.insert( p.left.begin() + static_cast< std::ptrdiff_t >( pos ), f->children.begin(), f->children.end() );
		return { with_component( concl, c, p ) };
	}
	case RuleId::ROdot: {
		const Expr &f = principal( s, false, c, pos, NodeKind::MAnd );
		if( kind != LogicKind::DL2 ) {
			Sequent p = s;
			p.right.erase( p.right.begin() + static_cast< std::ptrdiff_t >( pos ) );
			p.right.insert( p.right.begin() + static_cast< std::ptrdiff_t >( pos ), f->children.begin(), f->children.end() );
			return { with_component( concl, c, p ) };
		}
		require( f->children.size() == 2, "DL2 right mand rule needs a binary product", where( c, "right", pos ) );
		const auto rest = erased( s.right, pos );
		require( inst.k1 <= s.left.size() && inst.k2 <= rest.size(), "mand partition out of range", where( c ) );
		Sequent p1 { slice( s.left, 0, inst.k1 ),
			concat( std::vector< Expr > { f->children[ 0 ] }, slice( rest, 0, inst.k2 ) ) };
		Sequent p2 { slice( s.left, inst.k1, s.left.size() ),
			concat( std::vector< Expr > { f->children[ 1 ] }, slice( rest, inst.k2, rest.size() ) ) };
		return { with_component( concl, c, p1 ), with_component( concl, c, p2 ) };
	}
	case RuleId::Hyp:
		break;
	}
	fail( ErrorCode::SchemaMismatch, "unhandled rule" );
}

CheckResult check_step( const Calculus &calc, const RuleInstance &rule, const Hypersequent &conclusion,
	const std::vector< Hypersequent > &premises ) {
	std::vector< Hypersequent > expected;
	try {
		expected = expected_premises( calc, rule, conclusion );
	} catch( const Error &e ) {
		return CheckResult::failure( e.code(), e.what(), e.path().empty() ? "$" : "$." + e.path() );
	}
	if( expected.size() != premises.size() ) {
		return CheckResult::failure( ErrorCode::PremiseArityMismatch,
			std::string( rule_name( rule.rule ) ) + " takes " + std::to_string( expected.size() ) + " premise(s), got "
				+ std::to_string( premises.size() ) );
	}
	for( std::size_t i = 0; i < expected.size(); ++i ) {
		if( !( expected[ i ] == premises[ i ] ) ) {
			return CheckResult::failure( ErrorCode::SchemaMismatch,
				"premise " + std::to_string( i ) + " should be '" + expected[ i ].to_string() + "' but is '"
					+ premises[ i ].to_string() + "'",
				"$.premises[" + std::to_string( i ) + "]" );
		}
	}
	return CheckResult::success();
}

namespace {

CheckResult check_node( const Calculus &calc, const ProofTree &t, const std::string &path,
	const std::vector< Hypersequent > *hyps ) {
	if( t.rule.rule == RuleId::Hyp ) {
		if( !hyps ) return CheckResult::failure( ErrorCode::SchemaMismatch, "open leaf in a closed proof", path );
		if( !t.premises.empty() ) return CheckResult::failure( ErrorCode::PremiseArityMismatch, "open leaf has premises", path );
		for( const auto &h : *hyps ) {
			if( h == t.conclusion ) return CheckResult::success();
		}
		return CheckResult::failure( ErrorCode::SchemaMismatch,
			"open leaf '" + t.conclusion.to_string() + "' is not a premise of the derived rule", path );
	}
	if( t.rule.rule == RuleId::LImplExt && !calc.has( RuleId::LImplExt ) ) {
		return CheckResult::failure( ErrorCode::RuleNotInCalculus, "LImplExt is derived, not primitive", path );
	}
	std::vector< Hypersequent > ps;
	ps.reserve( t.premises.size() );
	for( const auto &p : t.premises ) ps.push_back( p.conclusion );
	CheckResult r = check_step( calc, t.rule, t.conclusion, ps );
	if( !r.ok ) {
		r.path = path + ( r.path.size() > 1 ? r.path.substr( 1 ) : "" );
		return r;
	}
	for( std::size_t i = 0; i < t.premises.size(); ++i ) {
		r = check_node( calc, t.premises[ i ], path + "/" + std::to_string( i ), hyps );
		if( !r.ok ) return r;
	}
	return r;
}

} // namespace

CheckResult check_proof( const Calculus &calc, const ProofTree &tree ) { return check_node( calc, tree, "$", nullptr ); }

CheckResult check_derived_rule( const Calculus &calc, const RuleInstance &rule, const Hypersequent &conclusion,
	const ProofTree &derivation ) {
	std::vector< Hypersequent > hyps;
	try {
		hyps = expected_premises( calc, rule, conclusion );
	} catch( const Error &e ) {
		return CheckResult::failure( e.code(), e.what(), "$" );
	}
	if( !( derivation.conclusion == conclusion ) ) {
		return CheckResult::failure( ErrorCode::SchemaMismatch, "derivation proves a different conclusion" );
	}
	return check_node( calc, derivation, "$", &hyps );
}

namespace {

template< class T >
std::vector< T > values_of( const Logic &logic, const std::vector< Expr > &fs, const Env &env ) {
	std::vector< T > out;
	out.reserve( fs.size() );
	for( const auto &f : fs ) out.push_back( interpret_bool< T >( logic, f, env ) );
	return out;
}

std::pair< double, double > float_sides( const Logic &logic, const Sequent &s, const Env &env ) {
	const auto l = values_of< double >( logic, s.left, env );
	const auto r = values_of< double >( logic, s.right, env );
	double a = 0.0, b = 0.0;
	switch( logic.kind() ) {
	case LogicKind::Godel:
		a = 1.0;
		for( double v : l ) a = std::min( a, v );
		for( double v : r ) b = std::max( b, v );
		break;
	case LogicKind::Lukasiewicz:
		// Untruncated: the truncated product makes Split unsound.
		a = b = 1.0;
		for( double v : l ) a += v - 1.0;
		for( double v : r ) b += v - 1.0;
		break;
	case LogicKind::Product:
		a = b = 1.0;
		for( double v : l ) a *= v;
		for( double v : r ) b *= v;
		break;
	case LogicKind::DL2:
		for( double v : l ) a += v;
		for( double v : r ) b += v;
		break;
	default:
		fail( ErrorCode::RejectedLogic, "no sequent semantics for " + logic.label() );
	}
	return { a, b };
}

std::pair< XReal, XReal > xreal_sides( const Logic &logic, const Sequent &s, const Env &env ) {
	XReal a = XReal::plus_inf(), b = XReal::minus_inf();
	for( const auto &v : values_of< XReal >( logic, s.left, env ) ) a = num::min2( a, v );
	for( const auto &v : values_of< XReal >( logic, s.right, env ) ) b = num::max2( b, v );
	return { a, b };
}

} // namespace

std::pair< double, double > sequent_sides( const Logic &logic, const Sequent &s, const Env &env ) {
	if( logic.kind() == LogicKind::STLInfty ) {
		const auto [ a, b ] = xreal_sides( logic, s, env );
		return { a.value(), b.value() };
	}
	return float_sides( logic, s, env );
}

bool sequent_holds( const Logic &logic, const Sequent &s, const Env &env, double tol ) {
	if( logic.kind() == LogicKind::STLInfty ) {
		const auto [ a, b ] = xreal_sides( logic, s, env );
		return a <= b;
	}
	const auto [ a, b ] = float_sides( logic, s, env );
	return a <= b + tol;
}

bool hypersequent_holds( const Logic &logic, const Hypersequent &h, const Env &env, double tol ) {
	for( const auto &s : h.components ) {
		if( sequent_holds( logic, s, env, tol ) ) return true;
	}
	return false;
}

const char *goal_status_name( GoalStatus s ) noexcept {
	switch( s ) {
	case GoalStatus::Fixture: return "fixture";
	case GoalStatus::Found: return "found";
	case GoalStatus::Failed: return "failed";
	case GoalStatus::NotApplicable: return "not_applicable";
	}
	return "?";
}

} // namespace dlc
