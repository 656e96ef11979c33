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

#include <dlc/ast.hpp>
#include <dlc/errors.hpp>

#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

namespace dlc {

TypeTag TypeTag::index( std::size_t n ) {
	if( n == 0 ) fail( ErrorCode::ArityMismatch, "Index type needs n >= 1" );
	return { TypeKind::Index, {}, n, 0, 0 };
}

TypeTag TypeTag::vector( std::size_t n ) {
	if( n == 0 ) fail( ErrorCode::ArityMismatch, "Vector type needs n >= 1" );
	return { TypeKind::Vector, {}, n, 0, 0 };
}

TypeTag TypeTag::fun( std::size_t m, std::size_t n ) {
	if( m == 0 || n == 0 ) fail( ErrorCode::ArityMismatch, "Fun type needs m, n >= 1" );
	return { TypeKind::Fun, {}, m, n, 0 };
}

TypeTag TypeTag::fun2( std::size_t l, std::size_t m, std::size_t n ) {
	if( l == 0 || m == 0 || n == 0 ) fail( ErrorCode::ArityMismatch, "Fun2 type needs l, m, n >= 1" );
	return { TypeKind::Fun2, {}, l, m, n };
}

bool TypeTag::operator==( const TypeTag &o ) const noexcept {
	if( kind != o.kind ) return false;
	switch( kind ) {
	case TypeKind::Bool: return flags == o.flags;
	case TypeKind::Real: return true;
	default: return a == o.a && b == o.b && c == o.c;
	}
}

std::string TypeTag::to_string() const {
	std::ostringstream os;
	switch( kind ) {
	case TypeKind::Bool: os << "Bool" << flags.to_string(); break;
	case TypeKind::Real: os << "Real"; break;
	case TypeKind::Index: os << "Index(" << a << ")"; break;
	case TypeKind::Vector: os << "Vector(" << a << ")"; break;
	case TypeKind::Fun: os << "Fun(" << a << "," << b << ")"; break;
	case TypeKind::Fun2: os << "Fun2(" << a << "," << b << "," << c << ")"; break;
	}
	return os.str();
}

const char *node_kind_name( NodeKind kind ) noexcept {
	switch( kind ) {
	case NodeKind::BoolConst: return "bool";
	case NodeKind::IndexConst: return "index";
	case NodeKind::RealConst: return "real";
	case NodeKind::VecConst: return "vec";
	case NodeKind::And: return "and";
	case NodeKind::Or: return "or";
	case NodeKind::Not: return "not";
	case NodeKind::Impl: return "impl";
	case NodeKind::MAnd: return "mand";
	case NodeKind::MOr: return "mor";
	case NodeKind::Cmp: return "cmp";
	case NodeKind::FunRef: return "fun";
	case NodeKind::Fun2Ref: return "fun2";
	case NodeKind::App: return "app";
	case NodeKind::App2: return "app2";
	case NodeKind::Lookup: return "lookup";
	}
	return "?";
}

bool is_connective( NodeKind kind ) noexcept {
	switch( kind ) {
	case NodeKind::And: case NodeKind::Or: case NodeKind::Not: case NodeKind::Impl:
	case NodeKind::MAnd: case NodeKind::MOr:
		return true;
	default:
		return false;
	}
}

struct NodeFactory {
	static std::shared_ptr< Node > make() { return std::shared_ptr< Node >( new Node() ); }
};

namespace {

void expect_children( NodeKind kind, const std::vector< Expr > &ch, std::size_t n ) {
	if( ch.size() != n ) {
		fail( ErrorCode::ArityMismatch, std::string( node_kind_name( kind ) ) + " expects " +
			std::to_string( n ) + " children, got " + std::to_string( ch.size() ) );
	}
	for( const auto &c : ch ) {
		if( !c ) fail( ErrorCode::TypeMismatch, "null child" );
	}
}

void expect_kind( const Expr &child, TypeKind kind, const char *what ) {
	if( child->tag.kind != kind ) {
		fail( ErrorCode::TypeMismatch, std::string( what ) + ", got " + child->tag.to_string() );
	}
}

ConnectiveFlags connective_flags( NodeKind kind, const std::vector< Expr > &ch ) {
	ConnectiveFlags f {};
	for( std::size_t i = 0; i < ch.size(); ++i ) {
		expect_kind( ch[ i ], TypeKind::Bool, "connective operand must be Bool" );
		if( i == 0 ) {
			f = ch[ 0 ]->tag.flags;
		} else if( !( ch[ i ]->tag.flags == f ) ) {
			fail( ErrorCode::FlagViolation, std::string( node_kind_name( kind ) ) +
				" operands carry different flags: " + f.to_string() + " vs " +
				ch[ i ]->tag.flags.to_string() );
		}
	}
	bool ok = true;
	switch( kind ) {
	case NodeKind::And: case NodeKind::Or: ok = f.lattice; break;
	case NodeKind::Not: ok = f.neg; break;
	case NodeKind::Impl: ok = f.impl; break;
	case NodeKind::MAnd: case NodeKind::MOr: ok = f.monoid; break;
	default: break;
	}
	if( !ok ) {
		fail( ErrorCode::FlagViolation, std::string( node_kind_name( kind ) ) +
			" is undefined under flags " + f.to_string() );
	}
	return f;
}

} // namespace

Expr build_node( NodeKind kind, std::vector< Expr > children, const NodeParams &p ) {
	auto node = NodeFactory::make();
	node->kind = kind;
	switch( kind ) {
	case NodeKind::BoolConst:
		expect_children( kind, children, 0 );
		node->bval = p.bval;
		node->tag = TypeTag::boolean( p.flags );
		break;
	case NodeKind::IndexConst:
		expect_children( kind, children, 0 );
		node->tag = TypeTag::index( p.n );
		if( p.ival >= p.n ) {
			fail( ErrorCode::IndexOutOfRange, "index " + std::to_string( p.ival ) +
				" not below " + std::to_string( p.n ) );
		}
		node->ival = p.ival;
		break;
	case NodeKind::RealConst:
		expect_children( kind, children, 0 );
		if( !std::isfinite( p.rval ) ) fail( ErrorCode::DomainError, "real constants must be finite" );
		node->rval = p.rval;
		node->tag = TypeTag::real();
		break;
	case NodeKind::VecConst:
		expect_children( kind, children, 0 );
		for( double v : p.vval ) {
			if( !std::isfinite( v ) ) fail( ErrorCode::DomainError, "vector constants must be finite" );
		}
		node->tag = TypeTag::vector( p.vval.size() );
		node->vval = p.vval;
		break;
	case NodeKind::And: case NodeKind::Or: case NodeKind::MAnd: case NodeKind::MOr:
		if( children.empty() ) {
			fail( ErrorCode::ArityMismatch, std::string( node_kind_name( kind ) ) + " needs at least one operand" );
		}
		for( const auto &c : children ) {
			if( !c ) fail( ErrorCode::TypeMismatch, "null child" );
		}
		node->tag = TypeTag::boolean( connective_flags( kind, children ) );
		break;
	case NodeKind::Not:
		expect_children( kind, children, 1 );
		node->tag = TypeTag::boolean( connective_flags( kind, children ) );
		break;
	case NodeKind::Impl:
		expect_children( kind, children, 2 );
		node->tag = TypeTag::boolean( connective_flags( kind, children ) );
		break;
	case NodeKind::Cmp:
		expect_children( kind, children, 2 );
		expect_kind( children[ 0 ], TypeKind::Real, "comparison operand must be Real" );
		expect_kind( children[ 1 ], TypeKind::Real, "comparison operand must be Real" );
		node->op = p.op;
		node->tag = TypeTag::boolean( p.flags );
		break;
	case NodeKind::FunRef:
		expect_children( kind, children, 0 );
		if( p.name.empty() ) fail( ErrorCode::TypeMismatch, "function reference needs a name" );
		node->name = p.name;
		node->tag = TypeTag::fun( p.m, p.n );
		break;
	case NodeKind::Fun2Ref:
		expect_children( kind, children, 0 );
		if( p.name.empty() ) fail( ErrorCode::TypeMismatch, "function reference needs a name" );
		node->name = p.name;
		node->tag = TypeTag::fun2( p.l, p.m, p.n );
		break;
	case NodeKind::App: {
		expect_children( kind, children, 2 );
		expect_kind( children[ 0 ], TypeKind::Fun, "applied expression must be a Fun" );
		expect_kind( children[ 1 ], TypeKind::Vector, "function argument must be a Vector" );
		const auto &ft = children[ 0 ]->tag;
		if( children[ 1 ]->tag.a != ft.a ) {
			fail( ErrorCode::ArityMismatch, "function expects Vector(" + std::to_string( ft.a ) +
				"), got " + children[ 1 ]->tag.to_string() );
		}
		node->tag = TypeTag::vector( ft.b );
		break;
	}
	case NodeKind::App2: {
		expect_children( kind, children, 3 );
		expect_kind( children[ 0 ], TypeKind::Fun2, "applied expression must be a Fun2" );
		expect_kind( children[ 1 ], TypeKind::Vector, "function argument must be a Vector" );
		expect_kind( children[ 2 ], TypeKind::Vector, "function argument must be a Vector" );
		const auto &ft = children[ 0 ]->tag;
		if( children[ 1 ]->tag.a != ft.a || children[ 2 ]->tag.a != ft.b ) {
			fail( ErrorCode::ArityMismatch, "binary function expects Vector(" + std::to_string( ft.a ) +
				") and Vector(" + std::to_string( ft.b ) + ")" );
		}
		node->tag = TypeTag::vector( ft.c );
		break;
	}
	case NodeKind::Lookup:
		expect_children( kind, children, 2 );
		expect_kind( children[ 0 ], TypeKind::Vector, "lookup target must be a Vector" );
		expect_kind( children[ 1 ], TypeKind::Index, "lookup index must be an Index" );
		if( children[ 0 ]->tag.a != children[ 1 ]->tag.a ) {
			fail( ErrorCode::ArityMismatch, "Index(" + std::to_string( children[ 1 ]->tag.a ) +
				") does not fit " + children[ 0 ]->tag.to_string() );
		}
		node->tag = TypeTag::real();
		break;
	}
	node->children = std::move( children );
	return node;
}

const TypeTag &type_of( const Expr &e ) noexcept { return e->tag; }

namespace {

void validate_rec( const Expr &e, const ConnectiveFlags &profile, const std::string &path ) {
	if( e->tag.kind == TypeKind::Bool && !( e->tag.flags == profile ) ) {
		fail( ErrorCode::FlagViolation, std::string( node_kind_name( e->kind ) ) + " carries " +
			e->tag.flags.to_string() + ", logic requires " + profile.to_string(), path );
	}
	for( std::size_t i = 0; i < e->children.size(); ++i ) {
		validate_rec( e->children[ i ], profile, path + "/" + std::to_string( i ) );
	}
}

} // namespace

void validate_for_logic( const Expr &e, const Logic &logic ) {
	const ConnectiveFlags profile = logic.flag_profile();
	validate_rec( e, profile, "$" );
}

bool structurally_equal( const Expr &x, const Expr &y ) noexcept {
	if( x.get() == y.get() ) return true;
	if( !x || !y ) return false;
	if( x->kind != y->kind || !( x->tag == y->tag ) ) return false;
	switch( x->kind ) {
	case NodeKind::BoolConst: if( x->bval != y->bval ) return false; break;
	case NodeKind::IndexConst: if( x->ival != y->ival ) return false; break;
	case NodeKind::RealConst: if( x->rval != y->rval ) return false; break;
	case NodeKind::VecConst: if( x->vval != y->vval ) return false; break;
	case NodeKind::Cmp: if( x->op != y->op ) return false; break;
	case NodeKind::FunRef: case NodeKind::Fun2Ref: if( x->name != y->name ) return false; break;
	default: break;
	}
	if( x->children.size() != y->children.size() ) return false;
	for( std::size_t i = 0; i < x->children.size(); ++i ) {
		if( !structurally_equal( x->children[ i ], y->children[ i ] ) ) return false;
	}
	return true;
}

namespace {

inline void mix( std::size_t &seed, std::size_t v ) noexcept {
	seed ^= v + 0x9e3779b97f4a7c15ULL + ( seed << 6 ) + ( seed >> 2 );
}

} // namespace

std::size_t structural_hash( const Expr &e ) noexcept {
	std::size_t h = static_cast< std::size_t >( e->kind );
	switch( e->kind ) {
	case NodeKind::BoolConst: mix( h, e->bval ); break;
	case NodeKind::IndexConst: mix( h, e->ival ); break;
	case NodeKind::RealConst: mix( h, std::hash< double >()( e->rval ) ); break;
	case NodeKind::VecConst:
		for( double v : e->vval ) mix( h, std::hash< double >()( v ) );
		break;
	case NodeKind::Cmp: mix( h, static_cast< std::size_t >( e->op ) ); break;
	case NodeKind::FunRef: case NodeKind::Fun2Ref: mix( h, std::hash< std::string >()( e->name ) ); break;
	default: break;
	}
	for( const auto &c : e->children ) mix( h, structural_hash( c ) );
	return h;
}

namespace {

std::string number_text( double v ) {
	char buf[ 64 ];
	auto res = std::to_chars( buf, buf + sizeof( buf ), v );
	return std::string( buf, res.ptr );
}

bool needs_parens( const Expr &e ) {
	switch( e->kind ) {
	case NodeKind::And: case NodeKind::Or: case NodeKind::MAnd: case NodeKind::MOr: case NodeKind::Impl:
		return true;
	default:
		return false;
	}
}

void print( std::ostream &os, const Expr &e );

void print_operand( std::ostream &os, const Expr &e ) {
	if( needs_parens( e ) ) {
		os << "(";
		print( os, e );
		os << ")";
	} else {
		print( os, e );
	}
}

void print_nary( std::ostream &os, const Expr &e, const char *infix, const char *prefix ) {
	if( e->children.size() == 1 ) {
		os << prefix << "(";
		print( os, e->children[ 0 ] );
		os << ")";
		return;
	}
	for( std::size_t i = 0; i < e->children.size(); ++i ) {
		if( i ) os << " " << infix << " ";
		print_operand( os, e->children[ i ] );
	}
}

void print( std::ostream &os, const Expr &e ) {
	switch( e->kind ) {
	case NodeKind::BoolConst: os << ( e->bval ? "true" : "false" ); break;
	case NodeKind::IndexConst: os << e->ival; break;
	case NodeKind::RealConst: os << number_text( e->rval ); break;
	case NodeKind::VecConst:
		os << "[";
		for( std::size_t i = 0; i < e->vval.size(); ++i ) os << ( i ? ", " : "" ) << number_text( e->vval[ i ] );
		os << "]";
		break;
	case NodeKind::And: print_nary( os, e, "/\\", "and" ); break;
	case NodeKind::Or: print_nary( os, e, "\\/", "or" ); break;
	case NodeKind::MAnd: print_nary( os, e, "(*)", "mand" ); break;
	case NodeKind::MOr: print_nary( os, e, "(+)", "mor" ); break;
	case NodeKind::Not:
		os << "~";
		if( e->children[ 0 ]->kind == NodeKind::Cmp ) {
			os << "(";
			print( os, e->children[ 0 ] );
			os << ")";
		} else {
			print_operand( os, e->children[ 0 ] );
		}
		break;
	case NodeKind::Impl:
		print_operand( os, e->children[ 0 ] );
		os << " => ";
		print_operand( os, e->children[ 1 ] );
		break;
	case NodeKind::Cmp:
		print( os, e->children[ 0 ] );
		os << ( e->op == CmpOp::Le ? " <= " : " == " );
		print( os, e->children[ 1 ] );
		break;
	case NodeKind::FunRef: case NodeKind::Fun2Ref: os << e->name; break;
	case NodeKind::App:
		print( os, e->children[ 0 ] );
		os << "(";
		print( os, e->children[ 1 ] );
		os << ")";
		break;
	case NodeKind::App2:
		print( os, e->children[ 0 ] );
		os << "(";
		print( os, e->children[ 1 ] );
		os << ", ";
		print( os, e->children[ 2 ] );
		os << ")";
		break;
	case NodeKind::Lookup:
		print( os, e->children[ 0 ] );
		os << "[";
		print( os, e->children[ 1 ] );
		os << "]";
		break;
	}
}

} // namespace

std::string to_surface( const Expr &e ) {
	std::ostringstream os;
	print( os, e );
	return os.str();
}

namespace ast {

Expr bool_const( bool b, ConnectiveFlags flags ) {
	NodeParams p;
	p.bval = b;
	p.flags = flags;
	return build_node( NodeKind::BoolConst, {}, p );
}

Expr top( ConnectiveFlags flags ) { return bool_const( true, flags ); }
Expr bot( ConnectiveFlags flags ) { return bool_const( false, flags ); }

Expr index_const( std::size_t i, std::size_t n ) {
	NodeParams p;
	p.ival = i;
	p.n = n;
	return build_node( NodeKind::IndexConst, {}, p );
}

Expr real_const( double r ) {
	NodeParams p;
	p.rval = r;
	return build_node( NodeKind::RealConst, {}, p );
}

Expr vec_const( std::vector< double > values ) {
	NodeParams p;
	p.vval = std::move( values );
	return build_node( NodeKind::VecConst, {}, p );
}

Expr conj( std::vector< Expr > children ) { return build_node( NodeKind::And, std::move( children ) ); }
Expr disj( std::vector< Expr > children ) { return build_node( NodeKind::Or, std::move( children ) ); }
Expr neg( Expr child ) { return build_node( NodeKind::Not, { std::move( child ) } ); }
Expr impl( Expr lhs, Expr rhs ) { return build_node( NodeKind::Impl, { std::move( lhs ), std::move( rhs ) } ); }
Expr mand( std::vector< Expr > children ) { return build_node( NodeKind::MAnd, std::move( children ) ); }
Expr mor( std::vector< Expr > children ) { return build_node( NodeKind::MOr, std::move( children ) ); }

Expr cmp( CmpOp op, Expr lhs, Expr rhs, ConnectiveFlags flags ) {
	NodeParams p;
	p.op = op;
	p.flags = flags;
	return build_node( NodeKind::Cmp, { std::move( lhs ), std::move( rhs ) }, p );
}

Expr le( Expr lhs, Expr rhs, ConnectiveFlags flags ) { return cmp( CmpOp::Le, std::move( lhs ), std::move( rhs ), flags ); }
Expr eq( Expr lhs, Expr rhs, ConnectiveFlags flags ) { return cmp( CmpOp::Eq, std::move( lhs ), std::move( rhs ), flags ); }

Expr fun_ref( std::string name, std::size_t m, std::size_t n ) {
	NodeParams p;
	p.name = std::move( name );
	p.m = m;
	p.n = n;
	return build_node( NodeKind::FunRef, {}, p );
}

Expr fun2_ref( std::string name, std::size_t l, std::size_t m, std::size_t n ) {
	NodeParams p;
	p.name = std::move( name );
	p.l = l;
	p.m = m;
	p.n = n;
	return build_node( NodeKind::Fun2Ref, {}, p );
}

Expr app( Expr fun, Expr arg ) { return build_node( NodeKind::App, { std::move( fun ), std::move( arg ) } ); }

Expr app2( Expr fun, Expr arg1, Expr arg2 ) {
	return build_node( NodeKind::App2, { std::move( fun ), std::move( arg1 ), std::move( arg2 ) } );
}

Expr lookup( Expr vec, Expr index ) { return build_node( NodeKind::Lookup, { std::move( vec ), std::move( index ) } ); }

} // namespace ast

} // namespace dlc
