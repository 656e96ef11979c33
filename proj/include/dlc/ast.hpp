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

#ifndef DLC_AST_HPP
#define DLC_AST_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <dlc/logic.hpp>

namespace dlc {

enum class TypeKind { Bool, Real, Index, Vector, Fun, Fun2 };

/**
 * Bool(flags) | Real | Index(n) | Vector(n) | Fun(m, n) | Fun2(l, m, n).
 * Fun(m, n) maps R^m to R^n; Fun2(l, m, n) maps R^l x R^m to R^n. All counts are >= 1.
 */
struct TypeTag {
	TypeKind kind = TypeKind::Real;
	ConnectiveFlags flags {};
	std::size_t a = 0, b = 0, c = 0;

	static TypeTag boolean( ConnectiveFlags f ) { return { TypeKind::Bool, f, 0, 0, 0 }; }
	static TypeTag real() { return { TypeKind::Real, {}, 0, 0, 0 }; }
	static TypeTag index( std::size_t n );
	static TypeTag vector( std::size_t n );
	static TypeTag fun( std::size_t m, std::size_t n );
	static TypeTag fun2( std::size_t l, std::size_t m, std::size_t n );

	bool operator==( const TypeTag &o ) const noexcept;
	std::string to_string() const;
};

enum class NodeKind {
	BoolConst, IndexConst, RealConst, VecConst,
	And, Or, Not, Impl, MAnd, MOr, Cmp,
	FunRef, Fun2Ref, App, App2, Lookup
};

enum class CmpOp { Le, Eq };

const char *node_kind_name( NodeKind kind ) noexcept;
bool is_connective( NodeKind kind ) noexcept;

class Node;
using Expr = std::shared_ptr< const Node >;

/** Immutable node; only the builders below create one, so every stored tag is validated. */
class Node {
public:
	NodeKind kind;
	TypeTag tag;
	std::vector< Expr > children;
	bool bval = false;             // BoolConst
	double rval = 0.0;             // RealConst
	std::size_t ival = 0;          // IndexConst value
	std::vector< double > vval;    // VecConst
	CmpOp op = CmpOp::Le;          // Cmp
	std::string name;              // FunRef, Fun2Ref

private:
	Node() = default;
	friend struct NodeFactory;
};

/** Payload for `build_node`; which fields matter depends on the kind. */
struct NodeParams {
	ConnectiveFlags flags {};      // BoolConst, Cmp
	bool bval = false;
	double rval = 0.0;
	std::size_t ival = 0;
	std::size_t n = 0;             // IndexConst bound
	std::vector< double > vval;
	CmpOp op = CmpOp::Le;
	std::string name;
	std::size_t l = 0, m = 0;      // FunRef (m -> n), Fun2Ref (l, m -> n)
};

/** Computes and validates the tag; throws FlagViolation, ArityMismatch, TypeMismatch, IndexOutOfRange. */
Expr build_node( NodeKind kind, std::vector< Expr > children, const NodeParams &params = {} );

const TypeTag &type_of( const Expr &e ) noexcept;

/** Throws FlagViolation, with the path of the first Bool node whose flags differ from the profile. */
void validate_for_logic( const Expr &e, const Logic &logic );

bool structurally_equal( const Expr &x, const Expr &y ) noexcept;
std::size_t structural_hash( const Expr &e ) noexcept;

struct ExprEq {
	bool operator()( const Expr &x, const Expr &y ) const noexcept { return structurally_equal( x, y ); }
};
struct ExprHash {
	std::size_t operator()( const Expr &e ) const noexcept { return structural_hash( e ); }
};

/** Infix rendering in the surface syntax; parenthesizes every compound operand. */
std::string to_surface( const Expr &e );

namespace ast {

Expr bool_const( bool b, ConnectiveFlags flags );
Expr top( ConnectiveFlags flags );
Expr bot( ConnectiveFlags flags );
Expr index_const( std::size_t i, std::size_t n );
Expr real_const( double r );
Expr vec_const( std::vector< double > values );
Expr conj( std::vector< Expr > children );
Expr disj( std::vector< Expr > children );
Expr neg( Expr child );
Expr impl( Expr lhs, Expr rhs );
Expr mand( std::vector< Expr > children );
Expr mor( std::vector< Expr > children );
Expr cmp( CmpOp op, Expr lhs, Expr rhs, ConnectiveFlags flags );
Expr le( Expr lhs, Expr rhs, ConnectiveFlags flags );
Expr eq( Expr lhs, Expr rhs, ConnectiveFlags flags );
Expr fun_ref( std::string name, std::size_t m, std::size_t n );
Expr fun2_ref( std::string name, std::size_t l, std::size_t m, std::size_t n );
Expr app( Expr fun, Expr arg );
Expr app2( Expr fun, Expr arg1, Expr arg2 );
Expr lookup( Expr vec, Expr index );

} // namespace ast

} // namespace dlc

#endif
