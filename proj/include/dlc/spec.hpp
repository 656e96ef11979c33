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

#ifndef DLC_SPEC_HPP
#define DLC_SPEC_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <dlc/ast.hpp>
#include <dlc/logic.hpp>
#include <dlc/semantics.hpp>

namespace dlc {

/**
 * Surface syntax tree, before elaboration. Positions are 1-based and ignored
 * by `surface_equal`.
 */
struct SurfaceExpr;
using SurfacePtr = std::shared_ptr< const SurfaceExpr >;

enum class SurfaceKind {
	BoolLit,   // true | false
	Number,    // 1.5, -2
	VecLit,    // [1, 2]
	Ident,     // declared vector or scalar
	Call,      // N(x), f(x, y)
	Index,     // e[i]
	Norm,      // |e|_inf
	Sub,       // sub(a, b)
	Nary,      // a /\ b /\ c, and(a), ...
	Not,       // ~a
	Impl,      // a => b
	Cmp        // a <= b, a == b
};

struct SurfaceExpr {
	SurfaceKind kind = SurfaceKind::Number;
	std::string name;               // Ident, Call
	double number = 0.0;            // Number
	bool truth = false;             // BoolLit
	std::size_t index = 0;          // Index
	std::vector< double > values;   // VecLit
	NodeKind op = NodeKind::And;    // Nary: And, Or, MAnd, MOr
	CmpOp cmp = CmpOp::Le;          // Cmp
	std::vector< SurfacePtr > kids;
	std::size_t line = 0, col = 0;
};

bool surface_equal( const SurfacePtr &a, const SurfacePtr &b ) noexcept;
/** Canonical text: compound operands parenthesized, same-operator chains flat. */
std::string print_surface( const SurfacePtr &e );

enum class DeclKind { Vector, Scalar, Network, Function };

/** vector x : n | scalar s | network N : m -> n | function f : l, m -> n */
struct Declaration {
	DeclKind kind = DeclKind::Vector;
	std::string name;
	std::size_t l = 0, m = 0, n = 0;   // Vector: n; Network: m -> n; Function: l, m -> n
	std::size_t line = 0;

	friend bool operator==( const Declaration &a, const Declaration &b ) noexcept {
		return a.kind == b.kind && a.name == b.name && a.l == b.l && a.m == b.m && a.n == b.n;
	}
};

struct SpecDoc {
	std::vector< Declaration > declarations;
	SurfacePtr goal;

	const Declaration *find( const std::string &name ) const noexcept;
};

bool spec_equal( const SpecDoc &a, const SpecDoc &b ) noexcept;
std::string print_spec( const SpecDoc &doc );

/** Throws ParseError (path "line:col"), DuplicateDeclaration, UndeclaredIdentifier. */
SpecDoc parse_spec( const std::string &text );
/** A bare formula with no declarations in scope. */
SurfacePtr parse_surface_formula( const std::string &text );

/**
 * Lowers to the core AST. Vectors become applications of a nullary-like
 * function `x : 1 -> n` to [0], scalars a lookup at 0 of `s : 1 -> 1`,
 * `|e|_inf` becomes norm_inf(e)[0], `sub(a, b)` the built-in. When `env` is
 * given, every network and function must be defined there (UnresolvedFunction).
 * Throws FlagViolation when the goal uses a connective the logic lacks.
 */
Expr elaborate( const SpecDoc &doc, const Logic &logic, const Env *env = nullptr );
Expr elaborate_formula( const SurfacePtr &formula, const SpecDoc &scope, const Logic &logic );

/** parse_surface_formula + elaborate_formula with an empty scope. */
Expr parse_formula( const std::string &text, const Logic &logic );

} // namespace dlc

#endif
