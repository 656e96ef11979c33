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

#include <dlc/random_formula.hpp>

namespace dlc {

FormulaOptions FormulaOptions::for_logic( const Logic &logic ) {
	FormulaOptions o;
	if( logic.kind() == LogicKind::DL2 ) o.allow_bot = false;
	if( logic.kind() == LogicKind::STL ) {
		o.allow_top = false;
		o.allow_bot = false;
	}
	return o;
}

namespace {

double grid_constant( std::mt19937_64 &rng ) {
	std::uniform_int_distribution< int > k( -6, 6 );
	return k( rng ) / 2.0;
}

Expr leaf( const ConnectiveFlags &profile, std::mt19937_64 &rng, const FormulaOptions &o ) {
	std::uniform_real_distribution< double > u( 0.0, 1.0 );
	if( ( o.allow_top || o.allow_bot ) && u( rng ) < o.const_prob ) {
		bool b;
		if( o.allow_top && o.allow_bot ) {
			b = u( rng ) < 0.5;
		} else {
			b = o.allow_top;
		}
		return ast::bool_const( b, profile );
	}
	return random_atom( profile, rng );
}

} // namespace

Expr random_atom( const ConnectiveFlags &profile, std::mt19937_64 &rng ) {
	std::uniform_int_distribution< int > op( 0, 1 );
	const CmpOp which = op( rng ) ? CmpOp::Eq : CmpOp::Le;
	const double a = grid_constant( rng );
	const double b = grid_constant( rng );
	return ast::cmp( which, ast::real_const( a ), ast::real_const( b ), profile );
}

Expr random_formula( const ConnectiveFlags &profile, std::size_t depth, std::mt19937_64 &rng,
	const FormulaOptions &o ) {
	std::uniform_real_distribution< double > u( 0.0, 1.0 );
	if( depth == 0 || u( rng ) < o.leaf_prob ) return leaf( profile, rng, o );

	std::vector< NodeKind > kinds;
	if( profile.lattice ) {
		kinds.push_back( NodeKind::And );
		kinds.push_back( NodeKind::Or );
	}
	if( profile.neg ) kinds.push_back( NodeKind::Not );
	if( profile.impl ) kinds.push_back( NodeKind::Impl );
	if( profile.monoid ) {
		kinds.push_back( NodeKind::MAnd );
		kinds.push_back( NodeKind::MOr );
	}
	if( kinds.empty() ) return leaf( profile, rng, o );

	std::uniform_int_distribution< std::size_t > pick( 0, kinds.size() - 1 );
	const NodeKind kind = kinds[ pick( rng ) ];
	std::size_t arity;
	switch( kind ) {
	case NodeKind::Not: arity = 1; break;
	case NodeKind::Impl: arity = 2; break;
	default: {
		std::uniform_int_distribution< std::size_t > n( o.min_arity, o.max_arity );
		arity = n( rng );
	}
	}
	std::vector< Expr > children;
	for( std::size_t i = 0; i < arity; ++i ) children.push_back( random_formula( profile, depth - 1, rng, o ) );
	return build_node( kind, std::move( children ) );
}

Expr random_formula( const ConnectiveFlags &profile, std::size_t depth, std::uint64_t seed,
	const FormulaOptions &options ) {
	std::mt19937_64 rng( seed );
	return random_formula( profile, depth, rng, options );
}

} // namespace dlc
