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

#ifndef DLC_RANDOM_FORMULA_HPP
#define DLC_RANDOM_FORMULA_HPP

#include <cstdint>
#include <random>

#include <dlc/ast.hpp>

namespace dlc {

/**
 * Generator distribution. A node at depth > 0 is a leaf with probability
 * `leaf_prob`, otherwise a connective drawn uniformly from those the profile
 * enables, with n-ary arity uniform in [min_arity, max_arity]. A leaf is a
 * BoolConst with probability `const_prob` (if any constant is allowed),
 * otherwise a comparison (<= or == uniformly) between two RealConsts drawn
 * uniformly from {k/2 : k = -6..6}.
 */
struct FormulaOptions {
	bool allow_top = true;
	bool allow_bot = true;
	std::size_t min_arity = 1;
	std::size_t max_arity = 3;
	double leaf_prob = 0.25;
	double const_prob = 0.15;

	/** Disables the constants a logic cannot interpret (DL2 bot, STL top/bot). */
	static FormulaOptions for_logic( const Logic &logic );
};

Expr random_formula( const ConnectiveFlags &profile, std::size_t depth, std::uint64_t seed,
	const FormulaOptions &options = {} );

Expr random_formula( const ConnectiveFlags &profile, std::size_t depth, std::mt19937_64 &rng,
	const FormulaOptions &options = {} );

/** A leaf comparison between two grid constants. */
Expr random_atom( const ConnectiveFlags &profile, std::mt19937_64 &rng );

} // namespace dlc

#endif
