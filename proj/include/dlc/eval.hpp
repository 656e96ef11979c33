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

#ifndef DLC_EVAL_HPP
#define DLC_EVAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include <dlc/ast.hpp>
#include <dlc/logic.hpp>
#include <dlc/semantics.hpp>
#include <dlc/spec.hpp>

namespace dlc {

/** Options shared by the CLI subcommands. */
struct RunConfig {
	std::string logic = "dl2";
	double r = 2.0;                // Yager exponent, > 0
	double nu = 1.0;               // STL sharpness, > 0
	std::string carrier;           // "f64" | "xreal"; empty picks xreal for stl-inf, f64 otherwise
	double tol = 1e-9;
	std::uint64_t seed = 7;
	std::size_t samples = 1000;

	/** Throws Usage for unknown names or a non-positive r / nu. */
	Logic make_logic() const;
	std::string resolved_carrier() const;
};

/** Named input vectors; a scalar is a vector of length 1. */
using Bindings = std::map< std::string, std::vector< double > >;

/** Lines "name,v1,v2,..."; blank lines and '#' comments are skipped. ParseError on bad numbers. */
Bindings parse_bindings_csv( const std::string &text );
/** {"x": [0.1, 0], "eps": 0.2}. SchemaError on other shapes. */
Bindings bindings_from_json( const nlohmann::json &j );
/** Picks the format by extension (.json or anything else as CSV); IoError when unreadable. */
Bindings load_bindings( const std::string &path );

struct CompiledSpec {
	SpecDoc doc;
	Logic logic = Logic::dl2();
	Env env;
	Expr expr;
};

/**
 * Parses and elaborates `text`. Every declared network and function must be in
 * `env` with the declared arities (UnresolvedFunction, ArityError).
 */
CompiledSpec compile_spec( const std::string &text, const Logic &logic, const Env &env );

/** ⟦goal⟧ on the given carrier ("f64" or "xreal"). Unbound inputs are a ValidationError. */
double evaluate( const CompiledSpec &spec, const Bindings &inputs, const std::string &carrier = "f64" );

struct GradientEntry {
	double dual = 0.0;
	double central = 0.0;
	double below = 0.0, above = 0.0;
	bool skipped = false;   // one-sided estimates disagree by more than 1e-3
	double rel_err = 0.0;
};

struct EvalReport {
	std::string logic, carrier;
	double loss = 0.0;                 // ⟦goal⟧
	std::string wrt;                   // empty: no gradient requested
	std::vector< double > point;
	std::vector< GradientEntry > gradient;
	std::string gradient_note;         // why no gradient was computed
	bool gradient_ok = true;           // every non-skipped coordinate within 1e-4 relative

	nlohmann::json to_json() const;
};

/**
 * Value of the goal and, when `wrt` names a bound vector, its dual-mode
 * gradient cross-checked against central differences. Relative error is
 * |dual - central| / max(1, |central|).
 */
EvalReport eval_loss( const RunConfig &config, const CompiledSpec &spec, const Bindings &inputs,
	const std::string &wrt = {} );

struct GradientAgreement {
	std::size_t points = 0;       // smooth points checked
	std::size_t resampled = 0;    // points rejected as nondifferentiable
	double max_rel_err = 0.0;
	bool ok = false;
};

/** Checks `points` random smooth points, drawing `wrt` uniformly in [-scale, scale]^n around its binding. */
GradientAgreement gradient_agreement( const RunConfig &config, const CompiledSpec &spec, const Bindings &inputs,
	const std::string &wrt, std::size_t points, double scale, std::uint64_t seed );

struct TrainStep {
	std::size_t step = 0;
	double value = 0.0;       // ⟦goal⟧ at x
	double violation = 0.0;   // -⟦goal⟧, the adversary's objective
	std::vector< double > x;
};

struct TrainTrace {
	std::string logic;
	double learning_rate = 0.0;
	std::vector< TrainStep > steps;

	/** violation non-decreasing over the first `count` steps, up to `slack`. */
	bool non_decreasing( std::size_t count, double slack ) const;
	nlohmann::json to_json() const;
};

/**
 * Adversarial inner loop: gradient ascent of -⟦goal⟧ in `wrt`, each step
 * projected onto the box |x - center|_inf <= radius. Trace entry 0 is the start.
 * RejectedLogic unless the logic is DL2, Product or STL.
 */
TrainTrace train_demo( const RunConfig &config, const CompiledSpec &spec, const Bindings &inputs, std::size_t steps,
	double learning_rate, const std::string &wrt = "x", const std::string &center = "v",
	const std::string &radius = "eps" );

} // namespace dlc

#endif
