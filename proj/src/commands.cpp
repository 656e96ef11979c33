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

#include <dlc/commands.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include <dlc/analysis.hpp>
#include <dlc/ast_json.hpp>
#include <dlc/calculus.hpp>
#include <dlc/laws.hpp>

namespace dlc::cmd {

namespace {

using nlohmann::json;

json header( const char *command, const RunConfig &config, const std::string &logic_label ) {
	return { { "schema", kReportSchema }, { "command", command }, { "logic", logic_label },
		{ "config", { { "r", config.r }, { "nu", config.nu }, { "carrier", config.resolved_carrier() },
			{ "tol", config.tol }, { "seed", config.seed }, { "samples", config.samples } } } };
}

json check_to_json( const CheckResult &r ) {
	json j { { "ok", r.ok } };
	if( !r.ok ) {
		j[ "code" ] = error_code_name( r.code );
		j[ "message" ] = r.message;
		j[ "path" ] = r.path;
	}
	return j;
}

/** Arguments for the shadow-lifting probe: the fuzzy carrier stops at 1. */
std::vector< double > shadow_points( const Logic &logic ) {
	if( logic.is_fuzzy() ) return { 0.25, 0.5, 0.75 };
	return { 0.5, 1.0, 2.0 };
}

/**
 * Near-ties converge slowly (the STL gap decays like exp(-nu * d) in the
 * relative spread d, the Yager gap like 1/r), so the convergence inputs keep
 * entries apart: |a - b| >= sep * max(|a|, |b|) for vectors, |a - b| >= sep for pairs.
 */
constexpr double kRelativeSeparation = 0.1;
constexpr double kPairSeparation = 0.1;

bool separated( const std::vector< double > &v, double sep ) {
	for( std::size_t i = 0; i < v.size(); ++i ) {
		for( std::size_t j = i + 1; j < v.size(); ++j ) {
			if( std::fabs( v[ i ] - v[ j ] ) < sep * std::max( std::fabs( v[ i ] ), std::fabs( v[ j ] ) ) ) return false;
		}
	}
	return true;
}

} // namespace

json compile( const RunConfig &config, const std::string &spec_text, const Env &env ) {
	const CompiledSpec spec = compile_spec( spec_text, config.make_logic(), env );
	json j = header( "compile", config, spec.logic.label() );
	j[ "spec" ] = print_spec( spec.doc );
	j[ "expr" ] = expr_to_json( spec.expr );
	j[ "pass" ] = true;
	return j;
}

json eval( const RunConfig &config, const std::string &spec_text, const Env &env, const Bindings &inputs,
	const std::string &wrt ) {
	const CompiledSpec spec = compile_spec( spec_text, config.make_logic(), env );
	const EvalReport rep = eval_loss( config, spec, inputs, wrt );
	json j = header( "eval", config, spec.logic.label() );
	j.update( rep.to_json() );
	j[ "pass" ] = rep.gradient_ok;
	return j;
}

json train_demo( const RunConfig &config, const std::string &spec_text, const Env &env, const Bindings &inputs,
	std::size_t steps, double learning_rate ) {
	const CompiledSpec spec = compile_spec( spec_text, config.make_logic(), env );
	const TrainTrace trace = dlc::train_demo( config, spec, inputs, steps, learning_rate );
	json j = header( "train-demo", config, spec.logic.label() );
	j.update( trace.to_json() );
	const bool mono = trace.non_decreasing( 11, 1e-12 );
	j[ "non_decreasing_first_10" ] = mono;
	j[ "pass" ] = mono;
	return j;
}

json laws( const RunConfig &config, bool all_logics ) {
	const std::vector< Logic > logics = all_logics ? table3_logics() : std::vector< Logic > { config.make_logic() };
	const Table3Matrix m = table3_matrix( config.seed, config.samples, config.tol, logics );
	json j = header( "laws", config, all_logics ? "all" : logics.front().label() );
	j[ "table3" ] = m.to_json();
	j[ "rendered" ] = m.render();
	j[ "pass" ] = m.all_match();
	return j;
}

json shadow( const RunConfig &config, std::size_t max_n ) {
	if( max_n < 2 ) fail( ErrorCode::Usage, "shadow needs --max-n >= 2" );
	const Logic logic = config.make_logic();
	const ScalarField f = conjunction_field( logic );
	json j = header( "shadow", config, logic.label() );
	j[ "arities" ] = json::array();
	bool holds = true;
	for( std::size_t n = 2; n <= max_n; ++n ) {
		const ShadowReport r = shadow_lifting_check( f, n, shadow_points( logic ), 1e-9 );
		holds = holds && r.holds;
		j[ "arities" ].push_back( r.to_json() );
	}
	if( logic.kind() == LogicKind::STL ) {
		j[ "lt0_branch" ] = json::array();
		for( std::size_t n = 2; n <= max_n; ++n ) {
			const BranchDerivative d = stl_lt0_branch_derivative( n, 1.0, logic.nu() );
			j[ "lt0_branch" ].push_back( { { "n", n }, { "below", d.below }, { "above", d.above }, { "value", d.value },
				{ "reference", 1.0 / static_cast< double >( n ) } } );
		}
	}
	j[ "verdict" ] = holds ? "holds" : "fails";
	j[ "pass" ] = holds;
	return j;
}

json converge( const RunConfig &config, std::size_t count ) {
	const Logic logic = config.make_logic();
	std::mt19937_64 rng( config.seed );
	json j = header( "converge", config, logic.label() );
	j[ "series" ] = json::array();
	bool pass = true;
	if( logic.kind() == LogicKind::STL ) {
		const std::vector< double > schedule { 1.0, 3.0, 10.0, 30.0, 100.0 };
		std::uniform_int_distribution< std::size_t > len( 2, 5 );
		std::uniform_real_distribution< double > mag( 0.5, 3.0 );
		for( std::size_t k = 0; k < count; ++k ) {
			// Alternate sign regimes: all positive, then at least one negative entry.
			std::vector< double > v;
			do {
				v.assign( len( rng ), 0.0 );
				for( auto &x : v ) x = mag( rng );
				if( k % 2 == 1 ) {
					for( std::size_t i = 0; i < v.size(); i += 2 ) v[ i ] = -v[ i ];
				}
			} while( !separated( v, kRelativeSeparation ) );
			const ConvergenceReport r = convergence_stl_min( v, schedule, 1e-3 );
			const bool mono = non_increasing( r.series.front().points, 1e-12 );
			json s = r.to_json();
			s[ "non_increasing" ] = mono;
			pass = pass && r.pass && mono;
			j[ "series" ].push_back( std::move( s ) );
		}
	} else if( logic.kind() == LogicKind::Yager ) {
		const std::vector< double > schedule { 1.0, 2.0, 4.0, 8.0, 16.0, 32.0 };
		std::uniform_real_distribution< double > u( 0.0, 1.0 );
		std::vector< std::pair< double, double > > pairs;
		while( pairs.size() < count ) {
			const double a = u( rng ), b = u( rng );
			if( std::fabs( a - b ) >= kPairSeparation ) pairs.emplace_back( a, b );
		}
		const ConvergenceReport r = convergence_yager_godel( pairs, schedule, 1e-2 );
		pass = r.pass;
		j[ "series" ].push_back( r.to_json() );
	} else {
		fail( ErrorCode::Usage, "converge is defined for --logic stl or --logic yager" );
	}
	j[ "pass" ] = pass;
	return j;
}

json proof_check( const RunConfig &config, const json &doc ) {
	const Calculus calc( config.make_logic() );
	json j = header( "proof check", config, calc.logic().label() );
	const ProofTree tree = proof_from_json( doc, calc.logic() );
	CheckResult r;
	if( doc.contains( "derived_rule" ) ) {
		const json &d = doc.at( "derived_rule" );
		if( !d.is_object() || !d.contains( "rule" ) || !d.contains( "conclusion" ) ) {
			fail( ErrorCode::SchemaError, "'derived_rule' needs 'rule' and 'conclusion'", "$.derived_rule" );
		}
		const RuleInstance rule = rule_from_json( d.at( "rule" ) );
		const Hypersequent concl = hypersequent_from_json( d.at( "conclusion" ), calc.logic() );
		r = check_derived_rule( calc, rule, concl, tree );
		j[ "derived_rule" ] = rule_name( rule.rule );
	} else {
		r = check_proof( calc, tree );
	}
	j[ "conclusion" ] = tree.conclusion.to_string();
	j[ "size" ] = tree.size();
	j[ "height" ] = tree.height();
	j[ "check" ] = check_to_json( r );
	j[ "pass" ] = r.ok;
	return j;
}

json proof_search( const RunConfig &config, const std::string &goal, std::size_t depth ) {
	const Calculus calc( config.make_logic() );
	const Hypersequent h = parse_hypersequent( goal, calc.logic() );
	SearchStats st;
	const auto tree = prove_bounded( calc, h, depth, &st );
	json j = header( "proof search", config, calc.logic().label() );
	j[ "goal" ] = h.to_string();
	j[ "depth_budget" ] = depth;
	j[ "stats" ] = { { "nodes", st.nodes }, { "memo_hits", st.memo_hits }, { "depth_reached", st.depth_reached },
		{ "from_fixture", st.from_fixture } };
	j[ "status" ] = tree ? "Found" : "NotFound";
	if( tree ) {
		j[ "proof" ] = proof_to_json( calc, *tree );
		j[ "check" ] = check_to_json( check_proof( calc, *tree ) );
	}
	j[ "pass" ] = tree.has_value();
	return j;
}

json weakcomp( const RunConfig &config, std::size_t depth, const std::string &save_dir ) {
	const Calculus calc( config.make_logic() );
	const CompletenessReport rep = weak_completeness_suite( calc, depth );
	json j = header( "weakcomp", config, calc.logic().label() );
	j.update( rep.to_json() );
	if( !save_dir.empty() ) {
		std::error_code ec;
		std::filesystem::create_directories( save_dir, ec );
		j[ "saved" ] = json::array();
		for( const auto &g : rep.goals ) {
			if( g.status != GoalStatus::Found && g.status != GoalStatus::Fixture ) continue;
			const auto tree = prove_bounded( calc, g.goal, depth );
			if( !tree ) continue;
			const std::string dir = g.direction == "lhs<=rhs" ? "lr" : "rl";
			const auto path = std::filesystem::path( save_dir ) / ( calc.name() + "-" + g.axiom + "-" + dir + ".json" );
			std::ofstream out( path );
			if( !out ) fail( ErrorCode::IoError, "cannot write " + path.string() );
			out << proof_to_json( calc, *tree ).dump( 1, '\t' ) << "\n";
			j[ "saved" ].push_back( path.string() );
		}
	}
	j[ "pass" ] = rep.all_discharged();
	return j;
}

json fuzz_soundness( const RunConfig &config, std::size_t trials, std::size_t depth, std::size_t rule_instances ) {
	const Calculus calc( config.make_logic() );
	const SoundnessReport rep = soundness_fuzz( calc, trials, depth, config.seed, config.tol );
	json j = header( "fuzz-soundness", config, calc.logic().label() );
	j[ "derivations" ] = rep.to_json();
	bool pass = rep.passed();
	if( rule_instances ) {
		j[ "rules" ] = json::array();
		for( const auto &r : rule_local_soundness( calc, rule_instances, config.seed, config.tol ) ) {
			json e { { "rule", rule_name( r.rule ) }, { "instances", r.instances }, { "premises_held", r.premises_held },
				{ "violations", r.violations } };
			if( !r.witness.empty() ) e[ "witness" ] = r.witness;
			pass = pass && r.violations == 0;
			j[ "rules" ].push_back( std::move( e ) );
		}
	}
	j[ "pass" ] = pass;
	return j;
}

} // namespace dlc::cmd
