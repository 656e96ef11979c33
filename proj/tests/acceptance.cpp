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

// Acceptance runner: one [PASS]/[FAIL] line per criterion, exit 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <dlc/analysis.hpp>
#include <dlc/ast.hpp>
#include <dlc/calculus.hpp>
#include <dlc/commands.hpp>
#include <dlc/errors.hpp>
#include <dlc/eval.hpp>
#include <dlc/laws.hpp>
#include <dlc/network.hpp>
#include <dlc/semantics.hpp>

using namespace dlc;

namespace {

const std::filesystem::path kFixtures = DLC_TEST_FIXTURES;

struct Outcome {
	bool pass = false;
	std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since( Clock::time_point t0 ) {
	return std::chrono::duration< double >( Clock::now() - t0 ).count();
}

std::string slurp( const std::filesystem::path &p ) {
	std::ifstream in( p );
	if( !in ) fail( ErrorCode::IoError, "cannot read " + p.string() );
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

std::string fmt( const char *f, auto... args ) {
	char buf[ 512 ];
	std::snprintf( buf, sizeof buf, f, args... );
	return buf;
}

std::vector< Logic > fuzzy_logics() {
	return { Logic::godel(), Logic::lukasiewicz(), Logic::yager( 2.0 ), Logic::product() };
}

std::vector< Logic > calculus_logics() {
	return { Logic::godel(), Logic::lukasiewicz(), Logic::product(), Logic::dl2(), Logic::stl_infty() };
}

Outcome golden_two_thirds() {
	const auto t0 = Clock::now();
	std::size_t exact = 0;
	for( const Logic &l : fuzzy_logics() ) {
		const Expr e = ast::eq( ast::real_const( 1.0 ), ast::real_const( 2.0 ), l.flag_profile() );
		if( interpret_bool< double >( l, e, Env {} ) == 2.0 / 3.0 ) ++exact;
	}
	const double ms = 1e3 * seconds_since( t0 );
	return { exact == 4 && ms < 1.0, fmt( "%zu/4 fuzzy logics give exactly 2/3 for [[1 = 2]] in %.3f ms", exact, ms ) };
}

Outcome law_matrix() {
	const auto t0 = Clock::now();
	const Table3Matrix m = table3_matrix( 7, 1000, kLawTol );
	const double s = seconds_since( t0 );
	std::size_t cells = 0, mismatched = 0, no_cells = 0, witnessed = 0, undefined = 0;
	std::string first_bad;
	for( const auto &row : m.rows ) {
		for( const auto &c : row.cells ) {
			++cells;
			if( !c.matches() ) {
				++mismatched;
				if( first_bad.empty() ) first_bad = row.logic + " " + table3_column_name( c.column );
			}
			if( c.expected ) continue;
			++no_cells;
			const bool has_witness = std::any_of( c.reports.begin(), c.reports.end(), []( const LawReport &r ) {
				return r.verdict == Verdict::Counterexample && r.witness.has_value();
			} );
			// A cell whose laws all need a connective the logic leaves undefined has no value to witness.
			const bool all_undefined = std::all_of( c.reports.begin(), c.reports.end(), []( const LawReport &r ) {
				return r.verdict == Verdict::NotApplicable || r.verdict == Verdict::Pass;
			} );
			if( has_witness ) ++witnessed;
			else if( all_undefined ) ++undefined;
		}
	}
	const bool ok = mismatched == 0 && witnessed + undefined == no_cells && s < 30.0;
	std::string d = fmt( "%zu/%zu cells match at 1000 samples, tol 1e-9; %zu 'no' cells witnessed, %zu undefined; %.1f s",
		cells - mismatched, cells, witnessed, undefined, s );
	if( !first_bad.empty() ) d += "; first mismatch: " + first_bad;
	return { ok, d };
}

Outcome residuation() {
	std::size_t ok = 0;
	std::string bad;
	const std::vector< Logic > ls { Logic::dl2(), Logic::product(), Logic::godel(), Logic::lukasiewicz(),
		Logic::yager( 2.0 ), Logic::stl_infty() };
	for( const Logic &l : ls ) {
		const LawReport r = check_residuation( l, 1000, kLawTol, 7 );
		if( r.verdict == Verdict::Pass && r.samples_run >= 1000 ) ++ok;
		else bad += " " + l.label();
	}
	return { ok == ls.size(), fmt( "%zu/%zu logics pass over 1000 off-boundary triples", ok, ls.size() )
		+ ( bad.empty() ? "" : "; failing:" + bad ) };
}

Outcome shadow_goldens() {
	const std::vector< double > ps { 0.5, 1.0, 2.0 };
	double dl2_err = 0.0, prod_err = 0.0, stl_err = 0.0;
	for( std::size_t n = 2; n <= 8; ++n ) {
		const auto r = shadow_lifting_check( conjunction_field( Logic::dl2() ), n, ps, 1e-9 );
		for( const auto &e : r.estimates ) {
			for( double d : { e.dual, e.below, e.above } ) dl2_err = std::max( dl2_err, std::fabs( d - 1.0 ) );
		}
	}
	for( std::size_t n = 2; n <= 5; ++n ) {
		const auto r = shadow_lifting_check( conjunction_field( Logic::product() ), n, ps, 1e-9 );
		for( const auto &e : r.estimates ) {
			const double want = std::pow( e.p, static_cast< double >( n - 1 ) );
			for( double d : { e.dual, e.below, e.above } ) prod_err = std::max( prod_err, std::fabs( d - want ) );
		}
	}
	for( std::size_t n = 2; n <= 6; ++n ) {
		for( double p : ps ) {
			const auto b = stl_lt0_branch_derivative( n, p, 1.0 );
			stl_err = std::max( stl_err, std::fabs( b.value - 1.0 / static_cast< double >( n ) ) );
		}
	}
	std::size_t failing = 0;
	const std::vector< Logic > min_like { Logic::godel(), Logic::lukasiewicz(), Logic::yager( 2.0 ), Logic::stl_infty() };
	for( const Logic &l : min_like ) {
		const auto r = shadow_lifting_check( conjunction_field( l ), 3, { 0.25, 0.5, 0.75 }, 1e-9 );
		if( !r.holds && r.witness.has_value() ) ++failing;
	}
	const bool ok = dl2_err <= 1e-6 && prod_err <= 1e-6 && stl_err <= 1e-4 && failing == min_like.size();
	return { ok, fmt( "max err DL2 %.1e, Product %.1e, STL branch %.1e; %zu/4 min-like conjunctions fail with witness",
					 dl2_err, prod_err, stl_err, failing ) };
}

Outcome convergence() {
	RunConfig cfg;
	cfg.logic = "stl";
	const auto stl = cmd::converge( cfg, 20 );
	cfg.logic = "yager";
	const auto yag = cmd::converge( cfg, 20 );
	const bool ok = stl.at( "pass" ).get< bool >() && yag.at( "pass" ).get< bool >();
	return { ok, std::string( "STL to min over nu in {1,3,10,30,100} at 1e-3: " ) + ( stl.at( "pass" ).get< bool >() ? "pass" : "fail" )
		+ "; Yager to Goedel at r = 32, 1e-2: " + ( yag.at( "pass" ).get< bool >() ? "pass" : "fail" ) };
}

Outcome soundness() {
	const auto t0 = Clock::now();
	std::size_t violations = 0, trials = 0;
	for( const Logic &l : calculus_logics() ) {
		const SoundnessReport r = soundness_fuzz( Calculus { l }, 10000, 6, 7 );
		violations += r.violations.size();
		trials += r.trials;
	}
	const double s = seconds_since( t0 );
	return { violations == 0 && trials == 50000 && s < 120.0,
		fmt( "%zu derivations over 5 calculi at depth <= 6, %zu violations, %.1f s", trials, violations, s ) };
}

Outcome rule_local() {
	std::size_t rules = 0, violations = 0, short_runs = 0;
	for( const Logic &l : calculus_logics() ) {
		for( const auto &r : rule_local_soundness( Calculus { l }, 1000, 7 ) ) {
			++rules;
			violations += r.violations;
			if( r.instances < 1000 ) ++short_runs;
		}
	}
	return { violations == 0 && short_runs == 0,
		fmt( "%zu rule/calculus pairs x 1000 instances, %zu violations", rules, violations ) };
}

Outcome weak_completeness() {
	std::string d;
	bool ok = true;
	for( const Logic &l : { Logic::dl2(), Logic::stl_infty() } ) {
		const auto rep = weak_completeness_suite( Calculus { l }, 12 );
		std::size_t done = 0, na = 0;
		for( const auto &g : rep.goals ) {
			if( g.status == GoalStatus::NotApplicable ) ++na;
			else if( g.status != GoalStatus::Failed ) ++done;
		}
		ok = ok && rep.all_discharged();
		d += fmt( "%s %zu/%zu applicable discharged; ", l.label().c_str(), done, rep.goals.size() - na );
	}
	const Calculus luk { Logic::lukasiewicz() };
	const auto j = nlohmann::json::parse( slurp( kFixtures / "proofs/lukasiewicz-limpl-ext.json" ) );
	const auto &dr = j.at( "derived_rule" );
	const CheckResult c = check_derived_rule( luk, rule_from_json( dr.at( "rule" ) ),
		parse_hypersequent( dr.at( "conclusion" ).get< std::string >(), luk.logic() ), proof_from_json( j, luk.logic() ) );
	ok = ok && c.ok;
	d += std::string( "extended implication derivation " ) + ( c.ok ? "re-checks" : "fails: " + c.message );
	return { ok, d };
}

Outcome robustness_example() {
	Env env;
	register_network( env, load_network( ( kFixtures / "networks/identity2.json" ).string() ) );
	const std::string text = slurp( kFixtures / "specs/robustness.dlc" );
	const Bindings in = load_bindings( ( kFixtures / "inputs/robustness.csv" ).string() );
	const CompiledSpec dl2 = compile_spec( text, Logic::dl2(), env );
	const CompiledSpec inf = compile_spec( text, Logic::stl_infty(), env );
	(void)inf;
	// Recompute by hand with N = id: d = |x - v|_inf, loss = -max(-max(d - eps, 0) + max(d - delta, 0), 0).
	const auto &x = in.at( "x" ), &v = in.at( "v" );
	double d = 0.0;
	for( std::size_t i = 0; i < x.size(); ++i ) d = std::max( d, std::fabs( x[ i ] - v[ i ] ) );
	const double eps = in.at( "eps" )[ 0 ], delta = in.at( "delta" )[ 0 ];
	const double hand = -std::max( -std::max( d - eps, 0.0 ) + std::max( d - delta, 0.0 ), 0.0 );
	const double loss = evaluate( dl2, in );
	RunConfig cfg;
	const GradientAgreement g = gradient_agreement( cfg, dl2, in, "x", 50, 0.5, 7 );
	const bool ok = std::fabs( loss - ( -0.05 ) ) <= 1e-12 && std::fabs( hand - loss ) <= 1e-12 && g.ok && g.points == 50
		&& g.max_rel_err <= 1e-4;
	return { ok, fmt( "compiles under dl2 and stl-inf; loss %.6g (hand %.6g); 50 points, max rel err %.1e", loss, hand,
					 g.max_rel_err ) };
}

Outcome negative_fixtures() {
	auto code_of = []( const std::function< void() > &fn ) -> std::optional< ErrorCode > {
		try {
			fn();
		} catch( const Error &e ) {
			return e.code();
		}
		return std::nullopt;
	};
	const auto atom = []( const ConnectiveFlags &f ) { return ast::le( ast::real_const( 0.0 ), ast::real_const( 1.0 ), f ); };
	const auto dl2 = Logic::dl2().flag_profile();
	const auto stl = Logic::stl( 1.0 ).flag_profile();
	const bool neg = code_of( [ & ] { ast::neg( atom( dl2 ) ); } ) == ErrorCode::FlagViolation;
	const bool impl = code_of( [ & ] { ast::impl( atom( stl ), atom( stl ) ); } ) == ErrorCode::FlagViolation;
	const LawReport n1 = check_axiom_values( Logic::stl_infty(), AxiomId::N1, 1000, kLawTol, 7 );
	const bool cex = n1.verdict == Verdict::Counterexample && n1.witness.has_value();
	std::string d = std::string( "Not under DL2: " ) + ( neg ? "FlagViolation" : "accepted" ) + "; Impl under STL: "
		+ ( impl ? "FlagViolation" : "accepted" ) + "; STL-inf N1: " + verdict_name( n1.verdict );
	if( cex ) d += fmt( " at x = %g (lhs %g, rhs %g)", n1.witness->values.at( 0 ), n1.witness->lhs, n1.witness->rhs );
	return { neg && impl && cex, d };
}

} // namespace

int main() {
	const std::vector< std::pair< const char *, std::function< Outcome() > > > criteria {
		{ "fuzzy comparison golden", golden_two_thirds },
		{ "algebraic law matrix", law_matrix },
		{ "residuation", residuation },
		{ "shadow-lifting goldens", shadow_goldens },
		{ "convergence", convergence },
		{ "soundness fuzz", soundness },
		{ "rule-local soundness", rule_local },
		{ "weak completeness", weak_completeness },
		{ "end-to-end robustness", robustness_example },
		{ "negative fixtures", negative_fixtures },
	};
	int failed = 0;
	for( std::size_t i = 0; i < criteria.size(); ++i ) {
		Outcome o;
		try {
			o = criteria[ i ].second();
		} catch( const std::exception &e ) {
			o = { false, std::string( "threw: " ) + e.what() };
		}
		if( !o.pass ) ++failed;
		std::printf( "[%s] criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[ i ].first, o.detail.c_str() );
		std::fflush( stdout );
	}
	std::printf( "%d of %zu criteria failed\n", failed, criteria.size() );
	return failed ? 1 : 0;
}
