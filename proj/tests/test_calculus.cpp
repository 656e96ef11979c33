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

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <dlc/calculus.hpp>
#include <dlc/errors.hpp>

using namespace dlc;

namespace {

const std::filesystem::path kFixtures = DLC_TEST_FIXTURES;

nlohmann::json load_json( const std::filesystem::path &p ) {
	std::ifstream in( p );
	REQUIRE( in.good() );
	return nlohmann::json::parse( in );
}

ErrorCode code_of( auto &&fn ) {
	try {
		fn();
	} catch( const Error &e ) {
		return e.code();
	}
	FAIL( "expected an Error" );
	return ErrorCode::Usage;
}

std::vector< Logic > calculus_logics() {
	return { Logic::godel(), Logic::lukasiewicz(), Logic::product(), Logic::dl2(), Logic::stl_infty() };
}

} // namespace

TEST_CASE( "only five logics have a calculus" ) {
	for( const Logic &l : calculus_logics() ) CHECK_NOTHROW( Calculus { l } );
	CHECK( code_of( [] { Calculus { Logic::yager( 2.0 ) }; } ) == ErrorCode::RejectedLogic );
	CHECK( code_of( [] { Calculus { Logic::stl( 1.0 ) }; } ) == ErrorCode::RejectedLogic );
}

TEST_CASE( "the Init fixture checks under Goedel" ) {
	const Logic g = Logic::godel();
	const ProofTree t = proof_from_json( load_json( kFixtures / "init.json" ), g );
	CHECK( check_proof( Calculus { g }, t ).ok );
}

TEST_CASE( "a rule applied to a conclusion it does not fit is a SchemaMismatch" ) {
	const Calculus c { Logic::godel() };
	const Hypersequent h = parse_hypersequent( "0 <= 1 |- 0 <= 2", c.logic() );
	const CheckResult r = check_step( c, RuleInstance { RuleId::Init }, h, {} );
	CHECK_FALSE( r.ok );
	CHECK( r.code == ErrorCode::SchemaMismatch );
	CHECK( r.path.rfind( "$", 0 ) == 0 );
}

TEST_CASE( "rules outside the calculus are rejected" ) {
	const Calculus l { Logic::lukasiewicz() };
	const Hypersequent h = parse_hypersequent( "0 <= 3 |- 0 <= 1 | 0 <= 2 => 0 <= 3 |- 1 <= 2", l.logic() );
	const CheckResult prim = check_proof( l, ProofTree { h, RuleInstance { RuleId::LImplExt, 1, 1 }, {} } );
	CHECK_FALSE( prim.ok );
	CHECK( prim.code == ErrorCode::RuleNotInCalculus );

	const Calculus d { Logic::dl2() };
	CHECK_FALSE( d.has( RuleId::LNeg ) );
	CHECK_FALSE( d.has( RuleId::BotL ) );
}

TEST_CASE( "the extended implication rule is derivable for Lukasiewicz" ) {
	const Calculus c { Logic::lukasiewicz() };
	const auto j = load_json( kFixtures / "proofs/lukasiewicz-limpl-ext.json" );
	const auto &dr = j.at( "derived_rule" );
	const RuleInstance rule = rule_from_json( dr.at( "rule" ) );
	const Hypersequent concl = parse_hypersequent( dr.at( "conclusion" ).get< std::string >(), c.logic() );
	const ProofTree deriv = proof_from_json( j, c.logic() );
	CHECK( check_derived_rule( c, rule, concl, deriv ).ok );
	// Hyp leaves are not proofs on their own.
	CHECK_FALSE( check_proof( c, deriv ).ok );
}

TEST_CASE( "search finds a Goedel tautology and no proof of a false sequent" ) {
	const Calculus g { Logic::godel() };
	SearchStats st;
	const auto p = prove_bounded( g, parse_hypersequent( "|- (0 <= 1 /\\ 0 <= 2) => 0 <= 1", g.logic() ), 6, &st );
	REQUIRE( p.has_value() );
	CHECK( check_proof( g, *p ).ok );
	CHECK( p->height() <= 6 );

	const Calculus d { Logic::dl2() };
	const Hypersequent bad = parse_hypersequent( "0 <= 1 |- 2 <= 1", d.logic() );
	CHECK_FALSE( hypersequent_holds( d.logic(), bad, Env {} ) );
	CHECK_FALSE( prove_bounded( d, bad, 6 ).has_value() );
}

TEST_CASE( "property: random derivations check, are sound and survive JSON" ) {
	for( const Logic &l : calculus_logics() ) {
		const Calculus c { l };
		CAPTURE( c.name() );
		for( std::uint64_t seed = 0; seed < 60; ++seed ) {
			const ProofTree t = random_derivation( c, seed, 1 + seed % 5 );
			REQUIRE( check_proof( c, t ).ok );
			if( seed % 5 == 0 ) CHECK( t.premises.empty() );
			CHECK( proof_to_json( c, random_derivation( c, seed, 1 + seed % 5 ) ) == proof_to_json( c, t ) );
			CHECK( hypersequent_holds( l, t.conclusion, Env {} ) );
			const ProofTree back = proof_from_json( proof_to_json( c, t ), l );
			CHECK( back.conclusion == t.conclusion );
			CHECK( back.size() == t.size() );
			CHECK( check_proof( c, back ).ok );
		}
	}
}

TEST_CASE( "property: swapping two components does not change validity" ) {
	for( const Logic &l : calculus_logics() ) {
		const Calculus c { l };
		for( std::uint64_t seed = 0; seed < 60; ++seed ) {
			const ProofTree t = random_derivation( c, seed, 3 );
			Hypersequent h = t.conclusion;
			if( h.size() < 2 ) continue;
			std::swap( h.components[ 0 ], h.components[ 1 ] );
			CHECK( hypersequent_holds( l, h, Env {} ) == hypersequent_holds( l, t.conclusion, Env {} ) );
			const ProofTree swapped { h, RuleInstance { RuleId::EEx, 0 }, { t } };
			CHECK( check_proof( c, swapped ).ok );
		}
	}
}

TEST_CASE( "small soundness fuzz and rule-local checks" ) {
	for( const Logic &l : calculus_logics() ) {
		const Calculus c { l };
		CAPTURE( c.name() );
		CHECK( soundness_fuzz( c, 300, 5, 11 ).passed() );
		for( const auto &r : rule_local_soundness( c, 40, 11 ) ) {
			CAPTURE( rule_name( r.rule ) );
			CHECK( r.violations == 0 );
		}
	}
}

TEST_CASE( "weak completeness on the lattice calculi" ) {
	for( const Logic &l : { Logic::godel(), Logic::dl2() } ) {
		const auto rep = weak_completeness_suite( Calculus { l }, 12 );
		CAPTURE( rep.to_json().dump() );
		CHECK( rep.all_discharged() );
	}
}
