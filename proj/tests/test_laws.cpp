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

#include <algorithm>
#include <cmath>

#include <dlc/errors.hpp>
#include <dlc/laws.hpp>

using namespace dlc;

TEST_CASE( "axiom names round trip" ) {
	for( AxiomId a : all_axioms() ) CHECK( axiom_from_name( axiom_name( a ) ) == a );
	CHECK_THROWS_AS( axiom_from_name( "R11" ), Error );
}

TEST_CASE( "law matrix rows match their reference verdicts" ) {
	for( const Logic &l : { Logic::godel(), Logic::lukasiewicz(), Logic::product(), Logic::dl2(), Logic::stl( 1.0 ),
			 Logic::stl_infty() } ) {
		CAPTURE( l.label() );
		const Table3Row row = table3_row( l, 200, kLawTol, 7 );
		for( const auto &c : row.cells ) {
			CAPTURE( table3_column_name( c.column ) );
			CHECK( c.matches() );
		}
	}
}

TEST_CASE( "every failing law carries a concrete witness" ) {
	const LawReport r = check_axiom_values( Logic::stl_infty(), AxiomId::N1, 200, kLawTol, 7 );
	REQUIRE( r.verdict == Verdict::Counterexample );
	REQUIRE( r.witness.has_value() );
	CHECK( std::fabs( r.witness->lhs - r.witness->rhs ) > kLawTol );
	const LawReport idem = check_axiom_values( Logic::product(), AxiomId::IDEM_MONOID, 200, kLawTol, 7 );
	CHECK( idem.verdict == Verdict::Counterexample );
}

TEST_CASE( "undefined connectives make a law NotApplicable" ) {
	CHECK( check_axiom_values( Logic::dl2(), AxiomId::N1, 50, kLawTol, 1 ).verdict == Verdict::NotApplicable );
	CHECK( check_axiom_values( Logic::stl( 1.0 ), AxiomId::R10, 50, kLawTol, 1 ).verdict == Verdict::NotApplicable );
}

TEST_CASE( "residuation holds off the boundary" ) {
	for( const Logic &l : { Logic::godel(), Logic::product(), Logic::dl2() } ) {
		CAPTURE( l.label() );
		CHECK( check_residuation( l, 300, kLawTol, 3 ).verdict == Verdict::Pass );
	}
}

TEST_CASE( "formula-level checks agree with value-level ones" ) {
	CHECK( check_axiom_formulas( Logic::godel(), AxiomId::R2, 3, 100, 5 ).verdict == Verdict::Pass );
	CHECK( check_axiom_formulas( Logic::product(), AxiomId::IDEM_MONOID, 3, 200, 5 ).verdict == Verdict::Counterexample );
}

TEST_CASE( "Yager prelinearity probe, computed values" ) {
	// Residuated implication of equal arguments is 1; the S-implication gives
	// min(sqrt(0.5^2 + 0.5^2), 1) = sqrt(0.5).
	const PrelinearityProbe p = yager_prelinearity_probe( 2.0 );
	CHECK( p.residuated == doctest::Approx( 1.0 ) );
	CHECK( p.s_implication == doctest::Approx( std::sqrt( 0.5 ) ).epsilon( 1e-12 ) );
}

TEST_CASE( "law matrix serializes every row and column" ) {
	const Table3Matrix m = table3_matrix( 7, 50, kLawTol, { Logic::dl2(), Logic::godel() } );
	const auto j = m.to_json();
	REQUIRE( j.contains( "rows" ) );
	CHECK( j.at( "rows" ).size() == 2 );
	CHECK( m.render().find( "dl2" ) != std::string::npos );
}

TEST_CASE( "Yager monoidal De Morgan fails at x = y = 2/3, independent recomputation" ) {
	// r = 2: t(a, b) = 1 - hypot(1 - a, 1 - b), n(p) = 1 - sqrt(1 - (1 - p)^2), s(a, b) = min(hypot(a, b), 1).
	const double x = 2.0 / 3.0;
	const auto n = []( double p ) { return 1.0 - std::sqrt( 1.0 - ( 1.0 - p ) * ( 1.0 - p ) ); };
	const double lhs = n( 1.0 - std::hypot( 1.0 - x, 1.0 - x ) );
	const double rhs = std::min( std::hypot( n( x ), n( x ) ), 1.0 );
	const LawReport r = check_axiom_values( Logic::yager( 2.0 ), AxiomId::M2, 1000, kLawTol, 7 );
	REQUIRE( r.verdict == Verdict::Counterexample );
	REQUIRE( r.witness.has_value() );
	CHECK( r.witness->values.at( 0 ) == doctest::Approx( x ) );
	CHECK( r.witness->lhs == doctest::Approx( lhs ).epsilon( 1e-12 ) );
	CHECK( r.witness->rhs == doctest::Approx( rhs ).epsilon( 1e-12 ) );
}
