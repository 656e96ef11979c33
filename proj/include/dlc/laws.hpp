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

#ifndef DLC_LAWS_HPP
#define DLC_LAWS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <dlc/logic.hpp>

namespace dlc {

enum class AxiomId { R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, N1, N2, N3, N4, M1, M2, M3, IDEM_MONOID };

const char *axiom_name( AxiomId a ) noexcept;
AxiomId axiom_from_name( const std::string &name );
/** Number of free values (1 to 3). */
std::size_t axiom_arity( AxiomId a ) noexcept;
const std::vector< AxiomId > &all_axioms();

enum class Verdict { Pass, Counterexample, NotApplicable };
const char *verdict_name( Verdict v ) noexcept;

struct LawWitness {
	std::vector< double > values;          // x, y, z as used
	std::vector< std::string > formulas;   // formula-level checks only
	double lhs = 0.0, rhs = 0.0;
	bool lhs_holds = false, rhs_holds = false;   // R10 sides
};

struct LawReport {
	std::string logic;
	AxiomId axiom = AxiomId::R1;
	std::string level;                     // "value" or "formula"
	std::size_t samples_run = 0;
	Verdict verdict = Verdict::Pass;
	std::optional< LawWitness > witness;
	double tol = 0.0;
	std::string note;

	nlohmann::json to_json() const;
};

inline constexpr double kLawTol = 1e-9;
inline constexpr double kDl2Bound = 10.0;
inline constexpr double kStlBound = 10.0;

/**
 * Samples from the logic's carrier domain (fuzzy [0,1], DL2 [-10,0], STL and STL-inf
 * [-10,10], the latter with +-inf), after first trying every tuple over the fixed
 * witness set. Idempotence checks the monoidal conjunction, or STL's n-ary one when
 * the logic has no monoidal connectives.
 */
LawReport check_axiom_values( const Logic &logic, AxiomId axiom, std::size_t n_samples, double tol, std::uint64_t seed );

/** R10 over `n_samples` off-boundary triples; triples within tol of either inequality boundary are redrawn. */
LawReport check_residuation( const Logic &logic, std::size_t n_samples, double tol, std::uint64_t seed );

/** Instantiates the axiom's metavariables with random closed formulas and interprets both sides. */
LawReport check_axiom_formulas( const Logic &logic, AxiomId axiom, std::size_t depth, std::size_t n_samples,
	std::uint64_t seed, double tol = kLawTol );

enum class Table3Column { Residuated, NegImpl, Involutive, MonoidalDual, Idempotence };

struct Table3Cell {
	Table3Column column;
	bool expected = false;                 // reference verdict for this cell
	bool observed = false;                 // every axiom passed
	std::vector< LawReport > reports;

	/** A "yes" cell passes; a "no" cell has a counterexample or an undefined operation. */
	bool matches() const;
};

struct Table3Row {
	std::string logic;
	std::vector< Table3Cell > cells;
};

struct Table3Matrix {
	std::vector< Table3Row > rows;
	std::size_t samples = 0;
	std::uint64_t seed = 0;
	double tol = 0.0;

	bool all_match() const;
	nlohmann::json to_json() const;
	std::string render() const;
};

/** The seven logics in matrix row order; Yager uses r = 2 and STL nu = 1. */
std::vector< Logic > table3_logics();
const char *table3_column_name( Table3Column c ) noexcept;
std::vector< AxiomId > table3_column_axioms( Table3Column c );
bool table3_expected( const Logic &logic, Table3Column c );

Table3Row table3_row( const Logic &logic, std::size_t n_samples, double tol, std::uint64_t seed );
Table3Matrix table3_matrix( std::uint64_t seed, std::size_t n_samples, double tol = kLawTol,
	const std::vector< Logic > &logics = table3_logics() );

/**
 * Prelinearity (p0 => p1) \/ (p1 => p0) for Yager(r): `residuated` uses the
 * interpreter's implication, `s_implication` reads p => q as
 * min(((1 - p)^r + q^r)^(1/r), 1).
 */
struct PrelinearityProbe {
	double residuated = 0.0;
	double s_implication = 0.0;
};
PrelinearityProbe yager_prelinearity_probe( double r, double p0 = 0.5, double p1 = 0.5 );

} // namespace dlc

#endif
