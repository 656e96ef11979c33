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

#ifndef DLC_ANALYSIS_HPP
#define DLC_ANALYSIS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <dlc/logic.hpp>
#include <dlc/numeric.hpp>

namespace dlc {

/** f : R^n -> R, evaluable on plain doubles and on dual numbers. */
struct ScalarField {
	std::string name;
	std::function< double( const std::vector< double > & ) > f64;
	std::function< Dual( const std::vector< Dual > & ) > dual;

	template< class G >
	static ScalarField make( std::string name, G g ) {
		ScalarField f;
		f.name = std::move( name );
		f.f64 = [ g ]( const std::vector< double > &x ) { return static_cast< double >( g( x ) ); };
		f.dual = [ g ]( const std::vector< Dual > &x ) { return static_cast< Dual >( g( x ) ); };
		return f;
	}
};

enum class PartialMethod { Dual, CentralFd, OneSidedFd };
enum class Side { Below, Above };

struct PartialSpec {
	const ScalarField *f = nullptr;
	std::vector< double > point;
	std::size_t i = 0;
	PartialMethod method = PartialMethod::Dual;
	double h = 1e-6;       // fd step, > 0
	Side side = Side::Above;
};

/** Unit coordinate vector; IndexOutOfRange when i >= n. */
std::vector< double > err_vec( std::size_t n, std::size_t i );

double partial( const PartialSpec &spec );

/** Central step used by the analysis suites: 1e-6 * max(1, |x|). */
double central_step( double x ) noexcept;

/** One-sided secant steps; the last one is the reported estimate. */
inline constexpr double kOneSidedSchedule[] = { 1e-3, 1e-4, 1e-5 };

struct ShadowEstimate {
	double p = 0.0;
	std::size_t i = 0;
	std::vector< double > below_schedule, above_schedule;
	double below = 0.0, above = 0.0, dual = 0.0;
	bool ok = false;
};

struct ShadowReport {
	std::string name;
	std::size_t n = 0;
	std::vector< double > p_samples;
	double tol = 0.0;
	std::vector< ShadowEstimate > estimates;
	bool holds = false;
	std::optional< ShadowEstimate > witness;

	nlohmann::json to_json() const;
};

/** One-sided estimates must agree this closely for a point to count as differentiable. */
inline constexpr double kOneSidedAgreement = 1e-4;

/**
 * For each p and i, estimates d f / d x_i at (p, ..., p) from below, from above
 * and by dual numbers. Holds iff all estimates exceed `tol` and the one-sided
 * estimates agree within kOneSidedAgreement.
 */
ShadowReport shadow_lifting_check( const ScalarField &f, std::size_t n, const std::vector< double > &p_samples,
	double tol );

/** The conjunction whose shadow-lifting the logic is judged by: STL's n-ary conjunction, else the left fold of the monoidal one. */
ScalarField conjunction_field( const Logic &logic );

struct BranchDerivative {
	double below = 0.0, above = 0.0, value = 0.0;
};

/** One-sided estimates of d/dx_0 of the p_min < 0 STL branch at (p, ..., p), and their average. */
BranchDerivative stl_lt0_branch_derivative( std::size_t n, double p, double nu );

struct ConvergencePoint {
	double param = 0.0;
	double gap = 0.0;
	bool saturated = false;
};

struct ConvergenceSeries {
	std::string label;
	std::vector< double > input;
	std::vector< ConvergencePoint > points;
};

struct ConvergenceReport {
	std::string name;
	std::string param_name;
	double tol = 0.0;
	std::vector< ConvergenceSeries > series;
	bool pass = false;
	std::string reason;

	nlohmann::json to_json() const;
	/** Rows "label,param,gap". */
	std::string to_csv() const;
};

/** Gap between STL's conjunction and min; passes iff the final gap < tol and gaps do not grow over the last half of the schedule. */
ConvergenceReport convergence_stl_min( const std::vector< double > &values, const std::vector< double > &nu_schedule,
	double tol );

/** Gaps between Yager(r) and Goedel for both monoidal connectives; passes iff every final gap < tol. */
ConvergenceReport convergence_yager_godel( const std::vector< std::pair< double, double > > &pairs,
	const std::vector< double > &r_schedule, double tol );

/** True iff each gap is at most the previous one plus `slack`. */
bool non_increasing( const std::vector< ConvergencePoint > &points, double slack, std::size_t from = 0 );

} // namespace dlc

#endif
