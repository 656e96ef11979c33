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

#include <dlc/analysis.hpp>
#include <dlc/errors.hpp>
#include <dlc/semantics.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dlc {

using nlohmann::json;

std::vector< double > err_vec( std::size_t n, std::size_t i ) {
	if( i >= n ) fail( ErrorCode::IndexOutOfRange, "err_vec index " + std::to_string( i ) + " >= " + std::to_string( n ) );
	std::vector< double > e( n, 0.0 );
	e[ i ] = 1.0;
	return e;
}

double central_step( double x ) noexcept { return 1e-6 * std::max( 1.0, std::fabs( x ) ); }

namespace {

std::vector< double > shifted( const std::vector< double > &x, std::size_t i, double delta ) {
	std::vector< double > y = x;
	y[ i ] += delta;
	return y;
}

} // namespace

double partial( const PartialSpec &s ) {
	if( !s.f ) fail( ErrorCode::Usage, "partial needs a function" );
	if( s.i >= s.point.size() ) fail( ErrorCode::IndexOutOfRange, "partial coordinate out of range" );
	switch( s.method ) {
	case PartialMethod::Dual: {
		std::vector< Dual > x;
		x.reserve( s.point.size() );
		for( std::size_t k = 0; k < s.point.size(); ++k ) x.emplace_back( s.point[ k ], k == s.i ? 1.0 : 0.0 );
		return s.f->dual( x ).t;
	}
	case PartialMethod::CentralFd: {
		if( !( s.h > 0.0 ) ) fail( ErrorCode::Usage, "fd step must be > 0" );
		const double up = s.f->f64( shifted( s.point, s.i, s.h ) );
		const double down = s.f->f64( shifted( s.point, s.i, -s.h ) );
		return ( up - down ) / ( 2.0 * s.h );
	}
	case PartialMethod::OneSidedFd: {
		if( !( s.h > 0.0 ) ) fail( ErrorCode::Usage, "fd step must be > 0" );
		const double at = s.f->f64( s.point );
		if( s.side == Side::Above ) return ( s.f->f64( shifted( s.point, s.i, s.h ) ) - at ) / s.h;
		return ( at - s.f->f64( shifted( s.point, s.i, -s.h ) ) ) / s.h;
	}
	}
	return 0.0;
}

json ShadowReport::to_json() const {
	json est = json::array();
	for( const auto &e : estimates ) {
		est.push_back( { { "p", e.p }, { "i", e.i }, { "below", e.below }, { "above", e.above }, { "dual", e.dual },
			{ "below_schedule", e.below_schedule }, { "above_schedule", e.above_schedule }, { "ok", e.ok } } );
	}
	json j { { "name", name }, { "n", n }, { "p_samples", p_samples }, { "tol", tol }, { "estimates", est },
		{ "verdict", holds ? "holds" : "fails" } };
	if( witness ) {
		j[ "witness" ] = { { "p", witness->p }, { "i", witness->i }, { "below", witness->below },
			{ "above", witness->above }, { "dual", witness->dual } };
	}
	return j;
}

ShadowReport shadow_lifting_check( const ScalarField &f, std::size_t n, const std::vector< double > &p_samples,
	double tol ) {
	ShadowReport rep;
	rep.name = f.name;
	rep.n = n;
	rep.p_samples = p_samples;
	rep.tol = tol;
	rep.holds = true;
	for( double p : p_samples ) {
		if( !( p > 0.0 ) ) fail( ErrorCode::Usage, "shadow-lifting samples must be > 0" );
		const std::vector< double > point( n, p );
		for( std::size_t i = 0; i < n; ++i ) {
			ShadowEstimate e;
			e.p = p;
			e.i = i;
			PartialSpec s { &f, point, i, PartialMethod::OneSidedFd, 0.0, Side::Below };
			for( double h : kOneSidedSchedule ) {
				s.h = h;
				s.side = Side::Below;
				e.below_schedule.push_back( partial( s ) );
				s.side = Side::Above;
				e.above_schedule.push_back( partial( s ) );
			}
			e.below = e.below_schedule.back();
			e.above = e.above_schedule.back();
			s.method = PartialMethod::Dual;
			e.dual = partial( s );
			e.ok = e.below > tol && e.above > tol && e.dual > tol && std::fabs( e.below - e.above ) <= kOneSidedAgreement;
			if( !e.ok && rep.holds ) {
				rep.holds = false;
				rep.witness = e;
			}
			rep.estimates.push_back( std::move( e ) );
		}
	}
	return rep;
}

ScalarField conjunction_field( const Logic &logic ) {
	const NodeKind kind = logic.kind() == LogicKind::STL ? NodeKind::And : NodeKind::MAnd;
	return ScalarField::make( logic.label() + ( kind == NodeKind::And ? " and" : " mand" ),
		[ logic, kind ]( const auto &x ) { return clause::fold_nary( logic, kind, x ); } );
}

BranchDerivative stl_lt0_branch_derivative( std::size_t n, double p, double nu ) {
	if( n < 2 || !( p > 0.0 ) || !( nu > 0.0 ) ) fail( ErrorCode::Usage, "needs n >= 2, p > 0, nu > 0" );
	ScalarField f = ScalarField::make( "stl_and_lt0", [ nu ]( const auto &x ) { return clause::stl_and_lt0( nu, x ); } );
	PartialSpec s { &f, std::vector< double >( n, p ), 0, PartialMethod::OneSidedFd, kOneSidedSchedule[ 2 ], Side::Below };
	BranchDerivative d;
	d.below = partial( s );
	s.side = Side::Above;
	d.above = partial( s );
	d.value = 0.5 * ( d.below + d.above );
	return d;
}

json ConvergenceReport::to_json() const {
	json ser = json::array();
	for( const auto &s : series ) {
		json pts = json::array();
		for( const auto &p : s.points ) {
			pts.push_back( { { param_name, p.param }, { "gap", p.gap }, { "saturated", p.saturated } } );
		}
		ser.push_back( { { "label", s.label }, { "input", s.input }, { "points", pts } } );
	}
	return json { { "name", name }, { "tol", tol }, { "series", ser }, { "verdict", pass ? "pass" : "fail" },
		{ "reason", reason } };
}

std::string ConvergenceReport::to_csv() const {
	std::ostringstream os;
	os.precision( 17 );
	os << "label," << param_name << ",gap\n";
	for( const auto &s : series ) {
		for( const auto &p : s.points ) os << s.label << "," << p.param << "," << p.gap << "\n";
	}
	return os.str();
}

bool non_increasing( const std::vector< ConvergencePoint > &points, double slack, std::size_t from ) {
	for( std::size_t k = std::max< std::size_t >( from, 1 ); k < points.size(); ++k ) {
		if( points[ k ].gap > points[ k - 1 ].gap + slack ) return false;
	}
	return true;
}

namespace {

void check_increasing( const std::vector< double > &schedule, const char *what ) {
	if( schedule.empty() ) fail( ErrorCode::Usage, std::string( what ) + " schedule is empty" );
	for( std::size_t k = 1; k < schedule.size(); ++k ) {
		if( !( schedule[ k ] > schedule[ k - 1 ] ) ) fail( ErrorCode::Usage, std::string( what ) + " schedule must increase" );
	}
}

std::string vec_label( const std::vector< double > &v ) {
	std::ostringstream os;
	os << "(";
	for( std::size_t i = 0; i < v.size(); ++i ) os << ( i ? " " : "" ) << v[ i ];
	os << ")";
	return os.str();
}

} // namespace

ConvergenceReport convergence_stl_min( const std::vector< double > &values, const std::vector< double > &nu_schedule,
	double tol ) {
	if( values.empty() ) fail( ErrorCode::Usage, "convergence needs a nonempty vector" );
	check_increasing( nu_schedule, "nu" );
	ConvergenceReport rep;
	rep.name = "stl-conj-to-min";
	rep.param_name = "nu";
	rep.tol = tol;
	ConvergenceSeries s;
	s.label = vec_label( values );
	s.input = values;
	const double mn = *std::min_element( values.begin(), values.end() );
	bool saturated = false;
	for( double nu : nu_schedule ) {
		ConvergencePoint pt;
		pt.param = nu;
		const double v = clause::stl_nary( NaryKind::Conj, nu, values );
		pt.saturated = !std::isfinite( v );
		saturated = saturated || pt.saturated;
		pt.gap = std::fabs( v - mn );
		s.points.push_back( pt );
	}
	const bool final_ok = s.points.back().gap < tol;
	const bool mono = non_increasing( s.points, 1e-12, s.points.size() / 2 );
	rep.pass = final_ok && mono && !saturated;
	rep.reason = saturated ? "Saturated" : !final_ok ? "final gap above tol" : !mono ? "gap grew" : "";
	rep.series.push_back( std::move( s ) );
	return rep;
}

ConvergenceReport convergence_yager_godel( const std::vector< std::pair< double, double > > &pairs,
	const std::vector< double > &r_schedule, double tol ) {
	check_increasing( r_schedule, "r" );
	ConvergenceReport rep;
	rep.name = "yager-to-goedel";
	rep.param_name = "r";
	rep.tol = tol;
	rep.pass = true;
	const Logic g = Logic::godel();
	for( const auto &[ a, b ] : pairs ) {
		if( a < 0.0 || a > 1.0 || b < 0.0 || b > 1.0 ) fail( ErrorCode::Usage, "pairs must lie in [0,1]^2" );
		ConvergenceSeries sm, sp;
		sm.label = "mand" + vec_label( { a, b } );
		sp.label = "mor" + vec_label( { a, b } );
		sm.input = sp.input = { a, b };
		for( double r : r_schedule ) {
			const Logic y = Logic::yager( r );
			sm.points.push_back( { r, std::fabs( clause::mand2( y, a, b ) - clause::mand2( g, a, b ) ), false } );
			sp.points.push_back( { r, std::fabs( clause::mor2( y, a, b ) - clause::mor2( g, a, b ) ), false } );
		}
		if( !( sm.points.back().gap < tol ) || !( sp.points.back().gap < tol ) ) {
			rep.pass = false;
			if( rep.reason.empty() ) rep.reason = "final gap above tol at " + vec_label( { a, b } );
		}
		rep.series.push_back( std::move( sm ) );
		rep.series.push_back( std::move( sp ) );
	}
	return rep;
}

} // namespace dlc
