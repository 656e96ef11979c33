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
#include <dlc/eval.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <type_traits>

namespace dlc {

namespace {

using nlohmann::json;

template< class T >
FunEntry constant_entry( const std::vector< T > &values ) {
	std::vector< double > p;
	p.reserve( values.size() );
	for( const auto &v : values ) p.push_back( num::primal( v ) );
	FunEntry e;
	e.m = 1;
	e.n = values.size();
	e.f64 = [ p ]( const std::vector< double > & ) { return p; };
	e.xreal = [ p ]( const std::vector< XReal > & ) { return std::vector< XReal >( p.begin(), p.end() ); };
	if constexpr( std::is_same_v< T, Dual > ) {
		e.dual = [ values ]( const std::vector< Dual > & ) { return values; };
	} else {
		e.dual = [ p ]( const std::vector< Dual > & ) { return std::vector< Dual >( p.begin(), p.end() ); };
	}
	return e;
}

/** Env with every declared vector and scalar bound; `skip` is left for the caller. */
Env bound_env( const CompiledSpec &spec, const Bindings &inputs, const std::string &skip = {} ) {
	Env env = spec.env;
	for( const auto &d : spec.doc.declarations ) {
		if( d.kind != DeclKind::Vector && d.kind != DeclKind::Scalar ) continue;
		if( d.name == skip ) continue;
		const auto it = inputs.find( d.name );
		if( it == inputs.end() ) fail( ErrorCode::ValidationError, "no value bound for '" + d.name + "'" );
		if( it->second.size() != d.n ) {
			fail( ErrorCode::ArityError, "'" + d.name + "' has " + std::to_string( d.n ) + " entries, binding has "
				+ std::to_string( it->second.size() ) );
		}
		env.define_entry( d.name, constant_entry( it->second ) );
	}
	return env;
}

const Declaration &input_decl( const CompiledSpec &spec, const std::string &name ) {
	const Declaration *d = spec.doc.find( name );
	if( !d || ( d->kind != DeclKind::Vector && d->kind != DeclKind::Scalar ) ) {
		fail( ErrorCode::Usage, "'" + name + "' is not a declared vector or scalar" );
	}
	return *d;
}

/** ⟦goal⟧ as a function of the vector `wrt`, everything else fixed. */
ScalarField goal_field( const CompiledSpec &spec, const Bindings &inputs, const std::string &wrt ) {
	auto base = std::make_shared< const Env >( bound_env( spec, inputs, wrt ) );
	const Logic logic = spec.logic;
	const Expr expr = spec.expr;
	return ScalarField::make( "goal", [ base, logic, expr, wrt ]( const auto &x ) {
		using T = typename std::decay_t< decltype( x ) >::value_type;
		Env env = *base;
		env.define_entry( wrt, constant_entry( x ) );
		return interpret_bool< T >( logic, expr, env );
	} );
}

GradientEntry check_coordinate( const ScalarField &f, const std::vector< double > &x, std::size_t i ) {
	GradientEntry g;
	g.dual = partial( { &f, x, i, PartialMethod::Dual } );
	g.below = partial( { &f, x, i, PartialMethod::OneSidedFd, 1e-5, Side::Below } );
	g.above = partial( { &f, x, i, PartialMethod::OneSidedFd, 1e-5, Side::Above } );
	g.skipped = std::fabs( g.below - g.above ) > 1e-3;
	g.central = partial( { &f, x, i, PartialMethod::CentralFd, central_step( x[ i ] ) } );
	g.rel_err = std::fabs( g.dual - g.central ) / std::max( 1.0, std::fabs( g.central ) );
	return g;
}

double parse_number( const std::string &cell, std::size_t line ) {
	std::string t = cell;
	t.erase( 0, t.find_first_not_of( " \t" ) );
	t.erase( t.find_last_not_of( " \t\r" ) + 1 );
	double v = 0.0;
	const auto r = std::from_chars( t.data(), t.data() + t.size(), v );
	if( t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size() ) {
		fail( ErrorCode::ParseError, "line " + std::to_string( line ) + ": bad number '" + t + "'" );
	}
	return v;
}

} // namespace

Logic RunConfig::make_logic() const {
	if( logic == "yager" && !( r > 0.0 ) ) fail( ErrorCode::Usage, "--r must be > 0 for yager" );
	if( logic == "stl" && !( nu > 0.0 ) ) fail( ErrorCode::Usage, "--nu must be > 0 for stl" );
	return Logic::parse( logic, r, nu );
}

std::string RunConfig::resolved_carrier() const {
	if( carrier.empty() ) return logic == "stl-inf" ? "xreal" : "f64";
	if( carrier != "f64" && carrier != "xreal" ) fail( ErrorCode::Usage, "unknown carrier '" + carrier + "'" );
	return carrier;
}

Bindings parse_bindings_csv( const std::string &text ) {
	Bindings out;
	std::istringstream in( text );
	std::string line;
	std::size_t no = 0;
	while( std::getline( in, line ) ) {
		++no;
		const auto first = line.find_first_not_of( " \t\r" );
		if( first == std::string::npos || line[ first ] == '#' ) continue;
		std::istringstream cells( line );
		std::string name, cell;
		std::getline( cells, name, ',' );
		name.erase( 0, name.find_first_not_of( " \t" ) );
		name.erase( name.find_last_not_of( " \t\r" ) + 1 );
		if( name.empty() ) fail( ErrorCode::ParseError, "line " + std::to_string( no ) + ": missing name" );
		std::vector< double > values;
		while( std::getline( cells, cell, ',' ) ) values.push_back( parse_number( cell, no ) );
		if( values.empty() ) fail( ErrorCode::ParseError, "line " + std::to_string( no ) + ": no values for '" + name + "'" );
		out[ name ] = std::move( values );
	}
	return out;
}

Bindings bindings_from_json( const json &j ) {
	if( !j.is_object() ) fail( ErrorCode::SchemaError, "bindings must be an object" );
	Bindings out;
	for( auto it = j.begin(); it != j.end(); ++it ) {
		if( it.value().is_number() ) {
			out[ it.key() ] = { it.value().get< double >() };
			continue;
		}
		if( !it.value().is_array() || it.value().empty() ) {
			fail( ErrorCode::SchemaError, "binding '" + it.key() + "' must be a number or a non-empty array" );
		}
		for( const auto &v : it.value() ) {
			if( !v.is_number() ) fail( ErrorCode::SchemaError, "binding '" + it.key() + "' has a non-number entry" );
			out[ it.key() ].push_back( v.get< double >() );
		}
	}
	return out;
}

Bindings load_bindings( const std::string &path ) {
	std::ifstream in( path );
	if( !in ) fail( ErrorCode::IoError, "cannot read inputs file " + path );
	std::stringstream ss;
	ss << in.rdbuf();
	if( path.size() >= 5 && path.substr( path.size() - 5 ) == ".json" ) {
		try {
			return bindings_from_json( json::parse( ss.str() ) );
		} catch( const json::parse_error &e ) {
			fail( ErrorCode::ParseError, path + ": " + e.what() );
		}
	}
	return parse_bindings_csv( ss.str() );
}

CompiledSpec compile_spec( const std::string &text, const Logic &logic, const Env &env ) {
	CompiledSpec c;
	c.doc = parse_spec( text );
	c.logic = logic;
	c.env = env;
	for( const auto &d : c.doc.declarations ) {
		if( d.kind == DeclKind::Network ) {
			const FunEntry *f = env.find( d.name );
			if( !f ) fail( ErrorCode::UnresolvedFunction, "no network supplied for '" + d.name + "'" );
			if( f->m != d.m || f->n != d.n ) {
				fail( ErrorCode::ArityError, "network '" + d.name + "' is declared " + std::to_string( d.m ) + " -> "
					+ std::to_string( d.n ) + " but the supplied one is " + std::to_string( f->m ) + " -> "
					+ std::to_string( f->n ) );
			}
		} else if( d.kind == DeclKind::Function ) {
			const Fun2Entry *f = env.find2( d.name );
			if( !f ) fail( ErrorCode::UnresolvedFunction, "no function supplied for '" + d.name + "'" );
			if( f->l && ( f->l != d.l || f->m != d.m || f->n != d.n ) ) {
				fail( ErrorCode::ArityError, "function '" + d.name + "' does not match its declared arities" );
			}
		}
	}
	c.expr = elaborate( c.doc, logic, &env );
	return c;
}

double evaluate( const CompiledSpec &spec, const Bindings &inputs, const std::string &carrier ) {
	const Env env = bound_env( spec, inputs );
	if( carrier == "xreal" ) return interpret_bool< XReal >( spec.logic, spec.expr, env ).value();
	if( carrier != "f64" ) fail( ErrorCode::Usage, "unknown carrier '" + carrier + "'" );
	return interpret_bool< double >( spec.logic, spec.expr, env );
}

json EvalReport::to_json() const {
	auto num = []( double v ) -> json {
		if( std::isfinite( v ) ) return v;
		return v > 0 ? "+inf" : "-inf";
	};
	json j { { "logic", logic }, { "carrier", carrier }, { "loss", num( loss ) } };
	if( !wrt.empty() ) {
		j[ "wrt" ] = wrt;
		j[ "point" ] = point;
		if( !gradient_note.empty() ) j[ "gradient_note" ] = gradient_note;
		json g = json::array();
		for( const auto &e : gradient ) {
			g.push_back( { { "dual", e.dual }, { "central", e.central }, { "below", e.below }, { "above", e.above },
				{ "skipped", e.skipped }, { "rel_err", e.rel_err } } );
		}
		j[ "gradient" ] = g;
		j[ "gradient_ok" ] = gradient_ok;
	}
	return j;
}

EvalReport eval_loss( const RunConfig &config, const CompiledSpec &spec, const Bindings &inputs, const std::string &wrt ) {
	EvalReport rep;
	rep.logic = spec.logic.label();
	rep.carrier = config.resolved_carrier();
	rep.loss = evaluate( spec, inputs, rep.carrier );
	if( wrt.empty() ) return rep;
	input_decl( spec, wrt );
	rep.wrt = wrt;
	rep.point = inputs.at( wrt );
	if( !std::isfinite( rep.loss ) ) {
		rep.gradient_note = "value is not finite";
		return rep;
	}
	try {
		const ScalarField f = goal_field( spec, inputs, wrt );
		for( std::size_t i = 0; i < rep.point.size(); ++i ) {
			GradientEntry g = check_coordinate( f, rep.point, i );
			if( !g.skipped && !( g.rel_err <= 1e-4 ) ) rep.gradient_ok = false;
			rep.gradient.push_back( g );
		}
	} catch( const Error &e ) {
		// e.g. STL-inf implication reaching +inf near the point.
		rep.gradient.clear();
		rep.gradient_note = e.what();
	}
	return rep;
}

GradientAgreement gradient_agreement( const RunConfig &config, const CompiledSpec &spec, const Bindings &inputs,
	const std::string &wrt, std::size_t points, double scale, std::uint64_t seed ) {
	GradientAgreement out;
	input_decl( spec, wrt );
	const std::vector< double > center = inputs.at( wrt );
	std::mt19937_64 rng( seed );
	std::uniform_real_distribution< double > u( -scale, scale );
	const std::size_t max_draws = points * 20;
	for( std::size_t draw = 0; draw < max_draws && out.points < points; ++draw ) {
		Bindings b = inputs;
		for( std::size_t i = 0; i < center.size(); ++i ) b[ wrt ][ i ] = center[ i ] + u( rng );
		const EvalReport r = eval_loss( config, spec, b, wrt );
		const bool smooth = !r.gradient.empty()
			&& std::none_of( r.gradient.begin(), r.gradient.end(), []( const GradientEntry &g ) { return g.skipped; } );
		if( !smooth ) {
			++out.resampled;
			continue;
		}
		++out.points;
		for( const auto &g : r.gradient ) out.max_rel_err = std::max( out.max_rel_err, g.rel_err );
	}
	out.ok = out.points == points && out.max_rel_err <= 1e-4;
	return out;
}

bool TrainTrace::non_decreasing( std::size_t count, double slack ) const {
	for( std::size_t k = 1; k < std::min( count, steps.size() ); ++k ) {
		if( steps[ k ].violation < steps[ k - 1 ].violation - slack ) return false;
	}
	return true;
}

json TrainTrace::to_json() const {
	json s = json::array();
	for( const auto &t : steps ) s.push_back( { { "step", t.step }, { "value", t.value }, { "violation", t.violation }, { "x", t.x } } );
	return { { "logic", logic }, { "learning_rate", learning_rate }, { "trace", s } };
}

TrainTrace train_demo( const RunConfig &, const CompiledSpec &spec, const Bindings &inputs, std::size_t steps,
	double learning_rate, const std::string &wrt, const std::string &center, const std::string &radius ) {
	const LogicKind k = spec.logic.kind();
	if( k != LogicKind::DL2 && k != LogicKind::Product && k != LogicKind::STL ) {
		fail( ErrorCode::RejectedLogic, "train-demo needs a logic with useful gradients (dl2, product, stl), not "
			+ spec.logic.label() );
	}
	const Declaration &dx = input_decl( spec, wrt );
	const auto c_it = inputs.find( center );
	const auto r_it = inputs.find( radius );
	if( c_it == inputs.end() || c_it->second.size() != dx.n ) fail( ErrorCode::Usage, "center '" + center + "' is not bound to a vector of length " + std::to_string( dx.n ) );
	if( r_it == inputs.end() || r_it->second.size() != 1 ) fail( ErrorCode::Usage, "radius '" + radius + "' is not bound to a scalar" );
	const double eps = r_it->second[ 0 ];
	TrainTrace trace;
	trace.logic = spec.logic.label();
	trace.learning_rate = learning_rate;
	Bindings b = inputs;
	auto project = [ & ]( std::vector< double > &x ) {
		for( std::size_t i = 0; i < x.size(); ++i ) x[ i ] = std::clamp( x[ i ], c_it->second[ i ] - eps, c_it->second[ i ] + eps );
	};
	project( b[ wrt ] );
	for( std::size_t step = 0; step <= steps; ++step ) {
		const ScalarField f = goal_field( spec, b, wrt );
		const auto &x = b[ wrt ];
		TrainStep t;
		t.step = step;
		t.value = f.f64( x );
		t.violation = -t.value;
		t.x = x;
		trace.steps.push_back( t );
		if( step == steps ) break;
		std::vector< double > next = x;
		for( std::size_t i = 0; i < x.size(); ++i ) next[ i ] -= learning_rate * partial( { &f, x, i, PartialMethod::Dual } );
		project( next );
		b[ wrt ] = std::move( next );
	}
	return trace;
}

} // namespace dlc
