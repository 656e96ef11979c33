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

#include <dlc/network.hpp>

#include <fstream>

namespace dlc {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail( const std::string &msg, const std::string &path ) {
	fail( ErrorCode::SchemaError, msg, path );
}

std::vector< double > numbers( const json &j, const std::string &path ) {
	if( !j.is_array() ) schema_fail( "expected an array of numbers", path );
	std::vector< double > out;
	for( const auto &v : j ) {
		if( !v.is_number() ) schema_fail( "expected a number", path );
		out.push_back( v.get< double >() );
	}
	return out;
}

} // namespace

NetworkDef network_from_json( const json &j, const std::string &fallback_name ) {
	if( !j.is_object() ) schema_fail( "network document must be an object", "$" );
	if( !j.contains( "schema" ) || j.at( "schema" ) != kNetworkSchema ) {
		schema_fail( std::string( "expected schema '" ) + kNetworkSchema + "'", "$.schema" );
	}
	NetworkDef net;
	net.name = j.contains( "name" ) && j.at( "name" ).is_string() ? j.at( "name" ).get< std::string >() : fallback_name;
	if( !j.contains( "layers" ) || !j.at( "layers" ).is_array() || j.at( "layers" ).empty() ) {
		schema_fail( "'layers' must be a non-empty array", "$.layers" );
	}
	const json &layers = j.at( "layers" );
	for( std::size_t k = 0; k < layers.size(); ++k ) {
		const std::string path = "$.layers[" + std::to_string( k ) + "]";
		const json &lj = layers[ k ];
		if( !lj.is_object() || !lj.contains( "weights" ) || !lj.contains( "bias" ) ) {
			schema_fail( "layer needs 'weights' and 'bias'", path );
		}
		const json &w = lj.at( "weights" );
		if( !w.is_array() || w.empty() ) schema_fail( "'weights' must be a non-empty matrix", path + ".weights" );
		Layer l;
		l.out = w.size();
		for( std::size_t r = 0; r < w.size(); ++r ) {
			const auto row = numbers( w[ r ], path + ".weights[" + std::to_string( r ) + "]" );
			if( r == 0 ) l.in = row.size();
			if( row.empty() || row.size() != l.in ) {
				fail( ErrorCode::ArityError, "weight rows must be non-empty and of equal length", path );
			}
			l.weights.insert( l.weights.end(), row.begin(), row.end() );
		}
		l.bias = numbers( lj.at( "bias" ), path + ".bias" );
		if( l.bias.size() != l.out ) {
			fail( ErrorCode::ArityError, "bias has " + std::to_string( l.bias.size() ) + " entries for "
				+ std::to_string( l.out ) + " rows", path );
		}
		const std::string act = lj.value( "activation", std::string( "identity" ) );
		if( act == "relu" ) l.activation = Activation::Relu;
		else if( act == "identity" ) l.activation = Activation::Identity;
		else schema_fail( "unknown activation '" + act + "'", path + ".activation" );
		if( !net.layers.empty() && net.layers.back().out != l.in ) {
			fail( ErrorCode::ArityError, "layer takes " + std::to_string( l.in ) + " inputs but the previous layer gives "
				+ std::to_string( net.layers.back().out ), path );
		}
		net.layers.push_back( std::move( l ) );
	}
	return net;
}

json network_to_json( const NetworkDef &net ) {
	json layers = json::array();
	for( const auto &l : net.layers ) {
		json w = json::array();
		for( std::size_t r = 0; r < l.out; ++r ) {
			w.push_back( std::vector< double >( l.weights.begin() + static_cast< std::ptrdiff_t >( r * l.in ),
				l.weights.begin() + static_cast< std::ptrdiff_t >( ( r + 1 ) * l.in ) ) );
		}
		layers.push_back( { { "weights", w }, { "bias", l.bias },
			{ "activation", l.activation == Activation::Relu ? "relu" : "identity" } } );
	}
	return { { "schema", kNetworkSchema }, { "name", net.name }, { "layers", layers } };
}

NetworkDef load_network( const std::string &path, const std::string &fallback_name ) {
	std::ifstream in( path );
	if( !in ) fail( ErrorCode::IoError, "cannot read network file " + path );
	json j;
	try {
		j = json::parse( in );
	} catch( const json::parse_error &e ) {
		fail( ErrorCode::SchemaError, std::string( "invalid JSON: " ) + e.what(), path );
	}
	return network_from_json( j, fallback_name );
}

void register_network( Env &env, const NetworkDef &net, const std::string &name ) {
	env.define( name.empty() ? net.name : name, net.input_dim(), net.output_dim(),
		[ net ]( const auto &x ) { return net.forward( x ); } );
}

} // namespace dlc
