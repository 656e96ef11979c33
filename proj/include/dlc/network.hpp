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

#ifndef DLC_NETWORK_HPP
#define DLC_NETWORK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include <dlc/numeric.hpp>
#include <dlc/semantics.hpp>

namespace dlc {

inline constexpr const char *kNetworkSchema = "dlc-net/1";

enum class Activation { Identity, Relu };

/** y = act(W x + b); `weights` is row-major, out rows by in columns. */
struct Layer {
	std::size_t in = 0, out = 0;
	std::vector< double > weights;
	std::vector< double > bias;
	Activation activation = Activation::Identity;
};

/** A feed-forward network. Invariant: layers[k].out == layers[k + 1].in, at least one layer. */
struct NetworkDef {
	std::string name;
	std::vector< Layer > layers;

	std::size_t input_dim() const noexcept { return layers.front().in; }
	std::size_t output_dim() const noexcept { return layers.back().out; }

	template< class T >
	std::vector< T > forward( const std::vector< T > &x ) const {
		if( x.size() != input_dim() ) {
			fail( ErrorCode::ArityError, "network " + name + " expects " + std::to_string( input_dim() ) + " inputs, got "
				+ std::to_string( x.size() ) );
		}
		std::vector< T > cur = x;
		for( const auto &l : layers ) {
			std::vector< T > next( l.out );
			for( std::size_t r = 0; r < l.out; ++r ) {
				T acc( l.bias[ r ] );
				for( std::size_t c = 0; c < l.in; ++c ) acc = acc + T( l.weights[ r * l.in + c ] ) * cur[ c ];
				next[ r ] = l.activation == Activation::Relu ? num::max2( acc, T( 0.0 ) ) : acc;
			}
			cur = std::move( next );
		}
		return cur;
	}
};

/**
 * {"schema": "dlc-net/1", "name"?, "layers": [{"weights": [[...], ...], "bias": [...],
 * "activation": "relu" | "identity"}]}. Throws SchemaError for malformed documents
 * and ArityError when layer shapes do not compose.
 */
NetworkDef network_from_json( const nlohmann::json &j, const std::string &fallback_name = "N" );
nlohmann::json network_to_json( const NetworkDef &net );
/** IoError when the file cannot be read. */
NetworkDef load_network( const std::string &path, const std::string &fallback_name = "N" );

/** Registers the forward pass under `name` (default: the network's own name). */
void register_network( Env &env, const NetworkDef &net, const std::string &name = {} );

} // namespace dlc

#endif
