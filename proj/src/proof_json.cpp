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

#include <dlc/ast_json.hpp>
#include <dlc/calculus.hpp>
#include <dlc/spec.hpp>

namespace dlc {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail( const std::string &msg, const std::string &path ) {
	fail( ErrorCode::SchemaError, msg, path );
}

/** A logic whose flag profile matches, so printed text re-parses with the same tags. */
std::optional< Logic > logic_for_flags( const ConnectiveFlags &f ) {
	for( const Logic &l : { Logic::godel(), Logic::dl2(), Logic::stl( 1.0 ) } ) {
		if( l.flag_profile() == f ) return l;
	}
	return std::nullopt;
}

/** Surface text when it round-trips, the dlc-ast/1 node otherwise. */
json formula_to_json( const Expr &f ) {
	const std::string text = to_surface( f );
	if( const auto l = logic_for_flags( f->tag.flags ) ) {
		try {
			if( structurally_equal( parse_formula( text, *l ), f ) ) return text;
		} catch( const Error & ) {
		}
	}
	return expr_to_json( f );
}

Expr formula_from_json( const json &j, const Logic &logic, const std::string &path ) {
	try {
		if( j.is_string() ) return parse_formula( j.get< std::string >(), logic );
		if( j.is_object() ) {
			Expr e = expr_from_json( j );
			validate_for_logic( e, logic );
			return e;
		}
	} catch( const Error &e ) {
		throw Error( e.code(), e.message(), path + ( e.path().empty() ? "" : " (" + e.path() + ")" ) );
	}
	schema_fail( "formula must be a string or an expression object", path );
}

std::vector< Expr > side_from_json( const json &j, const Logic &logic, const std::string &path ) {
	if( !j.is_array() ) schema_fail( "expected an array of formulas", path );
	std::vector< Expr > out;
	for( std::size_t i = 0; i < j.size(); ++i ) {
		out.push_back( formula_from_json( j[ i ], logic, path + "[" + std::to_string( i ) + "]" ) );
	}
	return out;
}

std::size_t index_field( const json &j, const char *key, std::size_t dflt, const std::string &path ) {
	if( !j.contains( key ) ) return dflt;
	const json &v = j.at( key );
	if( !v.is_number_unsigned() && !( v.is_number_integer() && v.get< long long >() >= 0 ) ) {
		schema_fail( std::string( "'" ) + key + "' must be a non-negative integer", path );
	}
	return v.get< std::size_t >();
}

Hypersequent hypersequent_at( const json &j, const Logic &logic, const std::string &path ) {
	if( j.is_string() ) {
		try {
			return parse_hypersequent( j.get< std::string >(), logic );
		} catch( const Error &e ) {
			throw Error( e.code(), e.message(), path + ( e.path().empty() ? "" : " (" + e.path() + ")" ) );
		}
	}
	if( !j.is_object() || !j.contains( "components" ) || !j.at( "components" ).is_array() ) {
		schema_fail( "hypersequent needs a 'components' array", path );
	}
	Hypersequent h;
	const json &cs = j.at( "components" );
	for( std::size_t i = 0; i < cs.size(); ++i ) {
		const std::string p = path + ".components[" + std::to_string( i ) + "]";
		if( !cs[ i ].is_object() ) schema_fail( "component must be an object", p );
		Sequent s;
		if( cs[ i ].contains( "left" ) ) s.left = side_from_json( cs[ i ].at( "left" ), logic, p + ".left" );
		if( cs[ i ].contains( "right" ) ) s.right = side_from_json( cs[ i ].at( "right" ), logic, p + ".right" );
		h.components.push_back( std::move( s ) );
	}
	if( h.components.empty() ) schema_fail( "hypersequent has no components", path );
	return h;
}

RuleInstance rule_at( const json &j, const std::string &path ) {
	if( !j.is_object() || !j.contains( "name" ) || !j.at( "name" ).is_string() ) {
		schema_fail( "rule needs a 'name' string", path );
	}
	RuleInstance r;
	try {
		r.rule = rule_from_name( j.at( "name" ).get< std::string >() );
	} catch( const Error &e ) {
		schema_fail( e.message(), path );
	}
	r.comp = index_field( j, "comp", 0, path );
	r.pos = index_field( j, "pos", 0, path );
	r.count = index_field( j, "count", 1, path );
	r.k1 = index_field( j, "k1", 0, path );
	r.k2 = index_field( j, "k2", 0, path );
	return r;
}

ProofTree node_at( const json &j, const Logic &logic, const std::string &path ) {
	if( !j.is_object() ) schema_fail( "proof node must be an object", path );
	if( !j.contains( "conclusion" ) ) schema_fail( "missing 'conclusion'", path );
	if( !j.contains( "rule" ) ) schema_fail( "missing 'rule'", path );
	ProofTree t;
	t.conclusion = hypersequent_at( j.at( "conclusion" ), logic, path + ".conclusion" );
	t.rule = rule_at( j.at( "rule" ), path + ".rule" );
	if( j.contains( "premises" ) ) {
		const json &ps = j.at( "premises" );
		if( !ps.is_array() ) schema_fail( "'premises' must be an array", path );
		for( std::size_t i = 0; i < ps.size(); ++i ) {
			t.premises.push_back( node_at( ps[ i ], logic, path + ".premises[" + std::to_string( i ) + "]" ) );
		}
	}
	return t;
}

json node_to_json( const ProofTree &t ) {
	json j { { "conclusion", hypersequent_to_json( t.conclusion ) }, { "rule", rule_to_json( t.rule ) } };
	if( !t.premises.empty() ) {
		j[ "premises" ] = json::array();
		for( const auto &p : t.premises ) j[ "premises" ].push_back( node_to_json( p ) );
	}
	return j;
}

} // namespace

json sequent_to_json( const Sequent &s ) {
	json j { { "left", json::array() }, { "right", json::array() } };
	for( const auto &f : s.left ) j[ "left" ].push_back( formula_to_json( f ) );
	for( const auto &f : s.right ) j[ "right" ].push_back( formula_to_json( f ) );
	return j;
}

json hypersequent_to_json( const Hypersequent &h ) {
	json j { { "components", json::array() } };
	for( const auto &s : h.components ) j[ "components" ].push_back( sequent_to_json( s ) );
	return j;
}

Hypersequent hypersequent_from_json( const json &j, const Logic &logic ) { return hypersequent_at( j, logic, "$" ); }

json rule_to_json( const RuleInstance &r ) {
	json j { { "name", rule_name( r.rule ) } };
	if( r.comp ) j[ "comp" ] = r.comp;
	if( r.pos ) j[ "pos" ] = r.pos;
	if( r.count != 1 ) j[ "count" ] = r.count;
	if( r.k1 ) j[ "k1" ] = r.k1;
	if( r.k2 ) j[ "k2" ] = r.k2;
	return j;
}

RuleInstance rule_from_json( const json &j ) { return rule_at( j, "$" ); }

json proof_to_json( const Calculus &calc, const ProofTree &tree ) {
	return json { { "schema", kProofSchema }, { "logic", calc.logic().name() }, { "proof", node_to_json( tree ) } };
}

ProofTree proof_from_json( const json &j, const Logic &logic ) {
	if( !j.is_object() ) schema_fail( "proof document must be an object", "$" );
	if( !j.contains( "schema" ) || j.at( "schema" ) != kProofSchema ) {
		schema_fail( std::string( "expected schema '" ) + kProofSchema + "'", "$.schema" );
	}
	if( j.contains( "logic" ) && ( !j.at( "logic" ).is_string() || j.at( "logic" ).get< std::string >() != logic.name() ) ) {
		schema_fail( "proof is for logic " + j.at( "logic" ).dump() + ", not " + logic.name(), "$.logic" );
	}
	if( !j.contains( "proof" ) ) schema_fail( "missing 'proof'", "$" );
	return node_at( j.at( "proof" ), logic, "$.proof" );
}

ProofTree proof_node_from_json( const json &j, const Logic &logic ) { return node_at( j, logic, "$" ); }

} // namespace dlc
