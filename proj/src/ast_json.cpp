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
#include <dlc/errors.hpp>

namespace dlc {

using nlohmann::json;

json flags_to_json( const ConnectiveFlags &f ) {
	return json { { "neg", f.neg }, { "impl", f.impl }, { "monoid", f.monoid }, { "lattice", f.lattice } };
}

ConnectiveFlags flags_from_json( const json &j ) {
	if( !j.is_object() ) fail( ErrorCode::ValidationError, "flags must be an object" );
	ConnectiveFlags f;
	f.neg = j.at( "neg" ).get< bool >();
	f.impl = j.at( "impl" ).get< bool >();
	f.monoid = j.at( "monoid" ).get< bool >();
	f.lattice = j.at( "lattice" ).get< bool >();
	return f;
}

namespace {

json tag_to_json( const TypeTag &t ) {
	switch( t.kind ) {
	case TypeKind::Bool: return json { { "type", "bool" }, { "flags", flags_to_json( t.flags ) } };
	case TypeKind::Real: return json { { "type", "real" } };
	case TypeKind::Index: return json { { "type", "index" }, { "n", t.a } };
	case TypeKind::Vector: return json { { "type", "vector" }, { "n", t.a } };
	case TypeKind::Fun: return json { { "type", "fun" }, { "m", t.a }, { "n", t.b } };
	case TypeKind::Fun2: return json { { "type", "fun2" }, { "l", t.a }, { "m", t.b }, { "n", t.c } };
	}
	return json {};
}

TypeTag tag_from_json( const json &j ) {
	const std::string type = j.at( "type" ).get< std::string >();
	if( type == "bool" ) return TypeTag::boolean( flags_from_json( j.at( "flags" ) ) );
	if( type == "real" ) return TypeTag::real();
	if( type == "index" ) return TypeTag::index( j.at( "n" ).get< std::size_t >() );
	if( type == "vector" ) return TypeTag::vector( j.at( "n" ).get< std::size_t >() );
	if( type == "fun" ) return TypeTag::fun( j.at( "m" ).get< std::size_t >(), j.at( "n" ).get< std::size_t >() );
	if( type == "fun2" ) {
		return TypeTag::fun2( j.at( "l" ).get< std::size_t >(), j.at( "m" ).get< std::size_t >(),
			j.at( "n" ).get< std::size_t >() );
	}
	fail( ErrorCode::ValidationError, "unknown type '" + type + "'" );
}

NodeKind kind_from_name( const std::string &s ) {
	static const NodeKind all[] = {
		NodeKind::BoolConst, NodeKind::IndexConst, NodeKind::RealConst, NodeKind::VecConst,
		NodeKind::And, NodeKind::Or, NodeKind::Not, NodeKind::Impl, NodeKind::MAnd, NodeKind::MOr,
		NodeKind::Cmp, NodeKind::FunRef, NodeKind::Fun2Ref, NodeKind::App, NodeKind::App2, NodeKind::Lookup
	};
	for( NodeKind k : all ) {
		if( s == node_kind_name( k ) ) return k;
	}
	fail( ErrorCode::ValidationError, "unknown node kind '" + s + "'" );
}

Expr from_json_rec( const json &j, const std::string &path ) {
	if( !j.is_object() ) fail( ErrorCode::ValidationError, "node must be an object", path );
	const NodeKind kind = kind_from_name( j.at( "kind" ).get< std::string >() );
	const TypeTag tag = tag_from_json( j.at( "tag" ) );
	std::vector< Expr > children;
	if( j.contains( "children" ) ) {
		const auto &ch = j.at( "children" );
		if( !ch.is_array() ) fail( ErrorCode::ValidationError, "children must be an array", path );
		for( std::size_t i = 0; i < ch.size(); ++i ) {
			children.push_back( from_json_rec( ch[ i ], path + "/" + std::to_string( i ) ) );
		}
	}
	NodeParams p;
	switch( kind ) {
	case NodeKind::BoolConst:
		p.bval = j.at( "value" ).get< bool >();
		p.flags = tag.flags;
		break;
	case NodeKind::IndexConst:
		p.ival = j.at( "value" ).get< std::size_t >();
		p.n = tag.a;
		break;
	case NodeKind::RealConst:
		p.rval = j.at( "value" ).get< double >();
		break;
	case NodeKind::VecConst:
		p.vval = j.at( "value" ).get< std::vector< double > >();
		break;
	case NodeKind::Cmp: {
		const std::string op = j.at( "op" ).get< std::string >();
		if( op != "le" && op != "eq" ) fail( ErrorCode::ValidationError, "comparison op must be le or eq", path );
		p.op = op == "le" ? CmpOp::Le : CmpOp::Eq;
		p.flags = tag.flags;
		break;
	}
	case NodeKind::FunRef:
		p.name = j.at( "name" ).get< std::string >();
		p.m = tag.a;
		p.n = tag.b;
		break;
	case NodeKind::Fun2Ref:
		p.name = j.at( "name" ).get< std::string >();
		p.l = tag.a;
		p.m = tag.b;
		p.n = tag.c;
		break;
	default:
		break;
	}
	Expr e;
	try {
		e = build_node( kind, std::move( children ), p );
	} catch( const Error &err ) {
		fail( ErrorCode::ValidationError, err.what(), path );
	}
	if( !( e->tag == tag ) ) {
		fail( ErrorCode::ValidationError, "stored tag " + tag.to_string() + " disagrees with computed " +
			e->tag.to_string(), path );
	}
	return e;
}

} // namespace

json expr_to_json( const Expr &e ) {
	json j;
	j[ "kind" ] = node_kind_name( e->kind );
	j[ "tag" ] = tag_to_json( e->tag );
	switch( e->kind ) {
	case NodeKind::BoolConst: j[ "value" ] = e->bval; break;
	case NodeKind::IndexConst: j[ "value" ] = e->ival; break;
	case NodeKind::RealConst: j[ "value" ] = e->rval; break;
	case NodeKind::VecConst: j[ "value" ] = e->vval; break;
	case NodeKind::Cmp: j[ "op" ] = e->op == CmpOp::Le ? "le" : "eq"; break;
	case NodeKind::FunRef: case NodeKind::Fun2Ref: j[ "name" ] = e->name; break;
	default: break;
	}
	if( !e->children.empty() ) {
		json ch = json::array();
		for( const auto &c : e->children ) ch.push_back( expr_to_json( c ) );
		j[ "children" ] = std::move( ch );
	}
	return j;
}

Expr expr_from_json( const json &j ) {
	try {
		return from_json_rec( j, "$" );
	} catch( const json::exception &err ) {
		fail( ErrorCode::ValidationError, std::string( "malformed node: " ) + err.what() );
	}
}

std::string expr_to_text( const Expr &e ) {
	json doc { { "version", kAstSchema }, { "expr", expr_to_json( e ) } };
	return doc.dump( 2 );
}

Expr expr_from_text( const std::string &text ) {
	json doc;
	try {
		doc = json::parse( text );
	} catch( const json::parse_error &err ) {
		fail( ErrorCode::ParseError, std::string( err.what() ), "byte " + std::to_string( err.byte ) );
	}
	if( !doc.is_object() || !doc.contains( "version" ) || !doc.contains( "expr" ) ) {
		fail( ErrorCode::ValidationError, "document needs 'version' and 'expr'" );
	}
	if( doc.at( "version" ) != kAstSchema ) {
		fail( ErrorCode::ValidationError, "unsupported version " + doc.at( "version" ).dump() );
	}
	return expr_from_json( doc.at( "expr" ) );
}

} // namespace dlc
