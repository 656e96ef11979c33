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

#include <dlc/calculus.hpp>
#include <dlc/errors.hpp>
#include <dlc/spec.hpp>

#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace dlc {

namespace {

enum class Tok {
	End, Ident, Number,
	LParen, RParen, LBrack, RBrack, Comma, Semi, Colon, Arrow,
	Implies, And, Or, MAnd, MOr, Tilde, Le, Eq, Turnstile, Bar, NormClose
};

const char *tok_text( Tok t ) {
	switch( t ) {
	case Tok::End: return "end of input";
	case Tok::Ident: return "identifier";
	case Tok::Number: return "number";
	case Tok::LParen: return "'('";
	case Tok::RParen: return "')'";
	case Tok::LBrack: return "'['";
	case Tok::RBrack: return "']'";
	case Tok::Comma: return "','";
	case Tok::Semi: return "';'";
	case Tok::Colon: return "':'";
	case Tok::Arrow: return "'->'";
	case Tok::Implies: return "'=>'";
	case Tok::And: return "'/\\'";
	case Tok::Or: return "'\\/'";
	case Tok::MAnd: return "'(*)'";
	case Tok::MOr: return "'(+)'";
	case Tok::Tilde: return "'~'";
	case Tok::Le: return "'<='";
	case Tok::Eq: return "'=='";
	case Tok::Turnstile: return "'|-'";
	case Tok::Bar: return "'|'";
	case Tok::NormClose: return "'|_inf'";
	}
	return "?";
}

struct Token {
	Tok kind = Tok::End;
	std::string text;
	double number = 0.0;
	std::size_t line = 1, col = 1;
};

std::string at( std::size_t line, std::size_t col ) { return std::to_string( line ) + ":" + std::to_string( col ); }

[[noreturn]] void parse_fail( std::size_t line, std::size_t col, const std::string &msg ) {
	fail( ErrorCode::ParseError, msg, at( line, col ) );
}

std::vector< Token > lex( const std::string &src ) {
	std::vector< Token > out;
	std::size_t i = 0, line = 1, col = 1;
	auto advance = [ & ]( std::size_t k ) {
		for( std::size_t j = 0; j < k; ++j ) {
			if( src[ i ] == '\n' ) {
				++line;
				col = 1;
			} else {
				++col;
			}
			++i;
		}
	};
	auto starts = [ & ]( const char *s ) { return src.compare( i, std::char_traits< char >::length( s ), s ) == 0; };
	while( i < src.size() ) {
		const char ch = src[ i ];
		if( std::isspace( static_cast< unsigned char >( ch ) ) ) {
			advance( 1 );
			continue;
		}
		if( ch == '#' ) {
			while( i < src.size() && src[ i ] != '\n' ) advance( 1 );
			continue;
		}
		Token t;
		t.line = line;
		t.col = col;
		auto punct = [ & ]( Tok k, std::size_t len ) {
			t.kind = k;
			t.text = src.substr( i, len );
			advance( len );
			out.push_back( t );
		};
		const bool digit_next = i + 1 < src.size()
			&& ( std::isdigit( static_cast< unsigned char >( src[ i + 1 ] ) ) || src[ i + 1 ] == '.' );
		if( std::isdigit( static_cast< unsigned char >( ch ) ) || ch == '.' || ( ch == '-' && digit_next ) ) {
			std::size_t j = i + ( ch == '-' ? 1 : 0 );
			while( j < src.size() && ( std::isdigit( static_cast< unsigned char >( src[ j ] ) ) || src[ j ] == '.' ) ) ++j;
			if( j < src.size() && ( src[ j ] == 'e' || src[ j ] == 'E' ) ) {
				std::size_t k = j + 1;
				if( k < src.size() && ( src[ k ] == '+' || src[ k ] == '-' ) ) ++k;
				if( k < src.size() && std::isdigit( static_cast< unsigned char >( src[ k ] ) ) ) {
					j = k;
					while( j < src.size() && std::isdigit( static_cast< unsigned char >( src[ j ] ) ) ) ++j;
				}
			}
			t.kind = Tok::Number;
			t.text = src.substr( i, j - i );
			const auto r = std::from_chars( t.text.data(), t.text.data() + t.text.size(), t.number );
			if( r.ec != std::errc() || r.ptr != t.text.data() + t.text.size() ) {
				parse_fail( line, col, "malformed number '" + t.text + "'" );
			}
			advance( j - i );
			out.push_back( t );
			continue;
		}
		if( std::isalpha( static_cast< unsigned char >( ch ) ) || ch == '_' ) {
			std::size_t j = i;
			while( j < src.size() && ( std::isalnum( static_cast< unsigned char >( src[ j ] ) ) || src[ j ] == '_' ) ) ++j;
			t.kind = Tok::Ident;
			t.text = src.substr( i, j - i );
			advance( j - i );
			out.push_back( t );
			continue;
		}
		if( starts( "(*)" ) ) { punct( Tok::MAnd, 3 ); continue; }
		if( starts( "(+)" ) ) { punct( Tok::MOr, 3 ); continue; }
		if( starts( "|_inf" ) ) { punct( Tok::NormClose, 5 ); continue; }
		if( starts( "|-" ) ) { punct( Tok::Turnstile, 2 ); continue; }
		if( starts( "->" ) ) { punct( Tok::Arrow, 2 ); continue; }
		if( starts( "=>" ) ) { punct( Tok::Implies, 2 ); continue; }
		if( starts( "/\\" ) ) { punct( Tok::And, 2 ); continue; }
		if( starts( "\\/" ) ) { punct( Tok::Or, 2 ); continue; }
		if( starts( "<=" ) ) { punct( Tok::Le, 2 ); continue; }
		if( starts( "==" ) ) { punct( Tok::Eq, 2 ); continue; }
		switch( ch ) {
		case '(': punct( Tok::LParen, 1 ); continue;
		case ')': punct( Tok::RParen, 1 ); continue;
		case '[': punct( Tok::LBrack, 1 ); continue;
		case ']': punct( Tok::RBrack, 1 ); continue;
		case ',': punct( Tok::Comma, 1 ); continue;
		case ';': punct( Tok::Semi, 1 ); continue;
		case ':': punct( Tok::Colon, 1 ); continue;
		case '~': punct( Tok::Tilde, 1 ); continue;
		case '|': punct( Tok::Bar, 1 ); continue;
		default: break;
		}
		parse_fail( line, col, std::string( "unexpected character '" ) + ch + "'" );
	}
	Token end;
	end.line = line;
	end.col = col;
	out.push_back( end );
	return out;
}

const std::set< std::string > kKeywords = { "true", "false", "and", "or", "mand", "mor", "sub", "vector", "scalar",
	"network", "function", "goal" };

SurfacePtr make( SurfaceExpr e ) { return std::make_shared< const SurfaceExpr >( std::move( e ) ); }

bool is_compound( const SurfacePtr &e ) {
	return e->kind == SurfaceKind::Impl || ( e->kind == SurfaceKind::Nary && e->kids.size() >= 2 );
}

class Parser {
public:
	Parser( const std::string &text, SpecDoc *scope ) : toks_( lex( text ) ), scope_( scope ) {}

	SpecDoc spec() {
		SpecDoc doc;
		scope_ = &doc;
		while( peek().kind != Tok::End ) statement( doc );
		if( !doc.goal ) parse_fail( peek().line, peek().col, "missing goal" );
		return doc;
	}

	SurfacePtr formula_only() {
		SurfacePtr f = formula();
		expect( Tok::End );
		return f;
	}

	/** Γ |- Δ | Γ' |- Δ' ... */
	std::vector< std::pair< std::vector< SurfacePtr >, std::vector< SurfacePtr > > > hypersequent() {
		std::vector< std::pair< std::vector< SurfacePtr >, std::vector< SurfacePtr > > > out;
		while( true ) {
			auto left = formula_list( Tok::Turnstile );
			expect( Tok::Turnstile );
			auto right = formula_list( Tok::Bar );
			out.push_back( { std::move( left ), std::move( right ) } );
			if( peek().kind == Tok::End ) break;
			expect( Tok::Bar );
		}
		return out;
	}

private:
	const Token &peek( std::size_t k = 0 ) const { return toks_[ std::min( pos_ + k, toks_.size() - 1 ) ]; }
	Token next() { return toks_[ pos_ < toks_.size() - 1 ? pos_++ : pos_ ]; }

	Token expect( Tok k ) {
		if( peek().kind != k ) {
			parse_fail( peek().line, peek().col,
				std::string( "expected " ) + tok_text( k ) + ", found " + describe( peek() ) );
		}
		return next();
	}

	static std::string describe( const Token &t ) {
		if( t.kind == Tok::Ident || t.kind == Tok::Number ) return "'" + t.text + "'";
		return tok_text( t.kind );
	}

	bool keyword( const char *kw ) const { return peek().kind == Tok::Ident && peek().text == kw; }

	std::size_t positive_int() {
		const Token t = expect( Tok::Number );
		if( t.text.find_first_not_of( "0123456789" ) != std::string::npos || t.number < 1 ) {
			parse_fail( t.line, t.col, "expected a positive integer, found '" + t.text + "'" );
		}
		return static_cast< std::size_t >( t.number );
	}

	void statement( SpecDoc &doc ) {
		const Token head = expect( Tok::Ident );
		if( head.text == "goal" ) {
			if( doc.goal ) parse_fail( head.line, head.col, "a spec has exactly one goal" );
			doc.goal = formula();
			expect( Tok::Semi );
			return;
		}
		Declaration d;
		d.line = head.line;
		if( head.text == "vector" ) d.kind = DeclKind::Vector;
		else if( head.text == "scalar" ) d.kind = DeclKind::Scalar;
		else if( head.text == "network" ) d.kind = DeclKind::Network;
		else if( head.text == "function" ) d.kind = DeclKind::Function;
		else parse_fail( head.line, head.col, "expected a declaration or 'goal', found '" + head.text + "'" );
		const Token name = expect( Tok::Ident );
		if( kKeywords.count( name.text ) ) parse_fail( name.line, name.col, "'" + name.text + "' is reserved" );
		d.name = name.text;
		switch( d.kind ) {
		case DeclKind::Vector:
			expect( Tok::Colon );
			d.n = positive_int();
			break;
		case DeclKind::Scalar:
			d.n = 1;
			break;
		case DeclKind::Network:
			expect( Tok::Colon );
			d.m = positive_int();
			expect( Tok::Arrow );
			d.n = positive_int();
			break;
		case DeclKind::Function:
			expect( Tok::Colon );
			d.l = positive_int();
			expect( Tok::Comma );
			d.m = positive_int();
			expect( Tok::Arrow );
			d.n = positive_int();
			break;
		}
		expect( Tok::Semi );
		if( doc.find( d.name ) ) {
			fail( ErrorCode::DuplicateDeclaration, "'" + d.name + "' is already declared", at( name.line, name.col ) );
		}
		doc.declarations.push_back( d );
	}

	std::vector< SurfacePtr > formula_list( Tok stop ) {
		std::vector< SurfacePtr > out;
		if( peek().kind == stop || peek().kind == Tok::End ) return out;
		out.push_back( formula() );
		while( peek().kind == Tok::Comma ) {
			next();
			out.push_back( formula() );
		}
		return out;
	}

	SurfacePtr formula() {
		const Token start = peek();
		SurfacePtr lhs = nary();
		if( peek().kind != Tok::Implies ) return lhs;
		next();
		SurfaceExpr e;
		e.kind = SurfaceKind::Impl;
		e.line = start.line;
		e.col = start.col;
		e.kids = { lhs, formula() };
		return make( std::move( e ) );
	}

	static std::optional< NodeKind > nary_op( Tok t ) {
		switch( t ) {
		case Tok::And: return NodeKind::And;
		case Tok::Or: return NodeKind::Or;
		case Tok::MAnd: return NodeKind::MAnd;
		case Tok::MOr: return NodeKind::MOr;
		default: return std::nullopt;
		}
	}

	SurfacePtr nary() {
		const Token start = peek();
		SurfacePtr first = unary();
		const auto op = nary_op( peek().kind );
		if( !op ) return first;
		SurfaceExpr e;
		e.kind = SurfaceKind::Nary;
		e.op = *op;
		e.line = start.line;
		e.col = start.col;
		e.kids.push_back( first );
		while( auto o = nary_op( peek().kind ) ) {
			if( *o != *op ) {
				parse_fail( peek().line, peek().col, std::string( "mixing " ) + node_kind_name( *op ) + " and "
					+ node_kind_name( *o ) + " needs parentheses" );
			}
			next();
			e.kids.push_back( unary() );
		}
		return make( std::move( e ) );
	}

	SurfacePtr unary() {
		const Token t = peek();
		if( t.kind == Tok::Tilde ) {
			next();
			SurfaceExpr e;
			e.kind = SurfaceKind::Not;
			e.line = t.line;
			e.col = t.col;
			e.kids = { unary() };
			return make( std::move( e ) );
		}
		if( t.kind == Tok::LParen ) {
			next();
			SurfacePtr inner = formula();
			expect( Tok::RParen );
			return inner;
		}
		if( t.kind == Tok::Ident && ( t.text == "true" || t.text == "false" ) ) {
			next();
			SurfaceExpr e;
			e.kind = SurfaceKind::BoolLit;
			e.truth = t.text == "true";
			e.line = t.line;
			e.col = t.col;
			return make( std::move( e ) );
		}
		if( t.kind == Tok::Ident && peek( 1 ).kind == Tok::LParen
			&& ( t.text == "and" || t.text == "or" || t.text == "mand" || t.text == "mor" ) ) {
			next();
			next();
			SurfaceExpr e;
			e.kind = SurfaceKind::Nary;
			e.op = t.text == "and" ? NodeKind::And : t.text == "or" ? NodeKind::Or : t.text == "mand" ? NodeKind::MAnd : NodeKind::MOr;
			e.line = t.line;
			e.col = t.col;
			e.kids.push_back( formula() );
			while( peek().kind == Tok::Comma ) {
				next();
				e.kids.push_back( formula() );
			}
			expect( Tok::RParen );
			return make( std::move( e ) );
		}
		return comparison();
	}

	SurfacePtr comparison() {
		const Token start = peek();
		SurfacePtr a = real();
		const Token op = peek();
		if( op.kind != Tok::Le && op.kind != Tok::Eq ) {
			parse_fail( op.line, op.col, "expected '<=' or '==' after a real expression, found " + describe( op ) );
		}
		next();
		SurfaceExpr e;
		e.kind = SurfaceKind::Cmp;
		e.cmp = op.kind == Tok::Le ? CmpOp::Le : CmpOp::Eq;
		e.line = start.line;
		e.col = start.col;
		e.kids = { a, real() };
		return make( std::move( e ) );
	}

	SurfacePtr real() {
		SurfacePtr e = real_primary();
		while( peek().kind == Tok::LBrack ) {
			const Token t = next();
			SurfaceExpr ix;
			ix.kind = SurfaceKind::Index;
			const Token n = expect( Tok::Number );
			if( n.text.find_first_not_of( "0123456789" ) != std::string::npos ) {
				parse_fail( n.line, n.col, "index must be a non-negative integer" );
			}
			ix.index = static_cast< std::size_t >( n.number );
			expect( Tok::RBrack );
			ix.line = t.line;
			ix.col = t.col;
			ix.kids = { e };
			e = make( std::move( ix ) );
		}
		return e;
	}

	const Declaration &resolve( const Token &t ) {
		const Declaration *d = scope_ ? scope_->find( t.text ) : nullptr;
		if( !d ) {
			fail( ErrorCode::UndeclaredIdentifier, "'" + t.text + "' is not declared", at( t.line, t.col ) );
		}
		return *d;
	}

	SurfacePtr real_primary() {
		const Token t = peek();
		SurfaceExpr e;
		e.line = t.line;
		e.col = t.col;
		switch( t.kind ) {
		case Tok::Number:
			next();
			e.kind = SurfaceKind::Number;
			e.number = t.number;
			return make( std::move( e ) );
		case Tok::LBrack: {
			next();
			e.kind = SurfaceKind::VecLit;
			e.values.push_back( expect( Tok::Number ).number );
			while( peek().kind == Tok::Comma ) {
				next();
				e.values.push_back( expect( Tok::Number ).number );
			}
			expect( Tok::RBrack );
			return make( std::move( e ) );
		}
		case Tok::Bar:
			next();
			e.kind = SurfaceKind::Norm;
			e.kids = { real() };
			expect( Tok::NormClose );
			return make( std::move( e ) );
		case Tok::Ident:
			break;
		default:
			parse_fail( t.line, t.col, "expected a formula or real expression, found " + describe( t ) );
		}
		next();
		if( t.text == "sub" ) {
			expect( Tok::LParen );
			e.kind = SurfaceKind::Sub;
			SurfacePtr a = real();
			expect( Tok::Comma );
			e.kids = { a, real() };
			expect( Tok::RParen );
			return make( std::move( e ) );
		}
		if( kKeywords.count( t.text ) ) parse_fail( t.line, t.col, "unexpected keyword '" + t.text + "'" );
		const Declaration &d = resolve( t );
		e.name = t.text;
		if( peek().kind != Tok::LParen ) {
			if( d.kind == DeclKind::Network || d.kind == DeclKind::Function ) {
				parse_fail( t.line, t.col, "'" + t.text + "' must be applied to arguments" );
			}
			e.kind = SurfaceKind::Ident;
			return make( std::move( e ) );
		}
		if( d.kind == DeclKind::Vector || d.kind == DeclKind::Scalar ) {
			parse_fail( t.line, t.col, "'" + t.text + "' is not a function" );
		}
		next();
		e.kind = SurfaceKind::Call;
		e.kids.push_back( real() );
		while( peek().kind == Tok::Comma ) {
			next();
			e.kids.push_back( real() );
		}
		expect( Tok::RParen );
		const std::size_t want = d.kind == DeclKind::Network ? 1 : 2;
		if( e.kids.size() != want ) {
			fail( ErrorCode::ArityMismatch, "'" + t.text + "' takes " + std::to_string( want ) + " argument(s)",
				at( t.line, t.col ) );
		}
		return make( std::move( e ) );
	}

	std::vector< Token > toks_;
	std::size_t pos_ = 0;
	SpecDoc *scope_;
};

std::string number_text( double v ) {
	char buf[ 64 ];
	const auto r = std::to_chars( buf, buf + sizeof buf, v );
	return std::string( buf, r.ptr );
}

void print( std::ostream &os, const SurfacePtr &e );

void print_operand( std::ostream &os, const SurfacePtr &e ) {
	if( is_compound( e ) ) {
		os << "(";
		print( os, e );
		os << ")";
	} else {
		print( os, e );
	}
}

const char *infix( NodeKind k ) {
	switch( k ) {
	case NodeKind::And: return "/\\";
	case NodeKind::Or: return "\\/";
	case NodeKind::MAnd: return "(*)";
	default: return "(+)";
	}
}

const char *prefix( NodeKind k ) {
	switch( k ) {
	case NodeKind::And: return "and";
	case NodeKind::Or: return "or";
	case NodeKind::MAnd: return "mand";
	default: return "mor";
	}
}

void print( std::ostream &os, const SurfacePtr &e ) {
	switch( e->kind ) {
	case SurfaceKind::BoolLit: os << ( e->truth ? "true" : "false" ); break;
	case SurfaceKind::Number: os << number_text( e->number ); break;
	case SurfaceKind::VecLit:
		os << "[";
		for( std::size_t i = 0; i < e->values.size(); ++i ) os << ( i ? ", " : "" ) << number_text( e->values[ i ] );
		os << "]";
		break;
	case SurfaceKind::Ident: os << e->name; break;
	case SurfaceKind::Call:
		os << e->name << "(";
		for( std::size_t i = 0; i < e->kids.size(); ++i ) {
			if( i ) os << ", ";
			print( os, e->kids[ i ] );
		}
		os << ")";
		break;
	case SurfaceKind::Index:
		print( os, e->kids[ 0 ] );
		os << "[" << e->index << "]";
		break;
	case SurfaceKind::Norm:
		os << "|";
		print( os, e->kids[ 0 ] );
		os << "|_inf";
		break;
	case SurfaceKind::Sub:
		os << "sub(";
		print( os, e->kids[ 0 ] );
		os << ", ";
		print( os, e->kids[ 1 ] );
		os << ")";
		break;
	case SurfaceKind::Nary:
		if( e->kids.size() == 1 ) {
			os << prefix( e->op ) << "(";
			print( os, e->kids[ 0 ] );
			os << ")";
			break;
		}
		for( std::size_t i = 0; i < e->kids.size(); ++i ) {
			if( i ) os << " " << infix( e->op ) << " ";
			print_operand( os, e->kids[ i ] );
		}
		break;
	case SurfaceKind::Not:
		os << "~";
		if( e->kids[ 0 ]->kind == SurfaceKind::Cmp ) {
			os << "(";
			print( os, e->kids[ 0 ] );
			os << ")";
		} else {
			print_operand( os, e->kids[ 0 ] );
		}
		break;
	case SurfaceKind::Impl:
		print_operand( os, e->kids[ 0 ] );
		os << " => ";
		print_operand( os, e->kids[ 1 ] );
		break;
	case SurfaceKind::Cmp:
		print( os, e->kids[ 0 ] );
		os << ( e->cmp == CmpOp::Le ? " <= " : " == " );
		print( os, e->kids[ 1 ] );
		break;
	}
}

class Elaborator {
public:
	Elaborator( const SpecDoc &scope, const Logic &logic, const Env *env )
		: scope_( scope ), flags_( logic.flag_profile() ), env_( env ) {}

	Expr boolean( const SurfacePtr &s ) {
		return guarded( s, [ & ]() -> Expr {
			switch( s->kind ) {
			case SurfaceKind::BoolLit: return ast::bool_const( s->truth, flags_ );
			case SurfaceKind::Nary: {
				std::vector< Expr > kids;
				for( const auto &k : s->kids ) kids.push_back( boolean( k ) );
				return build_node( s->op, std::move( kids ) );
			}
			case SurfaceKind::Not: return ast::neg( boolean( s->kids[ 0 ] ) );
			case SurfaceKind::Impl: return ast::impl( boolean( s->kids[ 0 ] ), boolean( s->kids[ 1 ] ) );
			case SurfaceKind::Cmp: return ast::cmp( s->cmp, real( s->kids[ 0 ] ), real( s->kids[ 1 ] ), flags_ );
			default: fail( ErrorCode::TypeMismatch, "a real expression is used where a formula is expected" );
			}
		} );
	}

	Expr real( const SurfacePtr &s ) {
		return guarded( s, [ & ]() -> Expr {
			switch( s->kind ) {
			case SurfaceKind::Number: return ast::real_const( s->number );
			case SurfaceKind::VecLit: return ast::vec_const( s->values );
			case SurfaceKind::Ident: {
				const Declaration &d = decl( s );
				Expr app = ast::app( ast::fun_ref( d.name, 1, d.n ), ast::vec_const( { 0.0 } ) );
				if( d.kind == DeclKind::Scalar ) return ast::lookup( app, ast::index_const( 0, 1 ) );
				return app;
			}
			case SurfaceKind::Call: {
				const Declaration &d = decl( s );
				if( env_ && ( d.kind == DeclKind::Network ? !env_->find( d.name ) : !env_->find2( d.name ) ) ) {
					fail( ErrorCode::UnresolvedFunction, "no definition supplied for '" + d.name + "'" );
				}
				if( d.kind == DeclKind::Network ) return ast::app( ast::fun_ref( d.name, d.m, d.n ), real( s->kids[ 0 ] ) );
				return ast::app2( ast::fun2_ref( d.name, d.l, d.m, d.n ), real( s->kids[ 0 ] ), real( s->kids[ 1 ] ) );
			}
			case SurfaceKind::Index: {
				Expr v = real( s->kids[ 0 ] );
				const TypeTag &t = type_of( v );
				if( t.kind != TypeKind::Vector ) fail( ErrorCode::TypeMismatch, "indexing a non-vector" );
				return ast::lookup( v, ast::index_const( s->index, t.a ) );
			}
			case SurfaceKind::Norm: {
				Expr v = real( s->kids[ 0 ] );
				const TypeTag &t = type_of( v );
				if( t.kind != TypeKind::Vector ) fail( ErrorCode::TypeMismatch, "|.|_inf needs a vector" );
				return ast::lookup( ast::app( ast::fun_ref( "norm_inf", t.a, 1 ), v ), ast::index_const( 0, 1 ) );
			}
			case SurfaceKind::Sub: {
				Expr a = real( s->kids[ 0 ] ), b = real( s->kids[ 1 ] );
				const TypeTag &ta = type_of( a ), &tb = type_of( b );
				if( ta.kind != TypeKind::Vector || !( ta == tb ) ) {
					fail( ErrorCode::TypeMismatch, "sub needs two vectors of the same length" );
				}
				return ast::app2( ast::fun2_ref( "sub", ta.a, ta.a, ta.a ), a, b );
			}
			default: fail( ErrorCode::TypeMismatch, "a formula is used where a real expression is expected" );
			}
		} );
	}

private:
	const Declaration &decl( const SurfacePtr &s ) {
		const Declaration *d = scope_.find( s->name );
		if( !d ) fail( ErrorCode::UndeclaredIdentifier, "'" + s->name + "' is not declared" );
		return *d;
	}

	/** Re-throws build errors with the surface position, keeping the innermost one. */
	template< class F >
	Expr guarded( const SurfacePtr &s, F &&f ) {
		try {
			return f();
		} catch( const Error &e ) {
			if( !e.path().empty() && e.path().find( ':' ) != std::string::npos ) throw;
			throw Error( e.code(), e.message(), at( s->line, s->col ) );
		}
	}

	const SpecDoc &scope_;
	ConnectiveFlags flags_;
	const Env *env_;
};

} // namespace

bool surface_equal( const SurfacePtr &a, const SurfacePtr &b ) noexcept {
	if( a == b ) return true;
	if( !a || !b ) return false;
	if( a->kind != b->kind || a->kids.size() != b->kids.size() ) return false;
	switch( a->kind ) {
	case SurfaceKind::BoolLit: if( a->truth != b->truth ) return false; break;
	case SurfaceKind::Number: if( a->number != b->number ) return false; break;
	case SurfaceKind::VecLit: if( a->values != b->values ) return false; break;
	case SurfaceKind::Ident: case SurfaceKind::Call: if( a->name != b->name ) return false; break;
	case SurfaceKind::Index: if( a->index != b->index ) return false; break;
	case SurfaceKind::Nary: if( a->op != b->op ) return false; break;
	case SurfaceKind::Cmp: if( a->cmp != b->cmp ) return false; break;
	default: break;
	}
	for( std::size_t i = 0; i < a->kids.size(); ++i ) {
		if( !surface_equal( a->kids[ i ], b->kids[ i ] ) ) return false;
	}
	return true;
}

std::string print_surface( const SurfacePtr &e ) {
	std::ostringstream os;
	print( os, e );
	return os.str();
}

const Declaration *SpecDoc::find( const std::string &name ) const noexcept {
	for( const auto &d : declarations ) {
		if( d.name == name ) return &d;
	}
	return nullptr;
}

bool spec_equal( const SpecDoc &a, const SpecDoc &b ) noexcept {
	return a.declarations == b.declarations && surface_equal( a.goal, b.goal );
}

std::string print_spec( const SpecDoc &doc ) {
	std::ostringstream os;
	for( const auto &d : doc.declarations ) {
		switch( d.kind ) {
		case DeclKind::Vector: os << "vector " << d.name << " : " << d.n << ";\n"; break;
		case DeclKind::Scalar: os << "scalar " << d.name << ";\n"; break;
		case DeclKind::Network: os << "network " << d.name << " : " << d.m << " -> " << d.n << ";\n"; break;
		case DeclKind::Function: os << "function " << d.name << " : " << d.l << ", " << d.m << " -> " << d.n << ";\n"; break;
		}
	}
	os << "goal " << print_surface( doc.goal ) << ";\n";
	return os.str();
}

SpecDoc parse_spec( const std::string &text ) { return Parser( text, nullptr ).spec(); }

SurfacePtr parse_surface_formula( const std::string &text ) { return Parser( text, nullptr ).formula_only(); }

Expr elaborate_formula( const SurfacePtr &formula, const SpecDoc &scope, const Logic &logic ) {
	Elaborator el( scope, logic, nullptr );
	Expr e = el.boolean( formula );
	validate_for_logic( e, logic );
	return e;
}

Expr elaborate( const SpecDoc &doc, const Logic &logic, const Env *env ) {
	if( !doc.goal ) fail( ErrorCode::ValidationError, "spec has no goal" );
	Elaborator el( doc, logic, env );
	Expr e = el.boolean( doc.goal );
	validate_for_logic( e, logic );
	return e;
}

Expr parse_formula( const std::string &text, const Logic &logic ) {
	static const SpecDoc empty;
	return elaborate_formula( parse_surface_formula( text ), empty, logic );
}

Hypersequent parse_hypersequent( const std::string &text, const Logic &logic ) {
	static const SpecDoc empty;
	Hypersequent h;
	for( auto &[ l, r ] : Parser( text, nullptr ).hypersequent() ) {
		Sequent s;
		for( const auto &f : l ) s.left.push_back( elaborate_formula( f, empty, logic ) );
		for( const auto &f : r ) s.right.push_back( elaborate_formula( f, empty, logic ) );
		h.components.push_back( std::move( s ) );
	}
	return h;
}

} // namespace dlc
