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

#include <dlc/errors.hpp>

namespace dlc {

const char *error_code_name( ErrorCode code ) noexcept {
	switch( code ) {
	case ErrorCode::FlagViolation: return "FlagViolation";
	case ErrorCode::ArityMismatch: return "ArityMismatch";
	case ErrorCode::TypeMismatch: return "TypeMismatch";
	case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
	case ErrorCode::ParseError: return "ParseError";
	case ErrorCode::ValidationError: return "ValidationError";
	case ErrorCode::CarrierError: return "CarrierError";
	case ErrorCode::DomainError: return "DomainError";
	case ErrorCode::DivisionByZero: return "DivisionByZero";
	case ErrorCode::UndefinedConnective: return "UndefinedConnective";
	case ErrorCode::UnresolvedFunction: return "UnresolvedFunction";
	case ErrorCode::RangeError: return "RangeError";
	case ErrorCode::SchemaError: return "SchemaError";
	case ErrorCode::ArityError: return "ArityError";
	case ErrorCode::UndeclaredIdentifier: return "UndeclaredIdentifier";
	case ErrorCode::DuplicateDeclaration: return "DuplicateDeclaration";
	case ErrorCode::RejectedLogic: return "RejectedLogic";
	case ErrorCode::RuleNotInCalculus: return "RuleNotInCalculus";
	case ErrorCode::SchemaMismatch: return "SchemaMismatch";
	case ErrorCode::PremiseArityMismatch: return "PremiseArityMismatch";
	case ErrorCode::IoError: return "IoError";
	case ErrorCode::Usage: return "Usage";
	}
	return "Unknown";
}

Error::Error( ErrorCode code, const std::string &message, std::string path ) :
	std::runtime_error( std::string( error_code_name( code ) ) + ": " + message +
		( path.empty() ? std::string() : " at " + path ) ),
	code_( code ), message_( message ), path_( std::move( path ) ) {}

void fail( ErrorCode code, const std::string &message, std::string path ) {
	throw Error( code, message, std::move( path ) );
}

} // namespace dlc
