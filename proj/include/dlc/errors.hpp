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

#ifndef DLC_ERRORS_HPP
#define DLC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dlc {

enum class ErrorCode {
	FlagViolation,
	ArityMismatch,
	TypeMismatch,
	IndexOutOfRange,
	ParseError,
	ValidationError,
	CarrierError,
	DomainError,
	DivisionByZero,
	UndefinedConnective,
	UnresolvedFunction,
	RangeError,
	SchemaError,
	ArityError,
	UndeclaredIdentifier,
	DuplicateDeclaration,
	RejectedLogic,
	RuleNotInCalculus,
	SchemaMismatch,
	PremiseArityMismatch,
	IoError,
	Usage
};

const char *error_code_name( ErrorCode code ) noexcept;

/** Every failure raised by the library; `path` locates the offending node when known. */
class Error : public std::runtime_error {
public:
	Error( ErrorCode code, const std::string &message, std::string path = {} );

	ErrorCode code() const noexcept { return code_; }
	/** The message without the code prefix and location suffix of what(). */
	const std::string &message() const noexcept { return message_; }
	const std::string &path() const noexcept { return path_; }

private:
	ErrorCode code_;
	std::string message_;
	std::string path_;
};

[[noreturn]] void fail( ErrorCode code, const std::string &message, std::string path = {} );

} // namespace dlc

#endif
