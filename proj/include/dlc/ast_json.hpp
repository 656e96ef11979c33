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

#ifndef DLC_AST_JSON_HPP
#define DLC_AST_JSON_HPP

#include <string>

#include <json.hpp>

#include <dlc/ast.hpp>

namespace dlc {

inline constexpr const char *kAstSchema = "dlc-ast/1";

nlohmann::json flags_to_json( const ConnectiveFlags &f );
ConnectiveFlags flags_from_json( const nlohmann::json &j );

/** Node object {"kind", "tag", payload..., "children"}; no version wrapper. */
nlohmann::json expr_to_json( const Expr &e );
/** Rebuilds through build_node; any rejection or tag disagreement is a ValidationError. */
Expr expr_from_json( const nlohmann::json &j );

/** Versioned document {"version": "dlc-ast/1", "expr": node}. */
std::string expr_to_text( const Expr &e );
/** ParseError (with byte offset) on malformed JSON, ValidationError on ill-typed content. */
Expr expr_from_text( const std::string &text );

} // namespace dlc

#endif
