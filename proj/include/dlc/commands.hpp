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

#ifndef DLC_COMMANDS_HPP
#define DLC_COMMANDS_HPP

#include <cstddef>
#include <string>

#include <json.hpp>

#include <dlc/eval.hpp>
#include <dlc/semantics.hpp>

namespace dlc::cmd {

inline constexpr const char *kReportSchema = "dlc-report/1";

/**
 * Every report carries "schema", "command", "logic", "config" and a boolean
 * "pass"; the rest is command specific. Errors are thrown, never reported.
 */

/** Elaborated goal as a dlc-ast/1 node plus the printed spec. Always passes. */
nlohmann::json compile( const RunConfig &config, const std::string &spec_text, const Env &env );

/** Value of the goal; with `wrt`, the gradient cross-check decides "pass". */
nlohmann::json eval( const RunConfig &config, const std::string &spec_text, const Env &env, const Bindings &inputs,
	const std::string &wrt );

/** Adversarial ascent; passes when the violation does not decrease over the first ten steps. */
nlohmann::json train_demo( const RunConfig &config, const std::string &spec_text, const Env &env,
	const Bindings &inputs, std::size_t steps, double learning_rate );

/** Law-matrix row of the configured logic, or every row when `all_logics`. */
nlohmann::json laws( const RunConfig &config, bool all_logics );

/** Shadow-lifting of the logic's conjunction for arities 2..max_n. Passes when it holds. */
nlohmann::json shadow( const RunConfig &config, std::size_t max_n );

/** STL conjunction towards min (logic stl) or Yager towards Goedel (logic yager) on `count` random inputs. */
nlohmann::json converge( const RunConfig &config, std::size_t count );

/** A dlc-proof/1 document; one with a "derived_rule" object is checked as a derivation with open leaves. */
nlohmann::json proof_check( const RunConfig &config, const nlohmann::json &doc );

nlohmann::json proof_search( const RunConfig &config, const std::string &goal, std::size_t depth );

/** With a non-empty `save_dir`, every discharged goal's proof is written there as a fixture. */
nlohmann::json weakcomp( const RunConfig &config, std::size_t depth, const std::string &save_dir );

/** Random derivations, then `rule_instances` local checks per rule when non-zero. */
nlohmann::json fuzz_soundness( const RunConfig &config, std::size_t trials, std::size_t depth,
	std::size_t rule_instances );

} // namespace dlc::cmd

#endif
