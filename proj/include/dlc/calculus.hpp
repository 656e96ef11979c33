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

#ifndef DLC_CALCULUS_HPP
#define DLC_CALCULUS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include <dlc/ast.hpp>
#include <dlc/errors.hpp>
#include <dlc/logic.hpp>
#include <dlc/semantics.hpp>

namespace dlc {

/** An ordered pair of formula lists, Γ ⊢ Δ. */
struct Sequent {
	std::vector< Expr > left, right;

	std::string to_string() const;
};

bool operator==( const Sequent &a, const Sequent &b ) noexcept;

/** A list of sequents read disjunctively. Goals have at least one component. */
struct Hypersequent {
	std::vector< Sequent > components;

	std::size_t size() const noexcept { return components.size(); }
	std::string to_string() const;
};

bool operator==( const Hypersequent &a, const Hypersequent &b ) noexcept;
std::size_t hypersequent_hash( const Hypersequent &h ) noexcept;

enum class RuleId {
	Init, Emp, BotL, TopR,
	EW, EC, EEx, Com, Split, Mix,
	WeakL, ContrL, LEx, REx,
	LAnd, RAnd, LOr, ROr, LImpl, RImpl, LImplExt, LNeg, LOdot, ROdot,
	Hyp   // open leaf, only valid when checking a derived rule
};

const char *rule_name( RuleId r ) noexcept;
RuleId rule_from_name( const std::string &name );
/** Rules with no premises: Init, Emp, BotL, TopR. */
bool is_axiom_rule( RuleId r ) noexcept;
bool is_structural_rule( RuleId r ) noexcept;

/**
 * Where a rule acts. `comp` is the active component of the conclusion, `pos`
 * the principal formula (or the first swapped / weakened / contracted item).
 * `count` sizes the block for EW, EC, WeakL and ContrL. `k1`/`k2` split
 * contexts: Com takes |Γ₁| and |Θ₁|, Split and Mix take |Γ₁| and |Δ₁|, DL2's
 * R⊙ takes |Γ₀| and |Δ₀|. Two-component rules (Com, Split) act on comp and
 * comp+1; EEx swaps comp and comp+1.
 *
 * Premise layout: a replaced principal formula keeps its position; a formula
 * that changes side goes to the end of the left or the front of the right;
 * a rule that turns one component into several puts them at comp, comp+1, ...
 */
struct RuleInstance {
	RuleId rule = RuleId::Init;
	std::size_t comp = 0;
	std::size_t pos = 0;
	std::size_t count = 1;
	std::size_t k1 = 0, k2 = 0;

	friend bool operator==( const RuleInstance &, const RuleInstance & ) = default;
};

/** One of the five logics with a hypersequent calculus. */
class Calculus {
public:
	/** Throws RejectedLogic for Yager and STL. */
	explicit Calculus( const Logic &logic );

	const Logic &logic() const noexcept { return logic_; }
	LogicKind kind() const noexcept { return logic_.kind(); }
	bool has( RuleId r ) const noexcept;
	const std::vector< RuleId > &rules() const noexcept { return rules_; }
	std::string name() const { return logic_.name(); }

private:
	Logic logic_;
	std::vector< RuleId > rules_;
};

struct ProofTree {
	Hypersequent conclusion;
	RuleInstance rule;
	std::vector< ProofTree > premises;

	std::size_t size() const noexcept;
	std::size_t height() const noexcept;
};

/** Outcome of a check; `path` is "$" for the root, "$/1/0" for premise 0 of premise 1. */
struct CheckResult {
	bool ok = true;
	ErrorCode code = ErrorCode::SchemaMismatch;
	std::string message;
	std::string path;

	static CheckResult success() { return {}; }
	static CheckResult failure( ErrorCode code, std::string message, std::string path = "$" );
};

/**
 * The premises a rule instance demands of `conclusion`, in schema order.
 * Throws SchemaMismatch when the conclusion does not fit, RuleNotInCalculus
 * when the rule is not a member. LImplExt is accepted here regardless of
 * membership so derived rules can be stated.
 */
std::vector< Hypersequent > expected_premises( const Calculus &calc, const RuleInstance &rule,
	const Hypersequent &conclusion );

CheckResult check_step( const Calculus &calc, const RuleInstance &rule, const Hypersequent &conclusion,
	const std::vector< Hypersequent > &premises );

/** Every node passes check_step; Hyp leaves are rejected. */
CheckResult check_proof( const Calculus &calc, const ProofTree &tree );

/**
 * Checks that `derivation` proves the conclusion of `rule` from its expected
 * premises: Hyp leaves must carry one of those premises, everything else uses
 * calculus rules.
 */
CheckResult check_derived_rule( const Calculus &calc, const RuleInstance &rule, const Hypersequent &conclusion,
	const ProofTree &derivation );

/** Slack `tol` on f64; STL-inf runs on XReal and compares exactly. */
bool sequent_holds( const Logic &logic, const Sequent &s, const Env &env, double tol = 1e-9 );
bool hypersequent_holds( const Logic &logic, const Hypersequent &h, const Env &env, double tol = 1e-9 );

/** Both sides of the sequent inequality as numbers, for reports. */
std::pair< double, double > sequent_sides( const Logic &logic, const Sequent &s, const Env &env );

/** Random formula shapes used by the generators. */
struct DerivationOptions {
	std::size_t formula_depth = 2;
	std::size_t max_context = 2;   // extra formulas per weakening
	std::size_t max_side = 2;      // extra components per EW
};

/**
 * Deterministic in `seed`; the result always passes check_proof. `depth` bounds
 * the nesting of randomly chosen rules; the EW and WeakL steps that align
 * premise contexts are not counted, so the tree height can exceed it. Depth 1
 * is a single 0-premise rule.
 */
ProofTree random_derivation( const Calculus &calc, std::uint64_t seed, std::size_t depth,
	const DerivationOptions &options = {} );

struct SoundnessViolation {
	std::uint64_t trial_seed = 0;
	std::string conclusion;
	std::string rule;
};

struct SoundnessReport {
	std::string logic;
	std::size_t trials = 0;
	std::size_t max_depth = 0;
	std::uint64_t seed = 0;
	double tol = 0.0;
	std::size_t total_nodes = 0;
	std::vector< std::size_t > rule_counts;   // indexed by RuleId
	std::vector< SoundnessViolation > violations;

	bool passed() const noexcept { return violations.empty(); }
	nlohmann::json to_json() const;
};

/** Trial t uses seed `seed + t` and depth 1 + t mod max_depth. */
SoundnessReport soundness_fuzz( const Calculus &calc, std::size_t trials, std::size_t max_depth, std::uint64_t seed,
	double tol = 1e-9 );

struct RuleSoundness {
	RuleId rule = RuleId::Init;
	std::size_t instances = 0;
	std::size_t premises_held = 0;   // non-vacuous instances
	std::size_t violations = 0;
	std::string witness;
};

/** For each member rule, random instances whose premises hold must have a conclusion that holds. */
std::vector< RuleSoundness > rule_local_soundness( const Calculus &calc, std::size_t instances, std::uint64_t seed,
	double tol = 1e-9 );

/** A random conclusion for `rule` together with the instance that fits it. */
std::pair< RuleInstance, Hypersequent > random_rule_instance( const Calculus &calc, RuleId rule, std::mt19937_64 &rng,
	const DerivationOptions &options = {} );

struct SearchStats {
	std::size_t nodes = 0;
	std::size_t memo_hits = 0;
	std::size_t depth_reached = 0;
	bool from_fixture = false;
};

/**
 * Iterative-deepening backward search up to `depth_budget` tree height.
 * Structural rules (EW, EC, EEx, Com, Split, Mix, WeakL, ContrL, LEx, REx)
 * may be stacked at most twice in a row on any branch. Bundled fixtures are
 * consulted first. Returns nullopt when the budget is exhausted.
 */
std::optional< ProofTree > prove_bounded( const Calculus &calc, const Hypersequent &goal, std::size_t depth_budget,
	SearchStats *stats = nullptr );

enum class GoalStatus { Fixture, Found, Failed, NotApplicable };
const char *goal_status_name( GoalStatus s ) noexcept;

struct CompletenessGoal {
	std::string axiom;       // e.g. "R2"
	std::string direction;   // "lhs<=rhs" or "rhs<=lhs"
	Hypersequent goal;
	GoalStatus status = GoalStatus::Failed;
	std::size_t proof_size = 0;
	std::string note;
};

struct CompletenessReport {
	std::string logic;
	std::size_t depth_budget = 0;
	std::vector< CompletenessGoal > goals;

	/** Every applicable goal discharged. */
	bool all_discharged() const noexcept;
	nlohmann::json to_json() const;
};

/**
 * R1-R9 over the distinct atoms x = (0 <= 1), y = (0 <= 2), z = (0 <= 3).
 * Equations give both directions, R7 only lhs <= rhs. Gödel and STL-inf read
 * the monoidal conjunction as the lattice one.
 */
std::vector< CompletenessGoal > weak_completeness_goals( const Calculus &calc );
CompletenessReport weak_completeness_suite( const Calculus &calc, std::size_t depth_budget = 12 );

// Serialization, schema "dlc-proof/1". Formulas are written as surface strings;
// the reader also accepts dlc-ast/1 node objects.
inline constexpr const char *kProofSchema = "dlc-proof/1";

nlohmann::json sequent_to_json( const Sequent &s );
nlohmann::json hypersequent_to_json( const Hypersequent &h );
Hypersequent hypersequent_from_json( const nlohmann::json &j, const Logic &logic );
nlohmann::json rule_to_json( const RuleInstance &r );
RuleInstance rule_from_json( const nlohmann::json &j );
nlohmann::json proof_to_json( const Calculus &calc, const ProofTree &tree );
/** Throws SchemaError for structural problems, ParseError for bad formulas. */
ProofTree proof_from_json( const nlohmann::json &j, const Logic &logic );
ProofTree proof_node_from_json( const nlohmann::json &j, const Logic &logic );

/** Parses "Γ ⊢ Δ | ..." written with "|-" and "|" separators and comma-separated formulas. */
Hypersequent parse_hypersequent( const std::string &text, const Logic &logic );

/** Proofs bundled into the library, keyed by conclusion; used by prove_bounded. */
std::optional< ProofTree > fixture_proof( const Calculus &calc, const Hypersequent &goal );
/** Registers an extra fixture, e.g. loaded from fixtures/proofs. The proof must check. */
void register_fixture( const Calculus &calc, ProofTree proof );

} // namespace dlc

#endif
