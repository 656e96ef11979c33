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

#ifndef DLC_LOGIC_HPP
#define DLC_LOGIC_HPP

#include <string>

namespace dlc {

/** Which connectives have a semantics; one value per flag, fixed at construction. */
struct ConnectiveFlags {
	bool neg = true;
	bool impl = true;
	bool monoid = true;
	bool lattice = true;

	static constexpr ConnectiveFlags all_defined() noexcept { return { true, true, true, true }; }

	friend bool operator==( const ConnectiveFlags &, const ConnectiveFlags & ) = default;

	std::string to_string() const;
};

enum class LogicKind { Godel, Lukasiewicz, Yager, Product, DL2, STL, STLInfty };

/** One of the seven interpretations; `r` is Yager's exponent, `nu` STL's sharpness. */
class Logic {
public:
	static Logic godel() { return Logic( LogicKind::Godel, 0.0 ); }
	static Logic lukasiewicz() { return Logic( LogicKind::Lukasiewicz, 0.0 ); }
	static Logic yager( double r );
	static Logic product() { return Logic( LogicKind::Product, 0.0 ); }
	static Logic dl2() { return Logic( LogicKind::DL2, 0.0 ); }
	static Logic stl( double nu );
	static Logic stl_infty() { return Logic( LogicKind::STLInfty, 0.0 ); }

	/** Accepts the CLI names goedel|lukasiewicz|yager|product|dl2|stl|stl-inf. */
	static Logic parse( const std::string &name, double r = 2.0, double nu = 1.0 );

	LogicKind kind() const noexcept { return kind_; }
	double r() const noexcept { return param_; }
	double nu() const noexcept { return param_; }

	bool is_fuzzy() const noexcept;
	ConnectiveFlags flag_profile() const noexcept;
	std::string name() const;
	/** Name plus parameter, e.g. "yager(r=2)". */
	std::string label() const;

	friend bool operator==( const Logic &, const Logic & ) = default;

private:
	Logic( LogicKind kind, double param ) : kind_( kind ), param_( param ) {}

	LogicKind kind_;
	double param_;
};

} // namespace dlc

#endif
