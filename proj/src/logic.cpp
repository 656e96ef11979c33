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
#include <dlc/logic.hpp>

#include <cmath>
#include <sstream>

namespace dlc {

std::string ConnectiveFlags::to_string() const {
	auto f = []( bool b ) { return b ? "def" : "undef"; };
	std::ostringstream os;
	os << "{neg:" << f( neg ) << ",impl:" << f( impl ) << ",monoid:" << f( monoid )
	   << ",lattice:" << f( lattice ) << "}";
	return os.str();
}

Logic Logic::yager( double r ) {
	if( !( r > 0.0 ) || !std::isfinite( r ) ) {
		fail( ErrorCode::Usage, "Yager exponent r must be a finite real > 0" );
	}
	return Logic( LogicKind::Yager, r );
}

Logic Logic::stl( double nu ) {
	if( !( nu > 0.0 ) || !std::isfinite( nu ) ) {
		fail( ErrorCode::Usage, "STL sharpness nu must be a finite real > 0" );
	}
	return Logic( LogicKind::STL, nu );
}

Logic Logic::parse( const std::string &name, double r, double nu ) {
	if( name == "goedel" || name == "godel" ) return godel();
	if( name == "lukasiewicz" ) return lukasiewicz();
	if( name == "yager" ) return yager( r );
	if( name == "product" ) return product();
	if( name == "dl2" ) return dl2();
	if( name == "stl" ) return stl( nu );
	if( name == "stl-inf" ) return stl_infty();
	fail( ErrorCode::Usage, "unknown logic '" + name + "'" );
}

bool Logic::is_fuzzy() const noexcept {
	return kind_ == LogicKind::Godel || kind_ == LogicKind::Lukasiewicz ||
		kind_ == LogicKind::Yager || kind_ == LogicKind::Product;
}

ConnectiveFlags Logic::flag_profile() const noexcept {
	switch( kind_ ) {
	case LogicKind::DL2: return { false, true, true, true };
	case LogicKind::STL: return { true, false, false, true };
	default: return ConnectiveFlags::all_defined();
	}
}

std::string Logic::name() const {
	switch( kind_ ) {
	case LogicKind::Godel: return "goedel";
	case LogicKind::Lukasiewicz: return "lukasiewicz";
	case LogicKind::Yager: return "yager";
	case LogicKind::Product: return "product";
	case LogicKind::DL2: return "dl2";
	case LogicKind::STL: return "stl";
	case LogicKind::STLInfty: return "stl-inf";
	}
	return "?";
}

std::string Logic::label() const {
	std::ostringstream os;
	os << name();
	if( kind_ == LogicKind::Yager ) os << "(r=" << param_ << ")";
	if( kind_ == LogicKind::STL ) os << "(nu=" << param_ << ")";
	return os.str();
}

} // namespace dlc
