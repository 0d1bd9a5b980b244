/*
   Copyright 2026 The dirspec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DIRSPEC_ORACLE_HPP
#define DIRSPEC_ORACLE_HPP

#include <span>

#include "dirspec/geometry.hpp"
#include "dirspec/rational.hpp"
#include "dirspec/spectrum.hpp"

namespace dirspec::oracle {

// Brute-force reference implementations over the rationals. They share no grouping
// code with the spectrum engine and exist to cross-check it.

/// Largest input accepted by `spectrum`.
inline constexpr std::size_t kMaxOraclePoints = 10;

/// For every ordered pair (i, j), labels each point by the cover line through it parallel
/// to q_j - q_i, testing membership with a 3x3 determinant. Union of the label counts and |Q|.
/// Throws InvalidArgumentError above kMaxOraclePoints points.
CountSet spectrum(std::span<const Point<Rational>> pts);

/// Vertical stab counts computed directly: every pairwise intersection abscissa, the number
/// of distinct heights there, plus |F|.
CountSet stab_spectrum(std::span<const NonVerticalLine<Rational>> lines);

} // namespace dirspec::oracle

#endif // DIRSPEC_ORACLE_HPP
