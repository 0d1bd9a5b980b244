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

#ifndef DIRSPEC_POLYGON_HPP
#define DIRSPEC_POLYGON_HPP

#include <optional>
#include <string>
#include <vector>

#include "dirspec/cyclotomic.hpp"
#include "dirspec/geometry.hpp"
#include "dirspec/rational.hpp"
#include "dirspec/spectrum.hpp"

namespace dirspec {

/// A regular n-gon, optionally together with the centre of its circumcircle.
struct PolygonConfig {
    int n = 3;
    bool with_center = false;

    PolygonConfig() = default;
    PolygonConfig(int vertices, bool center);

    std::size_t point_count() const noexcept { return static_cast<std::size_t>(n) + (with_center ? 1 : 0); }
    friend bool operator==(const PolygonConfig&, const PolygonConfig&) = default;
};

/// Chord {i, j} of the n-gon belongs to class (i + j) mod n; two chords are parallel iff
/// their classes agree.
inline int chord_class(int n, int i, int j) { return ((i + j) % n + n) % n; }

/// Number of lines parallel to chord class `d` needed to cover the configuration,
/// by residue arithmetic alone. Throws InvalidArgumentError unless 0 <= d < n.
std::size_t polygon_direction_count(const PolygonConfig& cfg, int d);

/// All cover counts of the configuration: chord classes, radius directions (odd n with
/// centre) and the generic count.
CountSet polygon_spectrum_enumerated(const PolygonConfig& cfg);

/// Closed forms for the regular polygon spectra:
///   n = 2k:               {k, k+1, 2k}
///   n = 2k+1:             {k+1, 2k+1}
///   n = 4k+2 with centre: {2k+1, 2k+3, 4k+3}
///   n = 4k with centre:   {2k+1, 4k+1}
/// Odd n with centre has no closed form; throws InvalidArgumentError.
CountSet polygon_spectrum_closed_form(const PolygonConfig& cfg);

/// The odd-n formula as published, {k, 2k+1}, for comparison only. Throws for other configs.
CountSet published_odd_formula(const PolygonConfig& cfg);

/// A note describing the disagreement with the published odd-n formula, or nullopt when
/// the configuration is not the odd-n case.
std::optional<std::string> odd_formula_discrepancy(const PolygonConfig& cfg);

/// Rotation by a rational point (c, s) of the unit circle.
struct RationalRotation {
    Rational c{1};
    Rational s{0};

    RationalRotation() = default;
    /// Throws InvalidArgumentError unless c^2 + s^2 == 1.
    RationalRotation(Rational cos_part, Rational sin_part);

    /// ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)).
    static RationalRotation from_parameter(const Rational& t);

    friend bool operator==(const RationalRotation&, const RationalRotation&) = default;
};

/// Calkin-Wilf enumeration of the nonnegative rationals, preceded by 0:
/// 0, 1, 1/2, 2, 1/3, 3/2, 2/3, 3, ...
class RotationParameters {
public:
    Rational next();

private:
    std::optional<Rational> current_;
};

/// Cyclotomic order used to instantiate an n-gon: lcm(4, n), so that i = zeta^(m/4) is available.
int instantiation_order(int n);

/// Exact coordinates in Q(zeta_m), m = instantiation_order(n). Vertex i is r * zeta_n^i with
/// r = c + s*i; the centre, if present, is (0, 0) and comes last.
std::vector<Point<CycloElement>> instantiate_polygon(const PolygonConfig& cfg, const RationalRotation& r);

struct RotationChoice {
    Rational parameter;
    RationalRotation rotation;
    /// Candidates rejected before this one.
    std::size_t rejected = 0;
};

/// First rotation in RotationParameters order giving pairwise distinct x-coordinates.
RotationChoice choose_rotation(const PolygonConfig& cfg);

} // namespace dirspec

#endif // DIRSPEC_POLYGON_HPP
