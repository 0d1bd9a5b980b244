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

#include "dirspec/polygon.hpp"

#include <numeric>
#include <sstream>

namespace dirspec {

PolygonConfig::PolygonConfig(int vertices, bool center) : n(vertices), with_center(center) {
    if (n < 3) throw InvalidArgumentError("polygon needs at least 3 vertices");
}

std::size_t polygon_direction_count(const PolygonConfig& cfg, int d) {
    const int n = cfg.n;
    if (n < 3) throw InvalidArgumentError("polygon needs at least 3 vertices");
    if (d < 0 || d >= n) throw InvalidArgumentError("chord class out of range");
    std::size_t pairs = 0;
    std::size_t singletons = 0;
    for (int i = 0; i < n; ++i) {
        if (chord_class(n, i, i) == d) ++singletons;
        for (int j = i + 1; j < n; ++j) {
            if (chord_class(n, i, j) == d) ++pairs;
        }
    }
    // A vertex on no chord of class d sits alone on its (tangent) line.
    std::size_t lines = pairs + singletons;
    if (cfg.with_center) {
        bool on_diameter = false;
        if (n % 2 == 0) {
            // The centre lies on chord {i, i + n/2}, of class 2i + n/2.
            for (int i = 0; i < n; ++i) {
                if (chord_class(n, 2 * i, n / 2) == d) on_diameter = true;
            }
        }
        if (!on_diameter) ++lines;
    }
    return lines;
}

CountSet polygon_spectrum_enumerated(const PolygonConfig& cfg) {
    CountSet out;
    for (int d = 0; d < cfg.n; ++d) out.insert(polygon_direction_count(cfg, d));
    // For odd n a centre-vertex line is parallel to no chord and holds exactly two points.
    if (cfg.with_center && cfg.n % 2 == 1) out.insert(static_cast<std::size_t>(cfg.n));
    out.insert(cfg.point_count());
    return out;
}

CountSet polygon_spectrum_closed_form(const PolygonConfig& cfg) {
    const std::size_t n = static_cast<std::size_t>(cfg.n);
    if (!cfg.with_center) {
        const std::size_t k = n / 2;
        if (n % 2 == 0) return {k, k + 1, 2 * k};
        return {k + 1, 2 * k + 1};
    }
    if (n % 4 == 2) {
        const std::size_t k = (n - 2) / 4;
        return {2 * k + 1, 2 * k + 3, 4 * k + 3};
    }
    if (n % 4 == 0) {
        const std::size_t k = n / 4;
        return {2 * k + 1, 4 * k + 1};
    }
    throw InvalidArgumentError("no closed form for an odd polygon with its centre");
}

CountSet published_odd_formula(const PolygonConfig& cfg) {
    if (cfg.with_center || cfg.n % 2 == 0) throw InvalidArgumentError("published odd formula applies to odd n only");
    const std::size_t k = static_cast<std::size_t>(cfg.n) / 2;
    return {k, 2 * k + 1};
}

namespace {

std::string format_set(const CountSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto v : s) {
        os << (first ? "" : ", ") << v;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace

std::optional<std::string> odd_formula_discrepancy(const PolygonConfig& cfg) {
    if (cfg.with_center || cfg.n % 2 == 0) return std::nullopt;
    const int k = cfg.n / 2;
    std::ostringstream os;
    os << "note: for n = 2k+1 = " << cfg.n << " (k = " << k << ") the published formula {k, 2k+1} = "
       << format_set(published_odd_formula(cfg)) << " disagrees with enumeration; every chord class covers with k+1 = "
       << (k + 1) << " lines (k pairs plus one tangent vertex), giving " << format_set(polygon_spectrum_closed_form(cfg));
    return os.str();
}

RationalRotation::RationalRotation(Rational cos_part, Rational sin_part) : c(std::move(cos_part)), s(std::move(sin_part)) {
    if (c * c + s * s != Rational(1)) throw InvalidArgumentError("rotation must satisfy c^2 + s^2 = 1");
}

RationalRotation RationalRotation::from_parameter(const Rational& t) {
    const Rational t2 = t * t;
    const Rational denom = Rational(1) + t2;
    return RationalRotation((Rational(1) - t2) / denom, Rational(2) * t / denom);
}

Rational RotationParameters::next() {
    if (!current_) {
        current_ = Rational(0);
    } else if (is_zero(*current_)) {
        current_ = Rational(1);
    } else {
        // x -> 1 / (2 floor(x) - x + 1)
        const Rational& x = *current_;
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
        current_ = Rational(1) / (Rational(2) * Rational(fl) - x + Rational(1));
    }
    return *current_;
}

int instantiation_order(int n) { return std::lcm(4, n); }

std::vector<Point<CycloElement>> instantiate_polygon(const PolygonConfig& cfg, const RationalRotation& r) {
    if (cfg.n < 3) throw InvalidArgumentError("polygon needs at least 3 vertices");
    const int m = instantiation_order(cfg.n);
    const CycloElement imag = CycloElement::zeta_power(m, m / 4);
    const CycloElement rot = CycloElement::from_rational(m, r.c) + imag * r.s;
    const Rational half(1, 2);
    std::vector<Point<CycloElement>> pts;
    pts.reserve(cfg.point_count());
    for (int i = 0; i < cfg.n; ++i) {
        const CycloElement z = rot * CycloElement::zeta_power(m, static_cast<long>(m / cfg.n) * i);
        const CycloElement zc = z.conj();
        // x = (z + conj z) / 2, y = (z - conj z) / (2i) = -i (z - conj z) / 2
        CycloElement x = (z + zc) * half;
        CycloElement y = -(imag * (z - zc)) * half;
        pts.push_back({std::move(x), std::move(y)});
    }
    if (cfg.with_center) pts.push_back({CycloElement::zero(m), CycloElement::zero(m)});
    return pts;
}

RotationChoice choose_rotation(const PolygonConfig& cfg) {
    RotationParameters params;
    std::size_t rejected = 0;
    for (;;) {
        const Rational t = params.next();
        const RationalRotation rot = RationalRotation::from_parameter(t);
        const auto pts = instantiate_polygon(cfg, rot);
        if (vertical_class_count(std::span<const Point<CycloElement>>(pts)) == pts.size()) {
            return {t, rot, rejected};
        }
        ++rejected;
    }
}

} // namespace dirspec
