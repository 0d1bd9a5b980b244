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

#include <vector>

#include "doctest.h"

#include "dirspec/polygon.hpp"
#include "dirspec/spectrum.hpp"
#include "support.hpp"

using namespace dirspec;
using dirspec::testing::q;
using dirspec::testing::view;

TEST_CASE("chord class counts") {
    for (int d = 0; d < 7; ++d) CHECK(polygon_direction_count(PolygonConfig(7, false), d) == 4);
    for (int k = 2; k <= 10; ++k) {
        const PolygonConfig cfg(2 * k, false);
        for (int d = 0; d < 2 * k; ++d) {
            CAPTURE(k);
            CAPTURE(d);
            CHECK(polygon_direction_count(cfg, d) == static_cast<std::size_t>(d % 2 ? k : k + 1));
        }
    }
    for (int d = 0; d < 6; ++d) CHECK(polygon_direction_count(PolygonConfig(6, true), d) == (d % 2 ? 3u : 5u));
    for (int d = 0; d < 8; ++d) CHECK(polygon_direction_count(PolygonConfig(8, true), d) == 5u);
    CHECK_THROWS_AS(polygon_direction_count(PolygonConfig(7, false), 7), InvalidArgumentError);
    CHECK_THROWS_AS(polygon_direction_count(PolygonConfig(7, false), -1), InvalidArgumentError);
    CHECK_THROWS_AS(PolygonConfig(2, false), InvalidArgumentError);
}

TEST_CASE("enumerated polygon spectra") {
    CHECK(polygon_spectrum_enumerated(PolygonConfig(4, false)) == CountSet{2, 3, 4});
    CHECK(polygon_spectrum_enumerated(PolygonConfig(6, true)) == CountSet{3, 5, 7});
    CHECK(polygon_spectrum_enumerated(PolygonConfig(8, true)) == CountSet{5, 9});
    CHECK(polygon_spectrum_enumerated(PolygonConfig(7, false)) == CountSet{4, 7});
    // Odd n with centre: chord classes give k+2, radius directions give n.
    CHECK(polygon_spectrum_enumerated(PolygonConfig(7, true)) == CountSet{5, 7, 8});
}

TEST_CASE("closed forms") {
    CHECK(polygon_spectrum_closed_form(PolygonConfig(10, false)) == CountSet{5, 6, 10});
    CHECK(polygon_spectrum_closed_form(PolygonConfig(9, false)) == CountSet{5, 9});
    CHECK(polygon_spectrum_closed_form(PolygonConfig(14, true)) == CountSet{7, 9, 15});
    CHECK_THROWS_AS(polygon_spectrum_closed_form(PolygonConfig(9, true)), InvalidArgumentError);

    for (int n = 3; n <= 51; ++n) {
        CAPTURE(n);
        CHECK(polygon_spectrum_closed_form(PolygonConfig(n, false)) == polygon_spectrum_enumerated(PolygonConfig(n, false)));
        if (n % 2 == 0) {
            CHECK(polygon_spectrum_closed_form(PolygonConfig(n, true)) == polygon_spectrum_enumerated(PolygonConfig(n, true)));
        }
    }
}

TEST_CASE("published odd formula disagrees with enumeration") {
    CHECK(published_odd_formula(PolygonConfig(7, false)) == CountSet{3, 7});
    const auto note = odd_formula_discrepancy(PolygonConfig(7, false));
    REQUIRE(note.has_value());
    CHECK(note->find("{3, 7}") != std::string::npos);
    CHECK(note->find("{4, 7}") != std::string::npos);
    CHECK_FALSE(odd_formula_discrepancy(PolygonConfig(8, false)).has_value());
    CHECK_FALSE(odd_formula_discrepancy(PolygonConfig(7, true)).has_value());
}

TEST_CASE("rotation parameters") {
    RotationParameters params;
    const std::vector<Rational> want{q(0), q(1), q(1, 2), q(2), q(1, 3), q(3, 2), q(2, 3), q(3), q(1, 4), q(4, 3)};
    for (const auto& w : want) CHECK(params.next() == w);

    CHECK(RationalRotation::from_parameter(q(1, 2)) == RationalRotation(q(3, 5), q(4, 5)));
    CHECK(RationalRotation::from_parameter(q(0)) == RationalRotation());
    CHECK_THROWS_AS(RationalRotation(q(1, 2), q(1, 2)), InvalidArgumentError);
}

TEST_CASE("instantiation") {
    const auto sq = instantiate_polygon(PolygonConfig(4, false), RationalRotation());
    REQUIRE(sq.size() == 4);
    const int m = instantiation_order(4);
    auto r = [m](long v) { return CycloElement::from_rational(m, Rational(v)); };
    CHECK(sq[0] == Point<CycloElement>{r(1), r(0)});
    CHECK(sq[1] == Point<CycloElement>{r(0), r(1)});
    CHECK(sq[2] == Point<CycloElement>{r(-1), r(0)});
    CHECK(sq[3] == Point<CycloElement>{r(0), r(-1)});

    const auto hex = instantiate_polygon(PolygonConfig(6, false), RationalRotation());
    const std::vector<Rational> xs{q(1), q(1, 2), q(-1, 2), q(-1), q(-1, 2), q(1, 2)};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(hex[i].x.is_rational());
        CHECK(hex[i].x.coefficient(0) == xs[i]);
    }

    const auto centred = instantiate_polygon(PolygonConfig(5, true), RationalRotation());
    CHECK(centred.size() == 6);
    CHECK(is_zero(centred.back().x));
    CHECK(is_zero(centred.back().y));

    // Coordinates match cos/sin numerically, and lie on the unit circle exactly.
    const RationalRotation rot(q(3, 5), q(4, 5));
    const auto pts = instantiate_polygon(PolygonConfig(7, false), rot);
    const double base = std::atan2(0.8, 0.6);
    for (int i = 0; i < 7; ++i) {
        const auto& p = pts[static_cast<std::size_t>(i)];
        CHECK(std::abs(approx(p.x, 128).real() - std::cos(base + 2 * M_PI * i / 7)) < 1e-12);
        CHECK(std::abs(approx(p.y, 128).real() - std::sin(base + 2 * M_PI * i / 7)) < 1e-12);
        CHECK(std::abs(approx(p.x, 128).imag()) < 1e-12);
        CHECK(p.x * p.x + p.y * p.y == CycloElement::one(p.x.order()));
    }
}

TEST_CASE("residue model matches exact parallelism") {
    for (int n = 3; n <= 24; ++n) {
        CAPTURE(n);
        const PolygonConfig cfg(n, false);
        const auto pts = instantiate_polygon(cfg, RationalRotation(q(3, 5), q(4, 5)));
        // One representative chord per class; pairwise non-parallel across classes, and every
        // chord parallel to the representative of its class.
        std::vector<Direction<CycloElement>> reps;
        for (int d = 0; d < n; ++d) {
            const int i = d == 0 ? 1 : 0;
            const int j = ((d - i) % n + n) % n;
            REQUIRE(i != j);
            reps.push_back(direction_between(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]));
        }
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) CHECK_FALSE(same_direction(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                CHECK(same_direction(direction_between(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]),
                                     reps[static_cast<std::size_t>(chord_class(n, i, j))]));
    }
}

TEST_CASE("no unexpected collinear triples") {
    for (int n = 3; n <= 12; ++n) {
        for (bool centre : {false, true}) {
            CAPTURE(n);
            CAPTURE(centre);
            const PolygonConfig cfg(n, centre);
            const auto pts = instantiate_polygon(cfg, choose_rotation(cfg).rotation);
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j)
                    for (std::size_t k = j + 1; k < pts.size(); ++k) {
                        const bool expected = centre && k == pts.size() - 1 && n % 2 == 0 &&
                                              j - i == static_cast<std::size_t>(n / 2);
                        CHECK(collinear(pts[i], pts[j], pts[k]) == expected);
                    }
        }
    }
}

TEST_CASE("rotation choice") {
    // cos(2 pi i / 7) = cos(2 pi (7 - i) / 7): identity is rejected, the quarter turn accepted.
    const PolygonConfig hept(7, false);
    const auto ident = instantiate_polygon(hept, RationalRotation());
    CHECK(vertical_class_count(view(ident)) < 7);
    const auto c7 = choose_rotation(hept);
    CHECK(c7.parameter == q(1));
    CHECK(c7.rejected == 1);

    // Square: identity and quarter turn both repeat x = 0; t = 1/2 gives (3/5, 4/5).
    const auto c4 = choose_rotation(PolygonConfig(4, false));
    CHECK(c4.rejected == 2);
    CHECK(c4.rotation == RationalRotation(q(3, 5), q(4, 5)));

    const auto c6 = choose_rotation(PolygonConfig(6, true));
    CHECK(c6.rejected >= 1);

    for (int n = 3; n <= 24; ++n) {
        for (bool centre : {false, true}) {
            const PolygonConfig cfg(n, centre);
            const auto pts = instantiate_polygon(cfg, choose_rotation(cfg).rotation);
            CHECK(vertical_class_count(view(pts)) == pts.size());
        }
    }
}

TEST_CASE("enumerated spectra equal exact geometric spectra") {
    for (int n = 3; n <= 24; ++n) {
        for (bool centre : {false, true}) {
            CAPTURE(n);
            CAPTURE(centre);
            const PolygonConfig cfg(n, centre);
            const auto pts = instantiate_polygon(cfg, choose_rotation(cfg).rotation);
            CHECK(spectrum(view(pts)).counts == polygon_spectrum_enumerated(cfg));
        }
    }
}
