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

#ifndef DIRSPEC_GEOMETRY_HPP
#define DIRSPEC_GEOMETRY_HPP

#include <array>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "dirspec/cyclotomic.hpp"
#include "dirspec/errors.hpp"
#include "dirspec/rational.hpp"

namespace dirspec {

/// Exact scalar domain: ring operations plus an exact zero test. No division.
template <class F>
concept CoordinateDomain = std::copy_constructible<F> && requires(const F& a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { scalar_like(a, 1L) } -> std::convertible_to<F>;
};

static_assert(CoordinateDomain<Rational>);
static_assert(CoordinateDomain<CycloElement>);

/// Primal point (P, Q).
template <CoordinateDomain F>
struct Point {
    F x;
    F y;

    friend bool operator==(const Point&, const Point&) = default;
};

/// The non-vertical line { (x, y) : y + a*x + b = 0 }. Slope is -a.
template <CoordinateDomain F>
struct NonVerticalLine {
    F a;
    F b;

    friend bool operator==(const NonVerticalLine&, const NonVerticalLine&) = default;
};

/// dx*dy' - dy*dx'.
template <CoordinateDomain F>
F cross(const F& ax, const F& ay, const F& bx, const F& by) {
    return ax * by - ay * bx;
}

/// A line direction, i.e. a nonzero vector up to scaling (including sign).
/**
 * Two directions are equal when their cross product vanishes; see `same_direction`.
 * For rationals `make_direction` additionally produces the canonical integer form
 * (gcd 1, dx > 0 or (dx, dy) = (0, 1)) so structural equality agrees with the predicate.
 */
template <CoordinateDomain F>
class Direction {
public:
    Direction(F dx, F dy) : dx_(std::move(dx)), dy_(std::move(dy)) {
        if (is_zero(dx_) && is_zero(dy_)) {
            throw InvalidArgumentError("zero direction");
        }
    }

    const F& dx() const noexcept { return dx_; }
    const F& dy() const noexcept { return dy_; }
    bool is_vertical() const { return is_zero(dx_); }

    friend bool operator==(const Direction&, const Direction&) = default;

private:
    F dx_;
    F dy_;
};

template <CoordinateDomain F>
bool same_direction(const Direction<F>& d1, const Direction<F>& d2) {
    return is_zero(cross(d1.dx(), d1.dy(), d2.dx(), d2.dy()));
}

/// Direction of the vector q - p. Throws InvalidArgumentError if p == q.
template <CoordinateDomain F>
Direction<F> direction_between(const Point<F>& p, const Point<F>& q) {
    return Direction<F>(q.x - p.x, q.y - p.y);
}

/// Canonical rational direction: integer components with gcd 1, dx > 0, or (0, 1) when vertical.
inline Direction<Rational> make_direction(const Rational& dx, const Rational& dy) {
    if (is_zero(dx) && is_zero(dy)) throw InvalidArgumentError("zero direction");
    const mpz_class l = lcm(dx.denominator(), dy.denominator());
    mpz_class ix = dx.numerator() * (l / dx.denominator());
    mpz_class iy = dy.numerator() * (l / dy.denominator());
    const mpz_class g = gcd(ix, iy);
    ix /= g;
    iy /= g;
    if (ix < 0 || (ix == 0 && iy < 0)) {
        ix = -ix;
        iy = -iy;
    }
    return Direction<Rational>(Rational(ix), Rational(iy));
}

/// Invertible affine map p -> m*p + t, m = [[m00, m01], [m10, m11]].
template <CoordinateDomain F>
class AffineMap {
public:
    AffineMap(std::array<F, 4> m, std::array<F, 2> t) : m_(std::move(m)), t_(std::move(t)) {
        if (is_zero(determinant())) throw InvalidArgumentError("singular affine map");
    }

    F determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    Point<F> operator()(const Point<F>& p) const {
        return {m_[0] * p.x + m_[1] * p.y + t_[0], m_[2] * p.x + m_[3] * p.y + t_[1]};
    }

    const std::array<F, 4>& matrix() const noexcept { return m_; }
    const std::array<F, 2>& translation() const noexcept { return t_; }

private:
    std::array<F, 4> m_;
    std::array<F, 2> t_;
};

// --- duality f(A, B) = { y + A x + B = 0 } ---

template <CoordinateDomain F>
NonVerticalLine<F> dual_point_to_line(const Point<F>& p) {
    return {p.x, p.y};
}

template <CoordinateDomain F>
Point<F> dual_line_to_point(const NonVerticalLine<F>& l) {
    return {l.a, l.b};
}

template <CoordinateDomain F>
std::vector<NonVerticalLine<F>> dual_points_to_lines(std::span<const Point<F>> pts) {
    std::vector<NonVerticalLine<F>> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(dual_point_to_line(p));
    return out;
}

template <CoordinateDomain F>
std::vector<Point<F>> dual_lines_to_points(std::span<const NonVerticalLine<F>> lines) {
    std::vector<Point<F>> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(dual_line_to_point(l));
    return out;
}

// --- predicates ---

/// p.y + l.a * p.x + l.b == 0.
template <CoordinateDomain F>
bool incident(const Point<F>& p, const NonVerticalLine<F>& l) {
    return is_zero(p.y + l.a * p.x + l.b);
}

template <CoordinateDomain F>
bool parallel(const NonVerticalLine<F>& l1, const NonVerticalLine<F>& l2) {
    return l1.a == l2.a;
}

template <CoordinateDomain F>
bool collinear(const Point<F>& p, const Point<F>& q, const Point<F>& r) {
    return is_zero(cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y));
}

/// Throws DegenerateInputError if two points coincide.
template <CoordinateDomain F>
void require_distinct(std::span<const Point<F>> pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) {
                throw DegenerateInputError("duplicate point at indices " + std::to_string(i) + " and " +
                                           std::to_string(j));
            }
        }
    }
}

/// Throws DegenerateInputError if two lines coincide.
template <CoordinateDomain F>
void require_distinct(std::span<const NonVerticalLine<F>> lines) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i] == lines[j]) {
                throw DegenerateInputError("duplicate line at indices " + std::to_string(i) + " and " +
                                           std::to_string(j));
            }
        }
    }
}

/// True when all points lie on one line (vacuously for fewer than three).
template <CoordinateDomain F>
bool all_collinear(std::span<const Point<F>> pts) {
    if (pts.size() < 3) return true;
    // First point distinct from pts[0] fixes the line.
    std::size_t anchor = 1;
    while (anchor < pts.size() && pts[anchor] == pts[0]) ++anchor;
    for (std::size_t k = anchor + 1; k < pts.size(); ++k) {
        if (!collinear(pts[0], pts[anchor], pts[k])) return false;
    }
    return true;
}

/// Whether a single point lies on every line of the family.
/**
 * Decided through duality: non-parallel lines share a point exactly when their dual
 * points are collinear. Two distinct parallel lines never meet, so any parallel pair
 * makes the family non-concurrent.
 */
template <CoordinateDomain F>
bool concurrent_family(std::span<const NonVerticalLine<F>> family) {
    if (family.size() < 2) throw InvalidArgumentError("concurrent_family needs at least two lines");
    require_distinct(family);
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (parallel(family[i], family[j])) return false;
        }
    }
    const auto duals = dual_lines_to_points(family);
    return all_collinear(std::span<const Point<F>>(duals));
}

/// Homogeneous intersection (X, Y, W) of two lines; the point is (X/W, Y/W) when W != 0.
template <CoordinateDomain F>
std::array<F, 3> homogeneous_intersection(const NonVerticalLine<F>& l1, const NonVerticalLine<F>& l2) {
    // (a1, 1, b1) x (a2, 1, b2)
    return {l2.b - l1.b, l1.b * l2.a - l1.a * l2.b, l1.a - l2.a};
}

template <CoordinateDomain F>
std::vector<Point<F>> affine_apply(const AffineMap<F>& m, std::span<const Point<F>> pts) {
    std::vector<Point<F>> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(m(p));
    return out;
}

} // namespace dirspec

#endif // DIRSPEC_GEOMETRY_HPP
