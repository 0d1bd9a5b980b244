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

#ifndef DIRSPEC_SPECTRUM_HPP
#define DIRSPEC_SPECTRUM_HPP

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "dirspec/geometry.hpp"

namespace dirspec {

using CountSet = std::set<std::size_t>;

/// The minimal cover of a point set by lines parallel to `direction`.
/// Each group lists indices into the input, ascending; groups are ordered by first index.
template <CoordinateDomain F>
struct LinePartition {
    Direction<F> direction;
    std::vector<std::vector<std::size_t>> groups;
    /// Set for the synthetic witness of the count |Q| (a direction parallel to no chord).
    bool generic = false;

    std::size_t line_count() const noexcept { return groups.size(); }
};

template <CoordinateDomain F>
struct SpectrumReport {
    CountSet counts;
    /// One witness per count; the first direction (in pair order) achieving it.
    std::map<std::size_t, LinePartition<F>> witnesses;
    std::size_t vertical_count = 0;
};

/// A parallelism class of chord directions together with the first pair (i < j) realizing it.
template <CoordinateDomain F>
struct DirectionClass {
    Direction<F> direction;
    std::pair<std::size_t, std::size_t> first_pair;
};

/// One representative per parallelism class of q_j - q_i, in order of the first pair (i, j)
/// in lexicographic order.
template <CoordinateDomain F>
std::vector<DirectionClass<F>> direction_classes(std::span<const Point<F>> pts) {
    if (pts.size() < 2) throw DegenerateInputError("need at least two points");
    require_distinct(pts);
    std::vector<DirectionClass<F>> classes;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Direction<F> d = direction_between(pts[i], pts[j]);
            bool known = false;
            for (const auto& c : classes) {
                if (same_direction(c.direction, d)) {
                    known = true;
                    break;
                }
            }
            if (!known) classes.push_back({std::move(d), {i, j}});
        }
    }
    return classes;
}

template <CoordinateDomain F>
std::vector<Direction<F>> pair_directions(std::span<const Point<F>> pts) {
    std::vector<Direction<F>> out;
    for (auto& c : direction_classes(pts)) out.push_back(std::move(c.direction));
    return out;
}

/// Groups points by p ~ q iff cross(q - p, d) == 0.
template <CoordinateDomain F>
LinePartition<F> lines_in_direction(std::span<const Point<F>> pts, const Direction<F>& d) {
    LinePartition<F> part{d, {}, false};
    for (std::size_t k = 0; k < pts.size(); ++k) {
        bool placed = false;
        for (auto& group : part.groups) {
            const auto& rep = pts[group.front()];
            if (is_zero(cross(pts[k].x - rep.x, pts[k].y - rep.y, d.dx(), d.dy()))) {
                group.push_back(k);
                placed = true;
                break;
            }
        }
        if (!placed) part.groups.push_back({k});
    }
    return part;
}

/// Number of distinct x-coordinates.
template <CoordinateDomain F>
std::size_t vertical_class_count(std::span<const Point<F>> pts) {
    std::vector<const F*> seen;
    for (const auto& p : pts) {
        bool found = false;
        for (const F* x : seen) {
            if (*x == p.x) {
                found = true;
                break;
            }
        }
        if (!found) seen.push_back(&p.x);
    }
    return seen.size();
}

namespace detail {

// Direction (1, k) for the least k >= 0 that is parallel to no class; one exists since
// there are finitely many classes.
template <CoordinateDomain F>
Direction<F> generic_direction(const F& like, std::span<const DirectionClass<F>> classes) {
    for (long k = 0;; ++k) {
        Direction<F> d(scalar_like(like, 1), scalar_like(like, k));
        bool critical = false;
        for (const auto& c : classes) {
            if (same_direction(c.direction, d)) {
                critical = true;
                break;
            }
        }
        if (!critical) return d;
    }
}

template <CoordinateDomain F>
LinePartition<F> singleton_partition(Direction<F> d, std::size_t size) {
    LinePartition<F> part{std::move(d), {}, true};
    for (std::size_t k = 0; k < size; ++k) part.groups.push_back({k});
    return part;
}

} // namespace detail

/// The direction-cover spectrum I(Q) with witnesses.
template <CoordinateDomain F>
SpectrumReport<F> spectrum(std::span<const Point<F>> pts) {
    if (pts.empty()) throw DegenerateInputError("spectrum of an empty point set");
    require_distinct(pts);
    SpectrumReport<F> report;
    report.vertical_count = vertical_class_count(pts);
    std::vector<DirectionClass<F>> classes;
    if (pts.size() >= 2) classes = direction_classes(pts);
    for (const auto& c : classes) {
        LinePartition<F> part = lines_in_direction(pts, c.direction);
        const std::size_t k = part.line_count();
        if (report.counts.insert(k).second) report.witnesses.emplace(k, std::move(part));
    }
    report.counts.insert(pts.size());
    report.witnesses.emplace(
        pts.size(), detail::singleton_partition(
                        detail::generic_direction(pts.front().x, std::span<const DirectionClass<F>>(classes)),
                        pts.size()));
    return report;
}

/// The set { |L ∩ ∪F| : L vertical } of a family of distinct non-vertical lines.
/**
 * Computed on the dual points: the vertical line x = A meets lines i and j at the same
 * point iff the dual points differ by a multiple of (1, -A). So every non-vertical chord
 * direction of the dual set is one critical abscissa, and every other abscissa sees |F|
 * distinct points.
 */
template <CoordinateDomain F>
CountSet stab_spectrum(std::span<const NonVerticalLine<F>> family) {
    if (family.empty()) throw DegenerateInputError("stab spectrum of an empty family");
    require_distinct(family);
    const auto duals = dual_lines_to_points(family);
    CountSet counts{family.size()};
    if (duals.size() < 2) return counts;
    const std::span<const Point<F>> view(duals);
    for (const auto& c : direction_classes(view)) {
        if (c.direction.is_vertical()) continue;
        counts.insert(lines_in_direction(view, c.direction).line_count());
    }
    return counts;
}

} // namespace dirspec

#endif // DIRSPEC_SPECTRUM_HPP
