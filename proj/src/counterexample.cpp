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

#include "dirspec/counterexample.hpp"

#include <algorithm>
#include <cmath>

namespace dirspec {

CountSet default_forbidden(std::size_t n) {
    CountSet out;
    if (n >= 2) out.insert(n - 1);
    if (n >= 3) out.insert(n - 2);
    return out;
}

CounterexampleBundle build_bundle(const PolygonConfig& cfg) {
    const RotationChoice choice = choose_rotation(cfg);
    const auto pts = instantiate_polygon(cfg, choice.rotation);
    CounterexampleBundle b;
    b.n = static_cast<int>(cfg.point_count());
    b.config = cfg;
    b.rotation_parameter = choice.parameter;
    b.rotation = choice.rotation;
    b.field_order = instantiation_order(cfg.n);
    b.lines = dual_points_to_lines(std::span<const Point<CycloElement>>(pts));
    b.certificate = verify(b);
    return b;
}

CounterexampleBundle construct(int n, Variant variant) {
    if (n < 7) throw InvalidArgumentError("construction requires n >= 7");
    PolygonConfig cfg;
    if (variant == Variant::plain) {
        cfg = PolygonConfig(n, false);
    } else {
        if (n % 2 == 0) throw InvalidArgumentError("centre variant requires odd n");
        cfg = PolygonConfig(n - 1, true);
    }
    const CountSet predicted = polygon_spectrum_enumerated(cfg);
    for (auto k : default_forbidden(static_cast<std::size_t>(n))) {
        if (predicted.contains(k)) {
            throw InvalidArgumentError("configuration with " + std::to_string(cfg.n) +
                                       (cfg.with_center ? " vertices and centre" : " vertices") +
                                       " has stab count " + std::to_string(k) + ", which is forbidden for n = " +
                                       std::to_string(n));
        }
    }
    return build_bundle(cfg);
}

VerificationReport<CycloElement> verify(const CounterexampleBundle& bundle, const std::optional<CountSet>& forbidden) {
    if (bundle.n < 2 || bundle.lines.size() != static_cast<std::size_t>(bundle.n)) {
        throw InvalidArgumentError("bundle declares n = " + std::to_string(bundle.n) + " but holds " +
                                   std::to_string(bundle.lines.size()) + " lines");
    }
    const int order = bundle.lines.front().a.order();
    for (const auto& l : bundle.lines) {
        if (l.a.order() != order || l.b.order() != order) throw DomainError("bundle mixes cyclotomic fields");
    }
    return verify_family(std::span<const NonVerticalLine<CycloElement>>(bundle.lines),
                         forbidden.value_or(default_forbidden(bundle.lines.size())));
}

std::vector<std::pair<double, double>> approx_lines(const CounterexampleBundle& bundle, int precision_bits) {
    std::vector<std::pair<double, double>> out;
    out.reserve(bundle.lines.size());
    for (const auto& l : bundle.lines) {
        out.emplace_back(approx(l.a, precision_bits).real(), approx(l.b, precision_bits).real());
    }
    return out;
}

CrosscheckResult float_crosscheck(std::span<const std::pair<double, double>> lines, double epsilon) {
    if (!(epsilon > 0)) throw InvalidArgumentError("epsilon must be positive");
    CrosscheckResult res;
    if (lines.empty()) return res;
    res.counts.insert(lines.size());
    std::vector<double> heights(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const double da = lines[i].first - lines[j].first;
            if (da == 0.0) continue;
            const double x = -(lines[i].second - lines[j].second) / da;
            for (std::size_t k = 0; k < lines.size(); ++k) {
                heights[k] = -(lines[k].first * x + lines[k].second);
            }
            std::sort(heights.begin(), heights.end());
            std::size_t clusters = 1;
            for (std::size_t k = 1; k < heights.size(); ++k) {
                const double gap = heights[k] - heights[k - 1];
                if (gap >= epsilon) ++clusters;
                if (gap >= epsilon && gap < 10 * epsilon) ++res.inconclusive;
            }
            res.counts.insert(clusters);
        }
    }
    return res;
}

CrosscheckResult float_crosscheck(const CounterexampleBundle& bundle, double epsilon, int precision_bits) {
    const auto lines = approx_lines(bundle, precision_bits);
    return float_crosscheck(std::span<const std::pair<double, double>>(lines), epsilon);
}

} // namespace dirspec
