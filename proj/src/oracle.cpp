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

#include "dirspec/oracle.hpp"

#include <set>
#include <vector>

namespace dirspec::oracle {

namespace {

// det [[x1 y1 1] [x2 y2 1] [x3 y3 1]]
Rational det3(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2, const Rational& x3,
              const Rational& y3) {
    return x1 * (y2 - y3) - y1 * (x2 - x3) + (x2 * y3 - x3 * y2);
}

} // namespace

CountSet spectrum(std::span<const Point<Rational>> pts) {
    if (pts.size() > kMaxOraclePoints) throw InvalidArgumentError("oracle spectrum is capped at 10 points");
    if (pts.empty()) throw DegenerateInputError("spectrum of an empty point set");
    CountSet counts{pts.size()};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            const Rational dx = pts[j].x - pts[i].x;
            const Rational dy = pts[j].y - pts[i].y;
            std::vector<int> label(pts.size(), -1);
            int next = 0;
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (label[k] >= 0) continue;
                label[k] = next;
                const Rational ex = pts[k].x + dx;
                const Rational ey = pts[k].y + dy;
                for (std::size_t l = k + 1; l < pts.size(); ++l) {
                    if (label[l] < 0 && det3(pts[k].x, pts[k].y, ex, ey, pts[l].x, pts[l].y).sign() == 0) {
                        label[l] = next;
                    }
                }
                ++next;
            }
            counts.insert(static_cast<std::size_t>(next));
        }
    }
    return counts;
}

CountSet stab_spectrum(std::span<const NonVerticalLine<Rational>> lines) {
    if (lines.empty()) throw DegenerateInputError("stab spectrum of an empty family");
    CountSet counts{lines.size()};
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const Rational da = lines[i].a - lines[j].a;
            if (da.sign() == 0) continue;
            const Rational x = (lines[j].b - lines[i].b) / da;
            std::set<Rational> heights;
            for (const auto& l : lines) heights.insert(-(l.a * x + l.b));
            counts.insert(heights.size());
        }
    }
    return counts;
}

} // namespace dirspec::oracle
