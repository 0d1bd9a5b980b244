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

#include "dirspec/harness.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "dirspec/io.hpp"
#include "dirspec/oracle.hpp"
#include "dirspec/spectrum.hpp"

namespace dirspec {

long InstanceGenerator::uniform(long lo, long hi) {
    // Modulo reduction keeps the sequence identical across standard libraries.
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Rational InstanceGenerator::rational(long bound) {
    const long p = uniform(-bound, bound);
    const long q = uniform(1, bound);
    return Rational(p, q);
}

Point<Rational> InstanceGenerator::point(long bound) { return {rational(bound), rational(bound)}; }

std::vector<Point<Rational>> InstanceGenerator::point_set(std::size_t size, long bound) {
    std::vector<Point<Rational>> pts;
    while (pts.size() < size) {
        Point<Rational> p = point(bound);
        bool dup = false;
        for (const auto& q : pts) dup = dup || q == p;
        if (!dup) pts.push_back(std::move(p));
    }
    return pts;
}

AffineMap<Rational> InstanceGenerator::affine_map(long bound) {
    for (;;) {
        std::array<Rational, 4> m{rational(bound), rational(bound), rational(bound), rational(bound)};
        if (is_zero(m[0] * m[3] - m[1] * m[2])) continue;
        return AffineMap<Rational>(m, {rational(bound), rational(bound)});
    }
}

std::string CheckReport::summary_line() const {
    std::ostringstream os;
    os << "RESULT pass=" << pass << " fail=" << fail << " skip=" << skip;
    return os.str();
}

void CheckReport::write(std::ostream& out) const {
    out << "check " << name << '\n';
    for (const auto& n : notes) out << "  " << n << '\n';
    for (const auto& f : failures) out << "  FAIL " << f << '\n';
    out << summary_line() << '\n';
}

namespace {

std::string describe(const std::vector<Point<Rational>>& pts) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << '(' << pts[i].x << ',' << pts[i].y << ')';
    os << ']';
    return os.str();
}

std::size_t size_for(const RandomConfig& cfg, std::size_t trial) {
    const std::size_t lo = std::min(cfg.min_size, cfg.size);
    return lo + trial % (cfg.size - lo + 1);
}

void record(CheckReport& rep, bool ok, const std::string& what) {
    if (ok) {
        ++rep.pass;
    } else {
        ++rep.fail;
        rep.failures.push_back(what);
    }
}

} // namespace

CheckReport duality_check(const RandomConfig& cfg) {
    CheckReport rep;
    rep.name = "duality";
    InstanceGenerator gen(cfg.seed);
    const long bound = cfg.coordinate_bound;
    std::size_t both_true = 0;
    for (std::size_t t = 0; t < cfg.count; ++t) {
        const auto p = gen.point(bound);
        const auto q = gen.point(bound);
        const bool lhs = incident(p, dual_point_to_line(q));
        const bool rhs = incident(q, dual_point_to_line(p));
        both_true += lhs && rhs;
        record(rep, lhs == rhs, describe({p, q}));
    }
    const std::size_t engineered = cfg.count / 10;
    for (std::size_t t = 0; t < engineered; ++t) {
        // q = (A, B) with B = -(Q + A P) puts p on f(q).
        const auto p = gen.point(bound);
        const Rational a = gen.rational(bound);
        const Point<Rational> q{a, -(p.y + a * p.x)};
        const bool lhs = incident(p, dual_point_to_line(q));
        const bool rhs = incident(q, dual_point_to_line(p));
        both_true += lhs && rhs;
        record(rep, lhs && rhs, "engineered " + describe({p, q}));
    }
    rep.notes.push_back("random pairs: " + std::to_string(cfg.count) + ", engineered incident pairs: " +
                        std::to_string(engineered) + ", incident both ways: " + std::to_string(both_true));
    return rep;
}

CheckReport pinchasi_check(const RandomConfig& cfg) {
    CheckReport rep;
    rep.name = "pinchasi";
    if (cfg.min_size < 3) throw InvalidArgumentError("pinchasi check needs sets of at least 3 points");
    InstanceGenerator gen(cfg.seed);
    std::size_t tight = 0;
    const std::size_t max_draws = 100 * cfg.count + 100;
    for (std::size_t t = 0, draws = 0; t < cfg.count && draws < max_draws; ++draws) {
        const std::size_t n = size_for(cfg, t);
        const auto pts = gen.point_set(n, cfg.coordinate_bound);
        const std::span<const Point<Rational>> view(pts);
        if (all_collinear(view)) {
            ++rep.skip;
            continue;
        }
        ++t;
        const auto counts = spectrum(view).counts;
        std::size_t best = 0;
        for (auto k : counts) {
            if (k != n) best = std::max(best, k);
        }
        const std::size_t bound = (n + 1) / 2;
        tight += best == bound;
        record(rep, best >= bound, describe(pts) + " spectrum " + format_counts(counts));
    }
    const std::size_t drawn = rep.pass + rep.fail + rep.skip;
    std::ostringstream rate;
    rate << "collinear draws skipped: " << rep.skip << " of " << drawn << "; tight instances: " << tight;
    rep.notes.push_back(rate.str());
    return rep;
}

CheckReport affine_check(const RandomConfig& cfg) {
    CheckReport rep;
    rep.name = "affine";
    InstanceGenerator gen(cfg.seed);
    for (std::size_t t = 0; t < cfg.count; ++t) {
        const auto pts = gen.point_set(size_for(cfg, t), cfg.coordinate_bound);
        const auto map = gen.affine_map(cfg.coordinate_bound);
        const auto image = affine_apply(map, std::span<const Point<Rational>>(pts));
        const auto before = spectrum(std::span<const Point<Rational>>(pts)).counts;
        const auto after = spectrum(std::span<const Point<Rational>>(image)).counts;
        record(rep, before == after, describe(pts) + " " + format_counts(before) + " vs " + format_counts(after));
    }
    return rep;
}

CheckReport oracle_check(const RandomConfig& cfg) {
    CheckReport rep;
    rep.name = "oracle";
    RandomConfig capped = cfg;
    capped.size = std::min(cfg.size, oracle::kMaxOraclePoints);
    capped.min_size = std::min(std::max<std::size_t>(cfg.min_size, 1), capped.size);
    InstanceGenerator gen(cfg.seed);
    for (std::size_t t = 0; t < capped.count; ++t) {
        const auto pts = gen.point_set(size_for(capped, t), capped.coordinate_bound);
        const std::span<const Point<Rational>> view(pts);
        const auto engine = spectrum(view).counts;
        const auto brute = oracle::spectrum(view);
        record(rep, engine == brute, describe(pts) + " engine " + format_counts(engine) + " oracle " + format_counts(brute));
    }
    return rep;
}

CheckReport transport_check(const RandomConfig& cfg) {
    CheckReport rep;
    rep.name = "transport";
    InstanceGenerator gen(cfg.seed);
    std::size_t repeated = 0;
    for (std::size_t t = 0; t < cfg.count; ++t) {
        const std::size_t n = std::max<std::size_t>(size_for(cfg, t), 2);
        std::vector<Point<Rational>> pts;
        const bool force_repeat = t % 2 == 1;
        for (;;) {
            pts = gen.point_set(n, cfg.coordinate_bound);
            if (force_repeat) {
                pts[1].x = pts[0].x;
                if (pts[1] == pts[0]) continue;
                bool dup = false;
                for (std::size_t k = 2; k < pts.size(); ++k) dup = dup || pts[k] == pts[1];
                if (dup) continue;
                break;
            }
            const std::span<const Point<Rational>> view(pts);
            if (vertical_class_count(view) == pts.size()) break;
        }
        const std::span<const Point<Rational>> view(pts);
        const auto counts = spectrum(view).counts;
        const auto lines = dual_points_to_lines(view);
        auto stab = stab_spectrum(std::span<const NonVerticalLine<Rational>>(lines));
        const std::size_t vc = vertical_class_count(view);
        if (vc < pts.size()) {
            ++repeated;
            stab.insert(vc);
        }
        record(rep, counts == stab, describe(pts) + " spectrum " + format_counts(counts) + " stab " + format_counts(stab));
    }
    rep.notes.push_back("instances with a repeated x-coordinate: " + std::to_string(repeated));
    return rep;
}

} // namespace dirspec
