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

#ifndef DIRSPEC_COUNTEREXAMPLE_HPP
#define DIRSPEC_COUNTEREXAMPLE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dirspec/cyclotomic.hpp"
#include "dirspec/geometry.hpp"
#include "dirspec/polygon.hpp"
#include "dirspec/spectrum.hpp"

namespace dirspec {

/// Outcome of checking a line family against the three requirements: pairwise
/// non-parallel, not concurrent, and no vertical line meeting the union in a forbidden count.
template <CoordinateDomain F>
struct VerificationReport {
    bool pairwise_nonparallel = false;
    std::optional<std::pair<std::size_t, std::size_t>> parallel_pair;
    bool nonconcurrent = false;
    /// Homogeneous (X, Y, W) common point when the family is concurrent.
    std::optional<std::array<F, 3>> concurrency_point;
    CountSet stab_counts;
    CountSet forbidden;
    CountSet forbidden_hit;
    bool pass = false;
};

/// {n-1, n-2} (only the values that are positive).
CountSet default_forbidden(std::size_t n);

/// Checks a family of at least two distinct lines; all arithmetic is exact.
template <CoordinateDomain F>
VerificationReport<F> verify_family(std::span<const NonVerticalLine<F>> lines, const CountSet& forbidden) {
    if (lines.size() < 2) throw InvalidArgumentError("verification needs at least two lines");
    require_distinct(lines);
    VerificationReport<F> rep;
    rep.forbidden = forbidden;
    rep.pairwise_nonparallel = true;
    for (std::size_t i = 0; i < lines.size() && rep.pairwise_nonparallel; ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (parallel(lines[i], lines[j])) {
                rep.pairwise_nonparallel = false;
                rep.parallel_pair = std::pair{i, j};
                break;
            }
        }
    }
    rep.nonconcurrent = !concurrent_family(lines);
    if (!rep.nonconcurrent) rep.concurrency_point = homogeneous_intersection(lines[0], lines[1]);
    rep.stab_counts = stab_spectrum(lines);
    for (auto k : rep.stab_counts) {
        if (forbidden.contains(k)) rep.forbidden_hit.insert(k);
    }
    rep.pass = rep.pairwise_nonparallel && rep.nonconcurrent && rep.forbidden_hit.empty();
    return rep;
}

enum class Variant {
    plain,  ///< regular n-gon
    center  ///< regular (n-1)-gon plus its centre, for odd n
};

struct CounterexampleBundle {
    int n = 0;
    PolygonConfig config;
    Rational rotation_parameter;
    RationalRotation rotation;
    int field_order = 0;
    std::vector<NonVerticalLine<CycloElement>> lines;
    VerificationReport<CycloElement> certificate;
};

/// Dual family of a rotated polygon configuration with its certificate. No gate on n or
/// on the outcome; `construct` is the checked entry point.
CounterexampleBundle build_bundle(const PolygonConfig& cfg);

/// Family of n >= 7 lines avoiding stab counts n-1 and n-2.
/**
 * Plain variant: the regular n-gon. Centre variant (odd n only): the regular (n-1)-gon
 * with its centre. Throws InvalidArgumentError for n < 7, for the centre variant with
 * even n, and when the chosen configuration's spectrum would hit {n-1, n-2}
 * (e.g. hexagon plus centre at n = 7).
 */
CounterexampleBundle construct(int n, Variant variant = Variant::plain);

/// Re-derives the certificate from the exact lines. Throws InvalidArgumentError if the
/// bundle is malformed (line count differs from n) and DomainError on mixed fields.
VerificationReport<CycloElement> verify(const CounterexampleBundle& bundle,
                                        const std::optional<CountSet>& forbidden = std::nullopt);

/// Line coefficients (a, b) evaluated numerically.
std::vector<std::pair<double, double>> approx_lines(const CounterexampleBundle& bundle, int precision_bits = 53);

struct CrosscheckResult {
    CountSet counts;
    /// Clusters whose gap fell in [epsilon, 10 epsilon).
    std::size_t inconclusive = 0;

    bool conclusive() const noexcept { return inconclusive == 0; }
};

/// Floating-point stab spectrum: at every pairwise intersection abscissa, the number of
/// distinct heights clustered at `epsilon`, plus the generic count.
CrosscheckResult float_crosscheck(std::span<const std::pair<double, double>> lines, double epsilon);
CrosscheckResult float_crosscheck(const CounterexampleBundle& bundle, double epsilon, int precision_bits = 53);

} // namespace dirspec

#endif // DIRSPEC_COUNTEREXAMPLE_HPP
