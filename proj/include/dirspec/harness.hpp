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

#ifndef DIRSPEC_HARNESS_HPP
#define DIRSPEC_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "dirspec/geometry.hpp"
#include "dirspec/rational.hpp"

namespace dirspec {

/// Parameters of a seeded random run. Identical configs produce identical instances.
struct RandomConfig {
    std::uint64_t seed = 42;
    std::size_t count = 100;
    std::size_t min_size = 3;
    std::size_t size = 8;
    long coordinate_bound = 50;
};

/// Deterministic generator of bounded random rationals and point sets.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    /// p/q with |p| <= bound and 1 <= q <= bound.
    Rational rational(long bound);
    Point<Rational> point(long bound);
    /// `size` pairwise distinct points.
    std::vector<Point<Rational>> point_set(std::size_t size, long bound);
    /// Invertible map with entries bounded like `rational`.
    AffineMap<Rational> affine_map(long bound);

private:
    std::mt19937_64 engine_;
};

struct CheckReport {
    std::string name;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
    /// One line per failing instance.
    std::vector<std::string> failures;
    /// Free-form lines (rates, notable instances).
    std::vector<std::string> notes;

    bool ok() const noexcept { return fail == 0; }
    /// `RESULT pass=<int> fail=<int> skip=<int>`
    std::string summary_line() const;
    void write(std::ostream& out) const;
};

/// incident(p, f(q)) <=> incident(q, f(p)) on `count` random pairs plus count/10 pairs forced
/// to be incident.
CheckReport duality_check(const RandomConfig& cfg);

/// max(I(Q) \ {n}) >= floor((n+1)/2) on `count` random non-collinear sets with sizes
/// cycling over [min_size, size]. Collinear draws are skipped and do not count.
CheckReport pinchasi_check(const RandomConfig& cfg);

/// spectrum(m(Q)) == spectrum(Q) for random sets and invertible affine maps.
CheckReport affine_check(const RandomConfig& cfg);

/// Spectrum engine against the brute-force oracle. Sizes are capped at 10.
CheckReport oracle_check(const RandomConfig& cfg);

/// spectrum(Q) against the stab spectrum of the dual family. Alternate instances have
/// distinct x (plain equality) and a forced repeated x (equality after adjoining the
/// vertical class count).
CheckReport transport_check(const RandomConfig& cfg);

} // namespace dirspec

#endif // DIRSPEC_HARNESS_HPP
