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

#ifndef DIRSPEC_IO_HPP
#define DIRSPEC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dirspec/counterexample.hpp"
#include "dirspec/geometry.hpp"
#include "dirspec/rational.hpp"
#include "dirspec/spectrum.hpp"

namespace dirspec {

// Points file: one `x y` record per line; lines file: one `a b` record per line, meaning
// y + a*x + b = 0. Rationals as in parse_rational; `#` starts a comment; blank lines are
// skipped. Errors carry the 1-based line number.

std::vector<Point<Rational>> read_points(std::istream& in);
std::vector<NonVerticalLine<Rational>> read_lines(std::istream& in);
std::vector<Point<Rational>> read_points_file(const std::string& path);
std::vector<NonVerticalLine<Rational>> read_lines_file(const std::string& path);

void write_points(std::ostream& out, const std::vector<Point<Rational>>& pts);
void write_lines(std::ostream& out, const std::vector<NonVerticalLine<Rational>>& lines);

enum class DualizeMode { points_to_lines, lines_to_points };

/// Reads records in one role and writes them in the other. Records are copied through
/// unchanged, so the output is the canonical form of the input.
void dualize(std::istream& in, std::ostream& out, DualizeMode mode);

/// `{2, 3, 4}`.
std::string format_counts(const CountSet& counts);

/// Writes the bundle as a JSON document (2-space indent). `precision_bits` controls the
/// decimal approximations stored for display.
std::string bundle_to_json(const CounterexampleBundle& bundle, int precision_bits = 128);

/// A bundle read back from JSON together with the certificate stored in the file.
struct LoadedBundle {
    CounterexampleBundle bundle;
    bool stored_pass = false;
    CountSet stored_stab_counts;
};

/// Parses a bundle; the exact line coefficients are authoritative. `bundle.certificate`
/// is left default and must be re-derived with `verify`. Throws ParseError.
LoadedBundle bundle_from_json(const std::string& text);

} // namespace dirspec

#endif // DIRSPEC_IO_HPP
