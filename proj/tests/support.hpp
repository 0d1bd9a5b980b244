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

#ifndef DIRSPEC_TESTS_SUPPORT_HPP
#define DIRSPEC_TESTS_SUPPORT_HPP

#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"

#include "dirspec/geometry.hpp"
#include "dirspec/rational.hpp"
#include "dirspec/spectrum.hpp"

namespace doctest {
template <>
struct StringMaker<std::set<std::size_t>> {
    static String convert(const std::set<std::size_t>& s) {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (auto v : s) {
            os << (first ? "" : ", ") << v;
            first = false;
        }
        os << '}';
        return os.str().c_str();
    }
};
} // namespace doctest

namespace dirspec::testing {

inline Rational q(long p, long d = 1) { return Rational(p, d); }

inline Point<Rational> pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

inline std::vector<Point<Rational>> unit_square() {
    return {pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)};
}

// (x, y) -> (x + y/3, y): the unit square with pairwise distinct x.
inline std::vector<Point<Rational>> sheared_square() {
    return {pt(0, 0), pt(1, 0), pt(q(1, 3), 1), pt(q(4, 3), 1)};
}

inline std::vector<Point<Rational>> affine_hexagon() {
    return {pt(1, 0), pt(q(1, 2), q(1, 2)), pt(q(-1, 2), q(1, 2)), pt(-1, 0), pt(q(-1, 2), q(-1, 2)), pt(q(1, 2), q(-1, 2))};
}

template <class T>
std::span<const T> view(const std::vector<T>& v) {
    return std::span<const T>(v);
}

} // namespace dirspec::testing

#endif // DIRSPEC_TESTS_SUPPORT_HPP
