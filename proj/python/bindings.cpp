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

#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dirspec/counterexample.hpp"
#include "dirspec/harness.hpp"
#include "dirspec/io.hpp"
#include "dirspec/oracle.hpp"
#include "dirspec/polygon.hpp"
#include "dirspec/spectrum.hpp"

namespace py = pybind11;
using namespace dirspec;

namespace {

// Rationals cross the boundary as strings in the `p/q` grammar.
using Pair = std::pair<std::string, std::string>;

std::vector<Point<Rational>> to_points(const std::vector<Pair>& in) {
    std::vector<Point<Rational>> out;
    out.reserve(in.size());
    for (const auto& [x, y] : in) out.push_back({parse_rational(x), parse_rational(y)});
    return out;
}

std::vector<NonVerticalLine<Rational>> to_lines(const std::vector<Pair>& in) {
    std::vector<NonVerticalLine<Rational>> out;
    out.reserve(in.size());
    for (const auto& [a, b] : in) out.push_back({parse_rational(a), parse_rational(b)});
    return out;
}

std::vector<std::size_t> as_list(const CountSet& s) { return {s.begin(), s.end()}; }

PolygonConfig polygon(int n, bool center) { return PolygonConfig(n, center); }

py::dict report_dict(const CheckReport& rep) {
    py::dict d;
    d["name"] = rep.name;
    d["pass"] = rep.pass;
    d["fail"] = rep.fail;
    d["skip"] = rep.skip;
    d["failures"] = rep.failures;
    d["summary"] = rep.summary_line();
    return d;
}

RandomConfig random_config(std::uint64_t seed, std::size_t count, std::size_t min_size, std::size_t size, long bound) {
    RandomConfig cfg;
    cfg.seed = seed;
    cfg.count = count;
    cfg.min_size = min_size;
    cfg.size = size;
    cfg.coordinate_bound = bound;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact direction-cover spectra, point-line duality and stab-count counterexamples";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InvalidArgumentError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("cyclotomic_poly", [](int n) {
        std::vector<long> out;
        for (const auto& c : cyclotomic_poly(n)) out.push_back(c.get_si());
        return out;
    }, py::arg("n"), "Coefficients of Phi_n, constant term first.");

    m.def("incident", [](const Pair& p, const Pair& l) {
        return incident(Point<Rational>{parse_rational(p.first), parse_rational(p.second)},
                        NonVerticalLine<Rational>{parse_rational(l.first), parse_rational(l.second)});
    }, py::arg("point"), py::arg("line"), "Whether point (x, y) lies on y + a x + b = 0.");

    m.def("spectrum", [](const std::vector<Pair>& pts) {
        const auto points = to_points(pts);
        const auto rep = spectrum(std::span<const Point<Rational>>(points));
        py::dict d;
        d["counts"] = as_list(rep.counts);
        d["vertical_count"] = rep.vertical_count;
        py::dict witnesses;
        for (const auto& [k, part] : rep.witnesses) {
            const auto c = make_direction(part.direction.dx(), part.direction.dy());
            py::dict w;
            w["direction"] = Pair{c.dx().to_string(), c.dy().to_string()};
            w["groups"] = part.groups;
            w["generic"] = part.generic;
            witnesses[py::int_(k)] = w;
        }
        d["witnesses"] = witnesses;
        return d;
    }, py::arg("points"));

    m.def("stab_spectrum", [](const std::vector<Pair>& lines) {
        const auto family = to_lines(lines);
        return as_list(stab_spectrum(std::span<const NonVerticalLine<Rational>>(family)));
    }, py::arg("lines"));

    m.def("oracle_spectrum", [](const std::vector<Pair>& pts) {
        const auto points = to_points(pts);
        return as_list(oracle::spectrum(std::span<const Point<Rational>>(points)));
    }, py::arg("points"), "Brute-force reference spectrum (at most 10 points).");

    m.def("polygon_direction_count", [](int n, int d, bool center) { return polygon_direction_count(polygon(n, center), d); },
          py::arg("n"), py::arg("d"), py::arg("center") = false);
    m.def("polygon_spectrum_enumerated", [](int n, bool center) { return as_list(polygon_spectrum_enumerated(polygon(n, center))); },
          py::arg("n"), py::arg("center") = false);
    m.def("polygon_spectrum_closed_form", [](int n, bool center) { return as_list(polygon_spectrum_closed_form(polygon(n, center))); },
          py::arg("n"), py::arg("center") = false);
    m.def("odd_formula_discrepancy", [](int n, bool center) { return odd_formula_discrepancy(polygon(n, center)); },
          py::arg("n"), py::arg("center") = false);

    m.def("construct", [](int n, const std::string& variant, int precision_bits) {
        const Variant v = variant == "center" ? Variant::center : Variant::plain;
        if (variant != "center" && variant != "plain") throw InvalidArgumentError("variant must be 'plain' or 'center'");
        return bundle_to_json(construct(n, v), precision_bits);
    }, py::arg("n"), py::arg("variant") = "plain", py::arg("precision_bits") = 128,
       "Bundle JSON for a certified family of n lines.");

    m.def("verify", [](const std::string& bundle_json) {
        const auto loaded = bundle_from_json(bundle_json);
        const auto rep = verify(loaded.bundle);
        py::dict d;
        d["pass"] = rep.pass;
        d["pairwise_nonparallel"] = rep.pairwise_nonparallel;
        d["nonconcurrent"] = rep.nonconcurrent;
        d["stab_counts"] = as_list(rep.stab_counts);
        d["forbidden_hit"] = as_list(rep.forbidden_hit);
        return d;
    }, py::arg("bundle_json"), "Re-derives the certificate from the exact coefficients.");

    m.def("float_crosscheck", [](int n, double epsilon) {
        const auto res = float_crosscheck(construct(n), epsilon);
        return py::make_tuple(as_list(res.counts), res.inconclusive);
    }, py::arg("n"), py::arg("epsilon") = 1e-6);

    m.def("duality_check", [](std::uint64_t seed, std::size_t count) { return report_dict(duality_check(random_config(seed, count, 3, 8, 50))); },
          py::arg("seed") = 42, py::arg("count") = 1000);
    m.def("pinchasi_check", [](std::uint64_t seed, std::size_t count, std::size_t min_size, std::size_t size, long bound) {
        return report_dict(pinchasi_check(random_config(seed, count, min_size, size, bound)));
    }, py::arg("seed") = 42, py::arg("count") = 100, py::arg("min_size") = 3, py::arg("size") = 12, py::arg("bound") = 50);
    m.def("oracle_check", [](std::uint64_t seed, std::size_t count, std::size_t size) {
        return report_dict(oracle_check(random_config(seed, count, 1, size, 50)));
    }, py::arg("seed") = 42, py::arg("count") = 100, py::arg("size") = 8);
}
