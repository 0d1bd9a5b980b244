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

#include "dirspec/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace dirspec {

namespace {

using Record = std::pair<Rational, Rational>;

std::vector<Record> read_records(std::istream& in) {
    std::vector<Record> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            throw ParseError("expected 2 fields, found " + std::to_string(tokens.size()), lineno);
        }
        try {
            out.emplace_back(parse_rational(tokens[0]), parse_rational(tokens[1]));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

} // namespace

std::vector<Point<Rational>> read_points(std::istream& in) {
    std::vector<Point<Rational>> out;
    for (auto& [x, y] : read_records(in)) out.push_back({std::move(x), std::move(y)});
    return out;
}

std::vector<NonVerticalLine<Rational>> read_lines(std::istream& in) {
    std::vector<NonVerticalLine<Rational>> out;
    for (auto& [a, b] : read_records(in)) out.push_back({std::move(a), std::move(b)});
    return out;
}

std::vector<Point<Rational>> read_points_file(const std::string& path) {
    auto in = open_input(path);
    return read_points(in);
}

std::vector<NonVerticalLine<Rational>> read_lines_file(const std::string& path) {
    auto in = open_input(path);
    return read_lines(in);
}

void write_points(std::ostream& out, const std::vector<Point<Rational>>& pts) {
    for (const auto& p : pts) out << p.x << ' ' << p.y << '\n';
}

void write_lines(std::ostream& out, const std::vector<NonVerticalLine<Rational>>& lines) {
    for (const auto& l : lines) out << l.a << ' ' << l.b << '\n';
}

void dualize(std::istream& in, std::ostream& out, DualizeMode mode) {
    if (mode == DualizeMode::points_to_lines) {
        const auto pts = read_points(in);
        write_lines(out, dual_points_to_lines(std::span<const Point<Rational>>(pts)));
    } else {
        const auto lines = read_lines(in);
        write_points(out, dual_lines_to_points(std::span<const NonVerticalLine<Rational>>(lines)));
    }
}

std::string format_counts(const CountSet& counts) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto k : counts) {
        os << (first ? "" : ", ") << k;
        first = false;
    }
    os << '}';
    return os.str();
}

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kFormat = "dirspec.counterexample.v1";

json coefficients_json(const CycloElement& e) {
    json arr = json::array();
    for (const auto& c : e.coefficients()) arr.push_back(c.to_string());
    return arr;
}

CycloElement element_from_json(const json& j, int order) {
    if (!j.is_array()) throw ParseError("coefficient vector must be an array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
    try {
        return CycloElement::from_coefficients(order, coeffs);
    } catch (const InvalidArgumentError& e) {
        throw ParseError(e.what());
    }
}

json count_json(const CountSet& s) { return json(std::vector<std::size_t>(s.begin(), s.end())); }

CountSet count_set(const json& j) {
    CountSet out;
    for (const auto& v : j) out.insert(v.get<std::size_t>());
    return out;
}

} // namespace

std::string bundle_to_json(const CounterexampleBundle& b, int precision_bits) {
    json doc;
    doc["format"] = kFormat;
    doc["n"] = b.n;
    doc["config"] = {{"vertices", b.config.n}, {"with_center", b.config.with_center}};
    doc["rotation"] = {{"parameter", b.rotation_parameter.to_string()},
                       {"c", b.rotation.c.to_string()},
                       {"s", b.rotation.s.to_string()}};
    doc["field_order"] = b.field_order;
    json lines = json::array();
    json approx_arr = json::array();
    for (const auto& l : b.lines) {
        lines.push_back({{"a", coefficients_json(l.a)}, {"b", coefficients_json(l.b)}});
        approx_arr.push_back({{"a", approx_decimal(l.a, precision_bits, 20).first},
                              {"b", approx_decimal(l.b, precision_bits, 20).first}});
    }
    doc["lines"] = std::move(lines);
    doc["approx_lines"] = std::move(approx_arr);
    const auto& cert = b.certificate;
    json c;
    c["pairwise_nonparallel"] = cert.pairwise_nonparallel;
    c["parallel_pair"] = cert.parallel_pair ? json::array({cert.parallel_pair->first, cert.parallel_pair->second})
                                            : json(nullptr);
    c["nonconcurrent"] = cert.nonconcurrent;
    c["stab_counts"] = count_json(cert.stab_counts);
    c["forbidden"] = count_json(cert.forbidden);
    c["forbidden_hit"] = count_json(cert.forbidden_hit);
    c["verdict"] = cert.pass ? "pass" : "fail";
    doc["certificate"] = std::move(c);
    return doc.dump(2) + "\n";
}

LoadedBundle bundle_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (doc.value("format", std::string()) != kFormat) throw ParseError("unknown bundle format");
        LoadedBundle out;
        auto& b = out.bundle;
        b.n = doc.at("n").get<int>();
        const auto& cfg = doc.at("config");
        try {
            b.config = PolygonConfig(cfg.at("vertices").get<int>(), cfg.at("with_center").get<bool>());
            const auto& rot = doc.at("rotation");
            b.rotation_parameter = parse_rational(rot.at("parameter").get<std::string>());
            b.rotation = RationalRotation(parse_rational(rot.at("c").get<std::string>()),
                                          parse_rational(rot.at("s").get<std::string>()));
        } catch (const InvalidArgumentError& e) {
            throw ParseError(e.what());
        }
        b.field_order = doc.at("field_order").get<int>();
        if (b.field_order < 1) throw ParseError("field_order must be positive");
        for (const auto& l : doc.at("lines")) {
            b.lines.push_back({element_from_json(l.at("a"), b.field_order), element_from_json(l.at("b"), b.field_order)});
        }
        if (doc.contains("certificate")) {
            const auto& c = doc.at("certificate");
            out.stored_pass = c.value("verdict", std::string()) == "pass";
            if (c.contains("stab_counts")) out.stored_stab_counts = count_set(c.at("stab_counts"));
        }
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed bundle: ") + e.what());
    }
}

} // namespace dirspec
