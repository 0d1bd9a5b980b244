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

// dirspec command-line front end.
//
// Exit codes: 0 success, 1 verification or check failure, 2 parse/usage error,
// 3 degenerate input, 4 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dirspec/counterexample.hpp"
#include "dirspec/harness.hpp"
#include "dirspec/io.hpp"
#include "dirspec/polygon.hpp"
#include "dirspec/spectrum.hpp"

using namespace dirspec;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInternal = 4;

struct GlobalOptions {
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    bool json = false;
};

int precision_bits() {
    const char* env = std::getenv("DS_PRECISION_BITS");
    if (env == nullptr || *env == '\0') return 128;
    try {
        const int bits = std::stoi(env);
        if (bits < 53) throw InvalidArgumentError("DS_PRECISION_BITS must be at least 53");
        return bits;
    } catch (const std::logic_error&) {
        throw InvalidArgumentError(std::string("invalid DS_PRECISION_BITS '") + env + "'");
    }
}

json counts_json(const CountSet& s) { return json(std::vector<std::size_t>(s.begin(), s.end())); }

std::string direction_text(const Direction<Rational>& d) {
    const auto c = make_direction(d.dx(), d.dy());
    return "(" + c.dx().to_string() + ", " + c.dy().to_string() + ")";
}

int cmd_spectrum(const std::string& path, const GlobalOptions& g) {
    const auto pts = read_points_file(path);
    const auto rep = spectrum(std::span<const Point<Rational>>(pts));
    if (g.json) {
        json w = json::array();
        for (const auto& [k, part] : rep.witnesses) {
            const auto c = make_direction(part.direction.dx(), part.direction.dy());
            w.push_back({{"count", k},
                         {"generic", part.generic},
                         {"direction", {c.dx().to_string(), c.dy().to_string()}},
                         {"groups", part.groups}});
        }
        std::cout << json{{"counts", counts_json(rep.counts)}, {"vertical_count", rep.vertical_count}, {"witnesses", w}}.dump(2)
                  << '\n';
        return 0;
    }
    std::cout << "counts " << format_counts(rep.counts) << '\n';
    for (const auto& [k, part] : rep.witnesses) {
        std::cout << "  " << k << " lines: direction " << direction_text(part.direction)
                  << (part.generic ? " (generic)" : "") << ", groups";
        for (const auto& grp : part.groups) {
            std::cout << " {";
            for (std::size_t i = 0; i < grp.size(); ++i) std::cout << (i ? "," : "") << grp[i];
            std::cout << '}';
        }
        std::cout << '\n';
    }
    std::cout << "vertical_count " << rep.vertical_count << '\n';
    return 0;
}

int cmd_stab(const std::string& path, const GlobalOptions& g) {
    const auto lines = read_lines_file(path);
    const auto counts = stab_spectrum(std::span<const NonVerticalLine<Rational>>(lines));
    if (g.json) {
        std::cout << json{{"stab_counts", counts_json(counts)}}.dump(2) << '\n';
    } else {
        std::cout << "stab counts " << format_counts(counts) << '\n';
    }
    return 0;
}

int cmd_dualize(const std::string& path, const std::string& to, const std::string& out_path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    const DualizeMode mode = to == "points" ? DualizeMode::lines_to_points : DualizeMode::points_to_lines;
    if (out_path.empty()) {
        dualize(in, std::cout, mode);
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'");
        dualize(in, out, mode);
    }
    return 0;
}

int cmd_polygon(int n, bool center, const GlobalOptions& g) {
    const PolygonConfig cfg(n, center);
    const auto enumerated = polygon_spectrum_enumerated(cfg);
    std::optional<CountSet> closed;
    if (!(center && n % 2 == 1)) closed = polygon_spectrum_closed_form(cfg);
    const auto note = odd_formula_discrepancy(cfg);
    const auto choice = choose_rotation(cfg);
    const auto pts = instantiate_polygon(cfg, choice.rotation);
    const int bits = precision_bits();

    if (closed && *closed != enumerated) {
        std::cerr << "internal error: closed form " << format_counts(*closed) << " != enumerated "
                  << format_counts(enumerated) << '\n';
        return kExitInternal;
    }
    if (g.json) {
        json coords = json::array();
        for (const auto& p : pts) {
            coords.push_back({{"x", p.x.to_string()},
                              {"y", p.y.to_string()},
                              {"x_approx", approx_decimal(p.x, bits, 20).first},
                              {"y_approx", approx_decimal(p.y, bits, 20).first}});
        }
        json doc{{"n", n},
                 {"with_center", center},
                 {"enumerated", counts_json(enumerated)},
                 {"closed_form", closed ? counts_json(*closed) : json(nullptr)},
                 {"rotation", {{"parameter", choice.parameter.to_string()}, {"c", choice.rotation.c.to_string()}, {"s", choice.rotation.s.to_string()}}},
                 {"field_order", instantiation_order(n)},
                 {"points", coords}};
        if (note) doc["note"] = *note;
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    std::cout << "polygon n=" << n << (center ? " with centre" : "") << '\n';
    std::cout << "enumerated  " << format_counts(enumerated) << '\n';
    std::cout << "closed form " << (closed ? format_counts(*closed) : std::string("n/a (odd n with centre)")) << '\n';
    if (note) std::cout << *note << '\n';
    std::cout << "rotation t=" << choice.parameter << " (c, s) = (" << choice.rotation.c << ", " << choice.rotation.s
              << ")\n";
    std::cout << "coordinates in Q(zeta_" << instantiation_order(n) << "), z = zeta_" << instantiation_order(n) << '\n';
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::cout << "  q" << i << " x = " << pts[i].x.to_string() << "  ~ " << approx_decimal(pts[i].x, bits, 15).first
                  << '\n';
        std::cout << "     y = " << pts[i].y.to_string() << "  ~ " << approx_decimal(pts[i].y, bits, 15).first << '\n';
    }
    return 0;
}

void print_certificate(std::ostream& os, const VerificationReport<CycloElement>& c) {
    os << "pairwise non-parallel: " << (c.pairwise_nonparallel ? "yes" : "no");
    if (c.parallel_pair) os << " (lines " << c.parallel_pair->first << ", " << c.parallel_pair->second << ")";
    os << "\nnon-concurrent:        " << (c.nonconcurrent ? "yes" : "no") << '\n';
    os << "stab counts:           " << format_counts(c.stab_counts) << '\n';
    os << "forbidden:             " << format_counts(c.forbidden) << '\n';
    os << "forbidden hit:         " << format_counts(c.forbidden_hit) << '\n';
    os << "verdict:               " << (c.pass ? "pass" : "fail") << '\n';
}

int cmd_counterexample(int n, const std::string& variant, const std::string& out_path, const GlobalOptions& g) {
    const Variant v = variant == "center" ? Variant::center : Variant::plain;
    const auto bundle = construct(n, v);
    const std::string doc = bundle_to_json(bundle, precision_bits());
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'");
        out << doc;
    }
    if (g.json || out_path.empty()) {
        std::cout << doc;
    } else {
        std::cout << "n=" << n << " from " << bundle.config.n << "-gon" << (bundle.config.with_center ? " + centre" : "")
                  << ", field Q(zeta_" << bundle.field_order << ")\n";
        print_certificate(std::cout, bundle.certificate);
        std::cout << "written to " << out_path << '\n';
    }
    return bundle.certificate.pass ? 0 : kExitFail;
}

int cmd_verify(const std::string& path, const GlobalOptions& g) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const auto loaded = bundle_from_json(buf.str());
    const auto rep = verify(loaded.bundle);
    const bool agrees = loaded.stored_pass == rep.pass && loaded.stored_stab_counts == rep.stab_counts;
    if (g.json) {
        std::cout << json{{"verdict", rep.pass ? "pass" : "fail"},
                          {"pairwise_nonparallel", rep.pairwise_nonparallel},
                          {"nonconcurrent", rep.nonconcurrent},
                          {"stab_counts", counts_json(rep.stab_counts)},
                          {"forbidden_hit", counts_json(rep.forbidden_hit)},
                          {"stored_certificate_agrees", agrees}}
                         .dump(2)
                  << '\n';
    } else {
        print_certificate(std::cout, rep);
        std::cout << "stored certificate:    " << (agrees ? "agrees" : "DISAGREES") << '\n';
    }
    return rep.pass ? 0 : kExitFail;
}

int cmd_check(const std::string& which, const GlobalOptions& g, std::size_t min_size, std::size_t size, long bound) {
    RandomConfig cfg;
    cfg.seed = g.seed;
    cfg.count = g.trials;
    cfg.min_size = min_size;
    cfg.size = size;
    cfg.coordinate_bound = bound;
    CheckReport rep;
    if (which == "duality") rep = duality_check(cfg);
    else if (which == "pinchasi") rep = pinchasi_check(cfg);
    else if (which == "affine") rep = affine_check(cfg);
    else if (which == "oracle") rep = oracle_check(cfg);
    else rep = transport_check(cfg);
    if (g.json) {
        std::cout << json{{"check", rep.name}, {"pass", rep.pass}, {"fail", rep.fail}, {"skip", rep.skip},
                          {"notes", rep.notes}, {"failures", rep.failures}}
                         .dump(2)
                  << '\n';
    } else {
        rep.write(std::cout);
    }
    return rep.ok() ? 0 : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Direction-cover spectra, point-line duality and stab-count counterexamples"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    app.add_option("--seed", g.seed, "Seed for random instances");
    app.add_option("--trials", g.trials, "Number of random instances");
    app.add_flag("--json", g.json, "Machine-readable output");

    std::string path;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Direction-cover spectrum of a points file");
    spectrum_cmd->add_option("file", path, "Points file (x y per line)")->required();

    auto* stab_cmd = app.add_subcommand("stab", "Vertical stab counts of a lines file");
    stab_cmd->add_option("file", path, "Lines file (a b per line: y + a x + b = 0)")->required();

    std::string to = "lines";
    std::string out_path;
    auto* dualize_cmd = app.add_subcommand("dualize", "Apply the duality map record-wise");
    dualize_cmd->add_option("file", path, "Input file")->required();
    dualize_cmd->add_option("--to", to, "Output role")->check(CLI::IsMember({"lines", "points"}));
    dualize_cmd->add_option("--out", out_path, "Output file (default stdout)");

    int n = 0;
    bool center = false;
    auto* polygon_cmd = app.add_subcommand("polygon", "Spectra and exact coordinates of a regular polygon");
    polygon_cmd->add_option("--n", n, "Vertex count")->required();
    polygon_cmd->add_flag("--center", center, "Include the centre");

    std::string variant = "plain";
    auto* cx_cmd = app.add_subcommand("counterexample", "Construct and certify a line family for n >= 7");
    cx_cmd->add_option("--n", n, "Number of lines")->required();
    cx_cmd->add_option("--variant", variant, "plain or center")->check(CLI::IsMember({"plain", "center"}));
    cx_cmd->add_option("--out", out_path, "Write the bundle JSON here");

    auto* verify_cmd = app.add_subcommand("verify", "Re-check a counterexample bundle");
    verify_cmd->add_option("file", path, "Bundle JSON")->required();

    std::string which;
    std::size_t min_size = 3;
    std::size_t size = 8;
    long bound = 50;
    auto* check_cmd = app.add_subcommand("check", "Seeded property checks");
    check_cmd->add_option("property", which, "duality | pinchasi | affine | oracle | transport")
        ->required()
        ->check(CLI::IsMember({"duality", "pinchasi", "affine", "oracle", "transport"}));
    check_cmd->add_option("--min-size", min_size, "Smallest point set");
    check_cmd->add_option("--size", size, "Largest point set");
    check_cmd->add_option("--bound", bound, "Numerator/denominator bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (*spectrum_cmd) return cmd_spectrum(path, g);
        if (*stab_cmd) return cmd_stab(path, g);
        if (*dualize_cmd) return cmd_dualize(path, to, out_path);
        if (*polygon_cmd) return cmd_polygon(n, center, g);
        if (*cx_cmd) return cmd_counterexample(n, variant, out_path, g);
        if (*verify_cmd) return cmd_verify(path, g);
        if (*check_cmd) return cmd_check(which, g, min_size, size, bound);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DegenerateInputError& e) {
        std::cerr << "degenerate input: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const InvalidArgumentError& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
