// Copyright 2026 The su4geom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// su4geom command-line interface.
//
// Exit codes: 0 success, 1 verification failure or internal inconsistency,
// 2 invalid input or usage, 3 I/O failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "su4geom/error.hpp"
#include "su4geom/gate_algebra.hpp"
#include "su4geom/geometry.hpp"
#include "su4geom/invariants.hpp"
#include "su4geom/io.hpp"
#include "su4geom/sampling.hpp"
#include "su4geom/verify.hpp"
#include "su4geom/volumes.hpp"

using nlohmann::ordered_json;
using namespace su4geom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Global {
    bool json = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

// Numbers in JSON carry the same 12 significant digits as the text output.
double round12(double x) {
    return std::isfinite(x) ? std::stod(format_number(x)) : x;
}

ordered_json triple_json(const std::array<double, 3> &v) {
    return ordered_json::array({round12(v[0]), round12(v[1]), round12(v[2])});
}

std::string triple_text(const std::array<double, 3> &v) {
    return "(" + format_number(v[0]) + ", " + format_number(v[1]) + ", " + format_number(v[2]) + ")";
}

void emit(const Global &g, const ordered_json &doc, const std::vector<std::pair<std::string, std::string>> &lines) {
    if (g.json) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    for (const auto &[k, v] : lines) {
        std::cout << k << ": " << v << '\n';
    }
}

const char *yes_no(bool b) {
    return b ? "true" : "false";
}

struct GateReport {
    LocalInvariants g;
    CanonicalCoords c;
    double chi;
};

GateReport analyse_matrix_file(const std::string &path) {
    const ComplexMatrix4 raw = load_matrix_file(path);
    const GateMatrix u(raw);  // validates unitarity
    const auto proj = project_su4(raw);
    return {makhlin_invariants(u), canonical_coords(u), proj.phase.chi};
}

// ---- invariants / canonicalize / classify ----

int cmd_invariants(const Global &gl, const std::string &path) {
    const auto r = analyse_matrix_file(path);
    const bool pe = is_perfect_entangler(r.c);
    const double dens = weyl_density(r.c);
    ordered_json doc{{"command", "invariants"},
                     {"g", triple_json(r.g.as_array())},
                     {"c", triple_json(r.c.as_array())},
                     {"chi", round12(r.chi)},
                     {"perfect_entangler", pe},
                     {"density", round12(dens)}};
    emit(gl, doc,
         {{"g", triple_text(r.g.as_array())},
          {"c", triple_text(r.c.as_array())},
          {"chi", format_number(r.chi)},
          {"perfect_entangler", yes_no(pe)},
          {"density", format_number(dens)}});
    return kExitOk;
}

int cmd_canonicalize(const Global &gl, const std::string &path) {
    const auto r = analyse_matrix_file(path);
    ordered_json doc{{"command", "canonicalize"}, {"c", triple_json(r.c.as_array())}, {"chi", round12(r.chi)}};
    emit(gl, doc, {{"c", triple_text(r.c.as_array())}, {"chi", format_number(r.chi)}});
    return kExitOk;
}

struct ClassifyArgs {
    std::string matrix;
    std::string coords;
    std::string gate;
};

int cmd_classify(const Global &gl, const ClassifyArgs &a) {
    const int given = !a.matrix.empty() + !a.coords.empty() + !a.gate.empty();
    if (given != 1) {
        throw ArgumentError("classify needs exactly one of --matrix, --coords, --gate");
    }
    CanonicalCoords c;
    if (!a.matrix.empty()) {
        c = analyse_matrix_file(a.matrix).c;
    } else if (!a.gate.empty()) {
        c = named_gate_point(parse_named_gate(a.gate));
    } else {
        const auto t = parse_triple(a.coords);
        c = {t[0], t[1], t[2]};
    }
    const bool inside = c.in_chamber();
    ordered_json doc{{"command", "classify"}, {"c", triple_json(c.as_array())}, {"in_chamber", inside}};
    std::vector<std::pair<std::string, std::string>> lines{{"c", triple_text(c.as_array())},
                                                           {"in_chamber", yes_no(inside)}};
    if (inside) {
        const bool pe = is_perfect_entangler(c);
        doc["perfect_entangler"] = pe;
        doc["g"] = triple_json(g_from_c(c).as_array());
        doc["density"] = round12(weyl_density(c));
        lines.push_back({"perfect_entangler", yes_no(pe)});
        lines.push_back({"g", triple_text(g_from_c(c).as_array())});
        lines.push_back({"density", format_number(weyl_density(c))});
    } else {
        doc["perfect_entangler"] = nullptr;
        lines.push_back({"perfect_entangler", "n/a (outside the Weyl chamber)"});
    }
    emit(gl, doc, lines);
    return kExitOk;
}

// ---- volume ----

struct VolumeArgs {
    std::string methods = "auto";
    std::uint64_t samples = 200000;
    std::uint64_t seed = 1;
    int resolution = 300;
    std::string sampler = "oracle";
    // cube
    std::string gate;
    std::string center;
    double side = 0.0;
    std::string side_text;
    std::string clip = "unclipped";
    std::string space = "c";
    // cylinder / sphere
    std::string radius_text;
    std::string height_text;
};

struct MethodSet {
    bool closed = false, quad = false, mc = false;
};

MethodSet parse_methods(const std::string &s) {
    MethodSet m;
    if (s == "auto") {
        m.closed = m.quad = true;
        return m;
    }
    if (s == "all") {
        m.closed = m.quad = m.mc = true;
        return m;
    }
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "closed") {
            m.closed = true;
        } else if (item == "quadrature" || item == "quad") {
            m.quad = true;
        } else if (item == "mc" || item == "monte-carlo") {
            m.mc = true;
        } else {
            throw ArgumentError("unknown method '" + item + "' (closed, quadrature, mc, all, auto)");
        }
    }
    return m;
}

SamplingMethod parse_sampler(const std::string &s) {
    if (s == "oracle") {
        return SamplingMethod::matrix_oracle;
    }
    if (s == "coordinate") {
        return SamplingMethod::coordinate_density;
    }
    throw ArgumentError("unknown sampler '" + s + "' (oracle, coordinate)");
}

double positive(const std::string &text, const char *what) {
    if (text.empty()) {
        throw ArgumentError(std::string("--") + what + " is required");
    }
    const double v = parse_angle(text);
    if (!(v > 0.0)) {
        throw ArgumentError(std::string("--") + what + " must be positive");
    }
    return v;
}

struct VolumeRun {
    ordered_json region;
    std::vector<VolumeResult> results;
    std::vector<std::string> notes;
};

const char *kImageNote = "g-space closed forms hold only while the region lies inside the image of the chamber";

int report_volume(const Global &gl, VolumeRun run) {
    ordered_json res = ordered_json::array();
    std::vector<std::pair<std::string, std::string>> lines{{"region", run.region.dump()}};
    std::optional<VolumeResult> reference;
    for (const auto &r : run.results) {
        if (!reference && r.method != VolumeMethod::monte_carlo) {
            reference = r;
        }
    }
    bool all_agree = true;
    for (const auto &r : run.results) {
        ordered_json item{{"method", std::string(method_name(r.method))},
                          {"value", round12(r.value)},
                          {"error_estimate", round12(r.error_estimate)}};
        std::string line = format_number(r.value) + " +- " + format_number(r.error_estimate);
        if (reference && r.method != reference->method) {
            const double diff = std::abs(r.value - reference->value);
            const bool agree = r.method == VolumeMethod::monte_carlo
                                   ? diff <= 3.0 * r.error_estimate + reference->error_estimate
                                   : diff <= std::max(1e-5 * std::abs(reference->value), 10 * r.error_estimate);
            item["agrees_with"] = std::string(method_name(reference->method));
            item["agrees"] = agree;
            all_agree = all_agree && agree;
            line += agree ? "  (agrees with " : "  (DISAGREES with ";
            line += std::string(method_name(reference->method)) + ")";
        }
        res.push_back(item);
        lines.push_back({std::string(method_name(r.method)), line});
    }
    for (const auto &n : run.notes) {
        lines.push_back({"note", n});
    }
    ordered_json doc{{"command", "volume"}, {"region", run.region}, {"results", res}, {"all_agree", all_agree}};
    if (!run.notes.empty()) {
        doc["notes"] = run.notes;
    }
    emit(gl, doc, lines);
    return kExitOk;
}

SamplerConfig sampler_config(const Global &gl, const VolumeArgs &a) {
    return {a.seed, gl.threads, parse_sampler(a.sampler)};
}

QuadratureOptions quad_options(const Global &gl, const VolumeArgs &a, bool chamber_scale) {
    QuadratureOptions o = chamber_scale ? chamber_quadrature_options(gl.threads) : QuadratureOptions{};
    o.resolution = a.resolution;
    o.workers = gl.threads;
    return o;
}

int cmd_volume_pe(const Global &gl, const VolumeArgs &a) {
    const MethodSet m = parse_methods(a.methods);
    VolumeRun run;
    run.region = {{"kind", "pe_polyhedron"}};
    if (m.closed) {
        run.results.push_back(pe_volume(VolumeMethod::closed_form));
    }
    if (m.quad) {
        run.results.push_back(pe_volume(VolumeMethod::quadrature, quad_options(gl, a, true)));
    }
    if (m.mc) {
        run.results.push_back(region_volume_mc(PeRegion{}, a.samples, sampler_config(gl, a)));
    }
    return report_volume(gl, run);
}

int cmd_volume_cube(const Global &gl, const VolumeArgs &a) {
    const MethodSet m = parse_methods(a.methods);
    if (a.gate.empty() == a.center.empty()) {
        throw ArgumentError("cube needs exactly one of --gate, --center");
    }
    const double side = positive(a.side_text, "side");
    VolumeRun run;
    if (a.space == "g") {
        if (!a.gate.empty()) {
            throw ArgumentError("--gate applies to c-space cubes only");
        }
        const Triple center = parse_triple(a.center);
        run.region = {{"kind", "cube_g"}, {"center", triple_json(center)}, {"side", round12(side)}};
        run.notes.push_back(kImageNote);
        const bool on_axis = center[0] == 0.0 && center[1] == 0.0;
        if (m.closed && on_axis) {
            run.results.push_back(origin_region_volume_g(OriginRegionKind::cube, side));
        }
        if (m.quad && on_axis) {
            run.results.push_back(origin_region_volume_g_quadrature(OriginRegionKind::cube, side));
        }
        if (!on_axis && (m.closed || m.quad)) {
            run.notes.push_back("closed form and quadrature need a centre on the g3 axis");
        }
        if (m.mc || !on_axis) {
            run.results.push_back(region_volume_mc(CubeG{center, side}, a.samples, sampler_config(gl, a)));
        }
        return report_volume(gl, run);
    }
    if (a.space != "c") {
        throw ArgumentError("--space must be c or g");
    }
    const Triple center = a.gate.empty() ? parse_triple(a.center) : named_gate_point(parse_named_gate(a.gate)).as_array();
    const ClipMode clip = parse_clip_mode(a.clip);
    run.region = {{"kind", "cube_c"},
                  {"center", triple_json(center)},
                  {"side", round12(side)},
                  {"clip", std::string(clip_mode_name(clip))}};
    if (!a.gate.empty()) {
        run.region["gate"] = a.gate;
    }
    if (m.closed) {
        if (clip == ClipMode::chamber_clipped) {
            run.notes.push_back("closed forms integrate the unclipped cube; use --clip unclipped to compare");
        } else {
            try {
                run.results.push_back(cube_volume_closed(center, side));
            } catch (const RangeError &e) {
                if (a.methods != "auto") {
                    throw;
                }
                run.notes.push_back(e.what());
            }
        }
    }
    if (m.quad) {
        QuadratureOptions o = quad_options(gl, a, false);
        run.results.push_back(cube_volume_quadrature(center, side, clip, o));
    }
    if (m.mc) {
        run.results.push_back(region_volume_mc(CubeC{center, side, clip}, a.samples, sampler_config(gl, a)));
    }
    return report_volume(gl, run);
}

int cmd_volume_cylinder(const Global &gl, const VolumeArgs &a) {
    const MethodSet m = parse_methods(a.methods);
    const Triple center = a.center.empty() ? Triple{0, 0, 0} : parse_triple(a.center);
    const double r = positive(a.radius_text, "radius");
    const double h = positive(a.height_text, "height");
    VolumeRun run;
    run.region = {{"kind", "cylinder_g"}, {"center", triple_json(center)}, {"radius", round12(r)}, {"height", round12(h)}};
    run.notes.push_back(kImageNote);
    if (m.closed) {
        run.results.push_back(cylinder_volume_g(center, r, h));
    }
    if (m.quad) {
        run.results.push_back(cylinder_volume_g_quadrature(center, r, h));
    }
    if (m.mc) {
        run.results.push_back(region_volume_mc(CylinderG{center, r, h}, a.samples, sampler_config(gl, a)));
    }
    return report_volume(gl, run);
}

int cmd_volume_sphere(const Global &gl, const VolumeArgs &a) {
    const MethodSet m = parse_methods(a.methods);
    const Triple center = a.center.empty() ? Triple{0, 0, 0} : parse_triple(a.center);
    const double r = positive(a.radius_text, "radius");
    VolumeRun run;
    run.region = {{"kind", "sphere_g"}, {"center", triple_json(center)}, {"radius", round12(r)}};
    run.notes.push_back(kImageNote);
    const bool on_axis = center[0] == 0.0 && center[1] == 0.0;
    if (m.closed && on_axis) {
        run.results.push_back(origin_region_volume_g(OriginRegionKind::sphere, r));
    }
    if (m.quad && on_axis) {
        run.results.push_back(origin_region_volume_g_quadrature(OriginRegionKind::sphere, r));
    }
    if (!on_axis && (m.closed || m.quad)) {
        run.notes.push_back("closed form and quadrature need a centre on the g3 axis");
    }
    if (m.mc || !on_axis) {
        run.results.push_back(region_volume_mc(SphereG{center, r}, a.samples, sampler_config(gl, a)));
    }
    return report_volume(gl, run);
}

// ---- sample ----

struct SampleArgs {
    std::int64_t n = 0;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string output;
    std::string sampler = "oracle";
};

int cmd_sample(const Global &gl, const SampleArgs &a) {
    if (a.n < 1) {
        throw ArgumentError("-n must be at least 1");
    }
    if (a.format != "csv" && a.format != "jsonl") {
        throw ArgumentError("--format must be csv or jsonl");
    }
    std::ofstream file;
    std::ostream *sink = &std::cout;
    if (!a.output.empty()) {
        file.open(a.output, std::ios::binary);
        if (!file) {
            throw IoError("cannot open '" + a.output + "' for writing");
        }
        sink = &file;
    } else if (gl.json) {
        throw ArgumentError("--json needs --output so that the samples do not mix with the summary");
    }
    std::ostream &out = *sink;
    if (a.format == "csv") {
        out << kSampleCsvHeader << '\n';
    }
    const SamplerConfig cfg{a.seed, gl.threads, parse_sampler(a.sampler)};
    std::uint64_t pe = 0;
    double sum_g3 = 0.0;
    for_each_gate(static_cast<std::uint64_t>(a.n), cfg, [&](std::uint64_t i, const GateMatrix &u) {
        const LocalInvariants g = makhlin_invariants(u);
        const CanonicalCoords c = c_from_g(g);
        const bool is_pe = is_perfect_entangler(c);
        pe += is_pe;
        sum_g3 += g.g3;
        if (a.format == "csv") {
            write_sample_csv_row(out, c, g, is_pe);
        } else {
            write_sample_jsonl_row(out, i, c, g, is_pe, u.matrix());
        }
    });
    out.flush();
    if (!out) {
        throw IoError("writing samples failed");
    }
    const double n = static_cast<double>(a.n);
    ordered_json doc{{"command", "sample"},   {"n", a.n},
                     {"seed", a.seed},        {"sampler", a.sampler},
                     {"format", a.format},    {"output", a.output},
                     {"pe_fraction", round12(pe / n)}, {"mean_g3", round12(sum_g3 / n)}};
    const std::vector<std::pair<std::string, std::string>> lines{{"samples", std::to_string(a.n)},
                                                                 {"pe_fraction", format_number(pe / n)},
                                                                 {"mean_g3", format_number(sum_g3 / n)}};
    if (a.output.empty()) {
        for (const auto &[k, v] : lines) {
            std::cerr << k << ": " << v << '\n';
        }
    } else {
        emit(gl, doc, lines);
    }
    return kExitOk;
}

// ---- mesh ----

struct MeshArgs {
    std::string target;
    int resolution = 40;
    std::string c3_text = "0";
    std::string output;
};

int cmd_mesh(const Global &gl, const MeshArgs &a) {
    if (a.resolution < 2) {
        throw ArgumentError("--resolution must be at least 2");
    }
    if (a.target != "weyl-c" && a.target != "weyl-g" && a.target != "density-slice") {
        throw ArgumentError("unknown mesh target '" + a.target + "' (weyl-c, weyl-g, density-slice)");
    }
    std::ofstream file;
    std::ostream *out = &std::cout;
    if (!a.output.empty()) {
        file.open(a.output, std::ios::binary);
        if (!file) {
            throw IoError("cannot open '" + a.output + "' for writing");
        }
        out = &file;
    } else if (gl.json) {
        throw ArgumentError("--json needs --output so that the CSV does not mix with the summary");
    }
    const int n = a.resolution;
    std::uint64_t points = 0;
    ordered_json doc{{"command", "mesh"}, {"target", a.target}, {"resolution", n}};
    std::vector<std::pair<std::string, std::string>> lines;
    if (a.target == "weyl-c") {
        *out << "c1,c2,c3,in_chamber,is_pe\n";
        std::uint64_t inside = 0, pe = 0;
        for (int i = 0; i <= n; i++) {
            for (int j = 0; j <= n; j++) {
                for (int k = 0; k <= n; k++) {
                    const CanonicalCoords c{kPi * i / n, kPi / 2 * j / n, kPi / 2 * k / n};
                    const bool in = c.in_chamber();
                    const bool is_pe = in && is_perfect_entangler(c);
                    inside += in;
                    pe += is_pe;
                    *out << format_number(c.c1) << ',' << format_number(c.c2) << ',' << format_number(c.c3) << ','
                         << in << ',' << is_pe << '\n';
                    points++;
                }
            }
        }
        doc["in_chamber"] = inside;
        doc["perfect_entanglers"] = pe;
        lines = {{"points", std::to_string(points)},
                 {"in_chamber", std::to_string(inside)},
                 {"perfect_entanglers", std::to_string(pe)}};
    } else if (a.target == "weyl-g") {
        *out << "c1,c2,c3,g1,g2,g3\n";
        double max_g2 = 0.0;
        for (int i = 0; i <= n; i++) {
            for (int j = 0; j <= n; j++) {
                for (int k = 0; k <= n; k++) {
                    const CanonicalCoords c{kPi * i / n, kPi / 2 * j / n, kPi / 2 * k / n};
                    if (!c.in_chamber()) {
                        continue;
                    }
                    const auto g = g_from_c(c);
                    max_g2 = std::max(max_g2, std::abs(g.g2));
                    *out << format_number(c.c1) << ',' << format_number(c.c2) << ',' << format_number(c.c3) << ','
                         << format_number(g.g1) << ',' << format_number(g.g2) << ',' << format_number(g.g3) << '\n';
                    points++;
                }
            }
        }
        doc["max_abs_g2"] = round12(max_g2);
        lines = {{"points", std::to_string(points)}, {"max_abs_g2", format_number(max_g2)}};
    } else {
        const double c3 = parse_angle(a.c3_text);
        if (c3 < 0.0 || c3 > kPi / 2) {
            throw ArgumentError("--c3 must lie in [0, pi/2]");
        }
        *out << "c1,c2,density\n";
        double best = -1.0;
        CanonicalCoords arg{};
        bool best_on_edge = false;
        for (int i = 0; i <= 2 * n; i++) {
            for (int j = 0; j <= n; j++) {
                const CanonicalCoords c{kPi * i / (2 * n), kPi / 2 * j / n, c3};
                if (!c.in_chamber()) {
                    continue;
                }
                const double d = weyl_density(c);
                *out << format_number(c.c1) << ',' << format_number(c.c2) << ',' << format_number(d) << '\n';
                points++;
                if (d > best) {
                    best = d;
                    arg = c;
                    // Edge of the slice polygon: c2 = c3, c1 = c2 or c1 + c2 = pi.
                    const double tol = 1e-12;
                    best_on_edge = std::abs(c.c2 - c3) < tol || std::abs(c.c1 - c.c2) < tol ||
                                   std::abs(c.c1 + c.c2 - kPi) < tol;
                }
            }
        }
        doc["c3"] = round12(c3);
        doc["max"] = {{"c1", round12(arg.c1)},
                      {"c2", round12(arg.c2)},
                      {"density", round12(best)},
                      {"on_slice_edge", best_on_edge}};
        lines = {{"points", std::to_string(points)},
                 {"max_density", format_number(best)},
                 {"argmax", "(" + format_number(arg.c1) + ", " + format_number(arg.c2) + ")"},
                 {"argmax_on_slice_edge", yes_no(best_on_edge)}};
    }
    out->flush();
    if (!*out) {
        throw IoError("writing mesh output failed");
    }
    doc["points"] = points;
    if (!a.output.empty()) {
        doc["output"] = a.output;
        lines.insert(lines.begin(), {"output", a.output});
        emit(gl, doc, lines);
    } else {
        for (const auto &[k, v] : lines) {
            std::cerr << k << ": " << v << '\n';
        }
    }
    return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
    std::string level = "quick";
    std::uint64_t seed = 20260101;
    double fault_density_scale = 1.0;
};

int cmd_verify(const Global &gl, const VerifyArgs &a) {
    VerifyOptions o;
    if (a.level == "quick") {
        o.level = VerifyLevel::quick;
    } else if (a.level == "full") {
        o.level = VerifyLevel::full;
    } else {
        throw ArgumentError("--level must be quick or full");
    }
    o.workers = gl.threads;
    o.seed = a.seed;
    o.density_scale = a.fault_density_scale;
    const VerifyReport rep = run_verification(o);
    ordered_json checks = ordered_json::array();
    for (const auto &c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"observed", round12(c.observed)},
                          {"budget", round12(c.budget)},
                          {"seconds", round12(c.seconds)},
                          {"detail", c.detail}});
    }
    const bool ok = rep.all_passed();
    if (gl.json) {
        ordered_json doc{{"command", "verify"}, {"level", a.level}, {"passed", ok}, {"checks", checks}};
        std::cout << doc.dump(2) << '\n';
    } else {
        for (const auto &c : rep.checks) {
            std::printf("%-4s %-30s observed %-12s budget %-8s %6.2fs %s\n", c.passed ? "ok" : "FAIL", c.name.c_str(),
                        format_number(c.observed).c_str(), format_number(c.budget).c_str(), c.seconds,
                        c.detail.c_str());
        }
        std::printf("%s\n", ok ? "all checks passed" : "verification FAILED");
    }
    return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Invariant geometry of two-qubit gates"};
    app.require_subcommand(1);
    Global gl;
    app.add_flag("--json", gl.json, "Machine-readable JSON output");
    app.add_option("--threads", gl.threads, "Worker threads (default: available cores)")->check(CLI::PositiveNumber);

    std::string matrix_path;
    auto *inv = app.add_subcommand("invariants", "Makhlin invariants, Weyl chamber point and phase of a gate");
    inv->add_option("matrix", matrix_path, "Matrix JSON file")->required();
    auto *can = app.add_subcommand("canonicalize", "Weyl chamber point of a gate");
    can->add_option("matrix", matrix_path, "Matrix JSON file")->required();

    ClassifyArgs cls;
    auto *cl = app.add_subcommand("classify", "Chamber membership and perfect-entangler test");
    cl->add_option("--matrix", cls.matrix, "Matrix JSON file");
    cl->add_option("--coords", cls.coords, "c1,c2,c3 (radians or pi fractions)");
    cl->add_option("--gate", cls.gate, "Named gate");

    VolumeArgs va;
    auto *vol = app.add_subcommand("volume", "Invariant volumes of regions");
    vol->require_subcommand(1);
    auto add_common = [&](CLI::App *sc) {
        sc->add_option("--methods", va.methods, "closed,quadrature,mc | all | auto");
        sc->add_option("--samples", va.samples, "Monte Carlo sample count")->check(CLI::Range(1000ull, 1ull << 40));
        sc->add_option("--seed", va.seed, "Monte Carlo seed");
        sc->add_option("--sampler", va.sampler, "oracle | coordinate");
    };
    auto *vpe = vol->add_subcommand("pe", "Perfect-entangler polyhedron");
    add_common(vpe);
    vpe->add_option("--resolution", va.resolution, "Simpson panels per axis")->check(CLI::Range(4, 4000));
    auto *vcube = vol->add_subcommand("cube", "Axis-aligned cube in c-space (or g-space with --space g)");
    add_common(vcube);
    vcube->add_option("--gate", va.gate, "Named gate at the centre");
    vcube->add_option("--center", va.center, "Centre triple");
    vcube->add_option("--side", va.side_text, "Side length")->required();
    vcube->add_option("--clip", va.clip, "unclipped | chamber-clipped");
    vcube->add_option("--space", va.space, "c | g");
    vcube->add_option("--resolution", va.resolution, "Simpson panels per axis")->check(CLI::Range(4, 4000));
    auto *vcyl = vol->add_subcommand("cylinder", "Cylinder in g-space, axis parallel to g3");
    add_common(vcyl);
    vcyl->add_option("--center", va.center, "Centre g1,g2,g3");
    vcyl->add_option("--radius", va.radius_text, "Radius")->required();
    vcyl->add_option("--height", va.height_text, "Height")->required();
    auto *vsph = vol->add_subcommand("sphere", "Sphere in g-space");
    add_common(vsph);
    vsph->add_option("--center", va.center, "Centre g1,g2,g3");
    vsph->add_option("--radius", va.radius_text, "Radius")->required();

    SampleArgs sa;
    auto *smp = app.add_subcommand("sample", "Write Haar-random gates");
    smp->add_option("-n,--n", sa.n, "Number of samples")->required();
    smp->add_option("--seed", sa.seed, "Seed");
    smp->add_option("--format", sa.format, "csv | jsonl");
    smp->add_option("--output,-o", sa.output, "Output file (default stdout)");
    smp->add_option("--sampler", sa.sampler, "oracle | coordinate");

    MeshArgs ma;
    auto *msh = app.add_subcommand("mesh", "Plot data for the chamber, its g-space image and density slices");
    msh->add_option("target", ma.target, "weyl-c | weyl-g | density-slice")->required();
    msh->add_option("--resolution", ma.resolution, "Grid points per axis");
    msh->add_option("--c3", ma.c3_text, "Slice level for density-slice");
    msh->add_option("--output,-o", ma.output, "Output CSV (default stdout)");

    VerifyArgs vfa;
    auto *ver = app.add_subcommand("verify", "Run the self-verification suite");
    ver->add_option("--level", vfa.level, "quick | full");
    ver->add_option("--seed", vfa.seed, "Seed for the random checks");
    // Test hook: scales every density the suite evaluates, which must make it fail.
    ver->add_option("--fault-density-scale", vfa.fault_density_scale)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*inv) {
            return cmd_invariants(gl, matrix_path);
        }
        if (*can) {
            return cmd_canonicalize(gl, matrix_path);
        }
        if (*cl) {
            return cmd_classify(gl, cls);
        }
        if (*vpe) {
            return cmd_volume_pe(gl, va);
        }
        if (*vcube) {
            return cmd_volume_cube(gl, va);
        }
        if (*vcyl) {
            return cmd_volume_cylinder(gl, va);
        }
        if (*vsph) {
            return cmd_volume_sphere(gl, va);
        }
        if (*smp) {
            return cmd_sample(gl, sa);
        }
        if (*msh) {
            return cmd_mesh(gl, ma);
        }
        if (*ver) {
            return cmd_verify(gl, vfa);
        }
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ArgumentError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RangeError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerify;
    }
    return kExitUsage;
}
