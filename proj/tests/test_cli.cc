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

// Drives the su4geom executable: exit codes, JSON schema stability and documented examples.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "su4geom/gate_algebra.hpp"
#include "su4geom/geometry.hpp"
#include "su4geom/volumes.hpp"

namespace su4geom {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

const std::string kCli = SU4GEOM_CLI_PATH;
const fs::path kData = SU4GEOM_TEST_DATA_DIR;
const fs::path kGolden = SU4GEOM_GOLDEN_DIR;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path scratch(const std::string &name) {
    const fs::path dir = fs::temp_directory_path() / ("su4geom_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

RunResult run(const std::string &args) {
    const fs::path err = scratch("stderr.txt");
    const std::string cmd = kCli + " --threads 1 " + args + " 2>" + err.string();
    FILE *pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, "", "popen failed"};
    }
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err)};
}

ordered_json run_json(const std::string &args) {
    const RunResult r = run("--json " + args);
    EXPECT_EQ(r.exit_code, 0) << args << "\n" << r.err;
    return ordered_json::parse(r.out);
}

// Type skeleton of a document: key order, nesting and value kinds, not values.
ordered_json skeleton(const ordered_json &v) {
    if (v.is_object()) {
        ordered_json out = ordered_json::object();
        for (const auto &[k, x] : v.items()) {
            out[k] = skeleton(x);
        }
        return out;
    }
    if (v.is_array()) {
        ordered_json out = ordered_json::array();
        for (const auto &x : v) {
            const ordered_json s = skeleton(x);
            if (out.empty() || out.back() != s) {
                out.push_back(s);
            }
        }
        return out;
    }
    if (v.is_number()) {
        return "number";
    }
    if (v.is_boolean()) {
        return "boolean";
    }
    if (v.is_null()) {
        return "null";
    }
    return "string";
}

void expect_golden(const std::string &name, const ordered_json &doc) {
    const fs::path file = kGolden / (name + ".schema.json");
    const ordered_json got = skeleton(doc);
    if (std::getenv("SU4GEOM_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(file) << got.dump(2) << '\n';
        return;
    }
    ASSERT_TRUE(fs::exists(file)) << "missing golden file " << file;
    EXPECT_EQ(got, ordered_json::parse(slurp(file))) << name << ":\n" << got.dump(2);
}

std::string data(const char *name) {
    return (kData / name).string();
}

double num(const ordered_json &v) {
    return v.get<double>();
}

TEST(CliSchemaTest, Invariants) {
    expect_golden("invariants", run_json("invariants " + data("cnot.json")));
}

TEST(CliSchemaTest, Canonicalize) {
    expect_golden("canonicalize", run_json("canonicalize " + data("cnot.json")));
}

TEST(CliSchemaTest, Classify) {
    expect_golden("classify_inside", run_json("classify --gate b-gate"));
    expect_golden("classify_outside", run_json("classify --coords 0.3,0.5,0.1"));
}

TEST(CliSchemaTest, Volumes) {
    expect_golden("volume_pe", run_json("volume pe --methods all --samples 20000"));
    expect_golden("volume_cube", run_json("volume cube --gate b-gate --side 0.3 --methods all --samples 20000 --resolution 60"));
    expect_golden("volume_cube_clipped", run_json("volume cube --center 1,0.5,0.2 --side 0.1 --clip chamber-clipped --resolution 60"));
    expect_golden("volume_cylinder", run_json("volume cylinder --center 0.5,0,0 --radius 0.1 --height 0.2"));
    expect_golden("volume_sphere", run_json("volume sphere --radius 0.05"));
    expect_golden("volume_cube_g", run_json("volume cube --space g --center 0,0,0 --side 0.1"));
}

TEST(CliSchemaTest, SampleAndMesh) {
    expect_golden("sample", run_json("sample -n 100 --seed 3 -o " + scratch("s.csv").string()));
    expect_golden("mesh_weyl_c", run_json("mesh weyl-c --resolution 6 -o " + scratch("m1.csv").string()));
    expect_golden("mesh_weyl_g", run_json("mesh weyl-g --resolution 6 -o " + scratch("m2.csv").string()));
    expect_golden("mesh_density_slice", run_json("mesh density-slice --c3 pi/12 --resolution 6 -o " + scratch("m3.csv").string()));
}

TEST(CliSchemaTest, VerifyQuickPassesWithinOneMinute) {
    const auto t0 = std::chrono::steady_clock::now();
    const ordered_json doc = run_json("verify --level quick");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect_golden("verify", doc);
    EXPECT_TRUE(doc["passed"].get<bool>());
    EXPECT_LT(seconds, 60.0);
}

TEST(CliExitCodeTest, NonUnitaryMatrix) {
    const RunResult r = run("invariants " + data("nonunitary.json"));
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.err.find("unitarity violation"), std::string::npos) << r.err;
}

TEST(CliExitCodeTest, ValidationErrors) {
    EXPECT_EQ(run("invariants " + data("three_by_three.json")).exit_code, 2);
    EXPECT_EQ(run("sample -n 0").exit_code, 2);
    EXPECT_EQ(run("sample -n 10 --format xml").exit_code, 2);
    EXPECT_EQ(run("classify --gate cnot --coords 1,0,0").exit_code, 2);
    EXPECT_EQ(run("classify --coords 1,zero,0").exit_code, 2);
    EXPECT_EQ(run("volume cube --gate cnot --side 5 --methods closed").exit_code, 2);
    EXPECT_EQ(run("volume cube --gate toffoli --side 0.1").exit_code, 2);
    EXPECT_EQ(run("volume cylinder --radius -1 --height 1").exit_code, 2);
    EXPECT_EQ(run("mesh weyl-c --resolution 1").exit_code, 2);
    EXPECT_EQ(run("mesh torus").exit_code, 2);
}

TEST(CliExitCodeTest, UsageErrors) {
    EXPECT_EQ(run("").exit_code, 2);
    EXPECT_EQ(run("frobnicate").exit_code, 2);
    EXPECT_EQ(run("volume pe --no-such-flag").exit_code, 2);
    EXPECT_EQ(run("--help").exit_code, 0);
}

TEST(CliExitCodeTest, IoErrors) {
    EXPECT_EQ(run("invariants " + data("missing.json")).exit_code, 3);
    EXPECT_EQ(run("sample -n 10 -o /nonexistent-dir/out.csv").exit_code, 3);
}

TEST(CliExitCodeTest, CorruptedDensityFailsVerification) {
    const RunResult r = run("verify --level quick --fault-density-scale 1.001");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(CliExamplesTest, InvariantsOfCnotAndIdentity) {
    const ordered_json cnot = run_json("invariants " + data("cnot.json"));
    EXPECT_EQ(cnot["g"], ordered_json::parse("[0,0,1]"));
    EXPECT_NEAR(num(cnot["c"][0]), kPi / 2, 1e-11);
    EXPECT_EQ(num(cnot["c"][1]), 0.0);
    EXPECT_EQ(num(cnot["c"][2]), 0.0);
    EXPECT_TRUE(cnot["perfect_entangler"].get<bool>());
    const ordered_json id = run_json("invariants " + data("identity.json"));
    EXPECT_EQ(id["g"], ordered_json::parse("[1,0,3]"));
    EXPECT_FALSE(id["perfect_entangler"].get<bool>());
    const ordered_json swap = run_json("canonicalize " + data("swap.json"));
    EXPECT_NEAR(num(swap["c"][2]), kPi / 2, 1e-11);
}

TEST(CliExamplesTest, TextOutputUsesTwelveDigits) {
    const RunResult r = run("volume pe --methods closed");
    EXPECT_NE(r.out.find("0.848826363157"), std::string::npos) << r.out;
}

TEST(CliExamplesTest, PerfectEntanglerVolume) {
    const ordered_json doc = run_json("volume pe");
    ASSERT_EQ(doc["results"].size(), 2u);
    EXPECT_NEAR(num(doc["results"][0]["value"]), 8 / (3 * kPi), 1e-12);
    EXPECT_NEAR(num(doc["results"][1]["value"]), 8 / (3 * kPi), 1e-5);
    EXPECT_TRUE(doc["all_agree"].get<bool>());
}

TEST(CliExamplesTest, BGateCubeThreeMethodsAgree) {
    const ordered_json doc = run_json("volume cube --gate b-gate --side 0.3 --methods all");
    ASSERT_EQ(doc["results"].size(), 3u);
    EXPECT_TRUE(doc["all_agree"].get<bool>());
}

TEST(CliExamplesTest, OffAxisCylinder) {
    const ordered_json doc = run_json("volume cylinder --center 0.5,0,0 --radius 0.1 --height 0.2");
    const double want = cylinder_volume_g({0.5, 0, 0}, 0.1, 0.2).value;
    EXPECT_NEAR(num(doc["results"][0]["value"]) / want, 1.0, 1e-11);
    EXPECT_NEAR(num(doc["results"][1]["value"]) / want, 1.0, 1e-6);
}

TEST(CliExamplesTest, SamplesAreByteIdenticalForOneSeed) {
    const fs::path a = scratch("a.csv"), b = scratch("b.csv"), c = scratch("c.jsonl");
    ASSERT_EQ(run("sample -n 5000 --seed 9 -o " + a.string()).exit_code, 0);
    ASSERT_EQ(run("sample -n 5000 --seed 9 -o " + b.string()).exit_code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    ASSERT_EQ(run("sample -n 3 --seed 9 --format jsonl -o " + c.string()).exit_code, 0);
    std::istringstream lines(slurp(c));
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto row = nlohmann::json::parse(line);
        EXPECT_EQ(row["index"], count++);
        EXPECT_EQ(row["matrix"].size(), 4u);
    }
    EXPECT_EQ(count, 3);
    const std::string csv = slurp(a);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "c1,c2,c3,g1,g2,g3,is_pe");
}

TEST(CliExamplesTest, MillionSamplePerfectEntanglerFraction) {
    const ordered_json doc = run_json("sample -n 1000000 --seed 42 -o " + scratch("big.csv").string());
    EXPECT_GE(num(doc["pe_fraction"]), 0.845);
    EXPECT_LE(num(doc["pe_fraction"]), 0.852);
}

std::vector<std::vector<double>> read_csv(const fs::path &p) {
    std::istringstream in(slurp(p));
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        rows.push_back(row);
    }
    return rows;
}

TEST(CliExamplesTest, DensitySliceMaxima) {
    const ordered_json top = run_json("mesh density-slice --c3 pi/4 --resolution 60 -o " + scratch("d1.csv").string());
    EXPECT_FALSE(top["max"]["on_slice_edge"].get<bool>());
    EXPECT_GT(num(top["max"]["c2"]), kPi / 4 + 1e-6);
    const ordered_json floor = run_json("mesh density-slice --c3 0 --resolution 40 -o " + scratch("d0.csv").string());
    EXPECT_NEAR(num(floor["max"]["density"]), 12 / kPi, 1e-11);
    EXPECT_NEAR(num(floor["max"]["c1"]), kPi / 2, 1e-11);
    EXPECT_NEAR(num(floor["max"]["c2"]), kPi / 4, 1e-11);
    for (const auto &row : read_csv(scratch("d1.csv"))) {
        ASSERT_EQ(row.size(), 3u);
        EXPECT_NEAR(row[2], weyl_density(row[0], row[1], kPi / 4), 1e-10);
    }
}

TEST(CliExamplesTest, ChamberImageMeshRespectsG2Bound) {
    ASSERT_EQ(run("mesh weyl-g --resolution 24 -o " + scratch("g.csv").string()).exit_code, 0);
    const auto rows = read_csv(scratch("g.csv"));
    ASSERT_GT(rows.size(), 1000u);
    for (const auto &row : rows) {
        EXPECT_LE(std::abs(row[4]), 0.25);
    }
}

TEST(CliExamplesTest, ChamberMeshFlagsPerfectEntanglers) {
    ASSERT_EQ(run("mesh weyl-c --resolution 8 -o " + scratch("c.csv").string()).exit_code, 0);
    for (const auto &row : read_csv(scratch("c.csv"))) {
        const CanonicalCoords c{row[0], row[1], row[2]};
        EXPECT_EQ(row[3] != 0.0, c.in_chamber());
        if (row[3] != 0.0) {
            EXPECT_EQ(row[4] != 0.0, is_perfect_entangler(c));
        }
    }
}

TEST(CliExamplesTest, AngleFractionsAreAccepted) {
    const ordered_json doc = run_json("classify --coords pi/2,pi/4,0");
    EXPECT_NEAR(num(doc["density"]), 12 / kPi, 1e-11);
    EXPECT_TRUE(doc["perfect_entangler"].get<bool>());
}

}  // namespace
}  // namespace su4geom
