// Copyright 2026 The fermap Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "support.hpp"

using namespace fermap;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture() { return std::string(FERMAP_FIXTURE_DIR) + "/h2_sto3g_0.75.ferm"; }

class TempDir {
  public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("fermap_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string &name, const std::string &body = {}) const {
        auto p = path_ / name;
        if (!body.empty()) std::ofstream(p) << body;
        return p.string();
    }
    const std::filesystem::path &path() const { return path_; }

  private:
    std::filesystem::path path_;
};

} // namespace

TEST(Cli, CompareReproducesCountTable) {
    auto r = run({"compare", "--input", fixture(), "--mappings", "jw,2sp:w=2,bk"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "mapping      X      Y      Z  Pauli   CNOT     SQ  gates\n"
                     "jw           8      8     16     32     36     46     82\n"
                     "2sp:w=2      4      4     24     32     36     30     66\n"
                     "bk           4      4     28     36     44     30     74\n");
    auto j = json::parse(run({"compare", "-i", fixture(), "--mappings", "jw,2sp:w=2,bk", "--json"}).out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[2]["mapping"], "bk");
    EXPECT_EQ(j[2]["z"], 28);
    EXPECT_EQ(j[2]["total_gates"], 74);
    EXPECT_EQ(json::parse(run({"compare", "-i", fixture(), "--mappings", "", "--json"}).out).size(), 0u);
}

TEST(Cli, TreeDotHasTwelveModeEdges) {
    auto r = run({"tree", "--mapping", "msp:2-3-2", "-M", "12", "--dot"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char *e : {"1 -> 0;", "3 -> 2;", "5 -> 1;", "5 -> 3;", "5 -> 4;", "7 -> 6;", "9 -> 8;", "11 -> 5;",
                          "11 -> 7;", "11 -> 9;", "11 -> 10;"})
        EXPECT_NE(r.out.find(e), std::string::npos) << e;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '>'), 11);
    auto j = json::parse(run({"tree", "-m", "msp:2-3-2", "-M", "12", "--json"}).out);
    EXPECT_EQ(j["edges"].size(), 11u);
    EXPECT_EQ(j["roots"], json::array({11}));
    EXPECT_EQ(run({"tree", "-m", "parity", "-M", "3"}).out, "2\n  1\n    0\n");
}

TEST(Cli, MapOutputs) {
    auto r = run({"map", "-i", fixture(), "-m", "jw", "--decimals", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "-0.81530 I");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 15);
    auto full = run({"map", "-i", fixture(), "-m", "bk"});
    auto op = parse_qubit_operator(full.out);
    EXPECT_EQ(op, map_hamiltonian(support::h2_fixture(), derive_sets(fenwick(4))));
    EXPECT_EQ(full.out, run({"map", "-i", fixture(), "-m", "bk"}).out);

    auto j = json::parse(run({"map", "-i", fixture(), "-m", "bk", "--json"}).out);
    EXPECT_EQ(j["n_qubits"], 4);
    EXPECT_EQ(j["terms"].size(), 15u);
    EXPECT_EQ(j["terms"][0]["pauli"], "I");
}

TEST(Cli, MapEmptyHamiltonian) {
    TempDir dir;
    auto in = dir.file("empty.ferm", "modes 3\n");
    auto r = run({"map", "-i", in, "-m", "parity"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "");
}

TEST(Cli, OutputDirectoryFromEnvironment) {
    TempDir dir;
    ::setenv(cli::kOutputDirVariable, dir.path().c_str(), 1);
    auto r = run({"map", "-i", fixture(), "-m", "jw", "-o", "sub/h2_jw.qop"});
    ::unsetenv(cli::kOutputDirVariable);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "");
    auto written = support::read_file((dir.path() / "sub/h2_jw.qop").string());
    EXPECT_EQ(parse_qubit_operator(written).size(), 15u);
}

TEST(Cli, SetsAndVerify) {
    auto r = run({"sets", "-m", "msp:2-3-2", "-M", "12"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("5  S={0,1,2,3,4}  F={1,3,4}  P={1,3,4}  U={11}\n"), std::string::npos) << r.out;
    auto j = json::parse(run({"sets", "-m", "bk", "-M", "4", "--json"}).out);
    EXPECT_EQ(j["sets"][0]["U"], json::array({1, 3}));

    auto v = run({"verify", "-m", "msp:3-2", "-M", "6"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("PASS"), std::string::npos);
    auto vj = json::parse(run({"verify", "-m", "jw", "-M", "4", "--json"}).out);
    EXPECT_EQ(vj["passed"], true);
    EXPECT_EQ(vj["anticommutator_residual"], 0.0);
}

TEST(Cli, CountAndCircuit) {
    TempDir dir;
    auto j = json::parse(run({"count", "-i", fixture(), "-m", "2sp:w=2", "--json"}).out);
    EXPECT_EQ(j["cnot"], 36);
    EXPECT_EQ(j["single_qubit"], 30);
    auto qop = dir.file("fig.qop", "0.3 X0 Y1 Z2 X4\n");
    auto c = json::parse(run({"count", "-q", qop, "--json"}).out);
    EXPECT_EQ(c["cnot"], 6);
    EXPECT_EQ(c["single_qubit"], 7);

    auto qasm = dir.file("fig.qasm");
    auto r = run({"circuit", "-q", qop, "--t", "0.5", "--qasm", qasm});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("CNOT 6\n"), std::string::npos);
    auto text = support::read_file(qasm);
    EXPECT_EQ(text, emit_qasm(trotter_step(parse_qubit_operator("0.3 X0 Y1 Z2 X4"), 0.5)));
    auto stdout_qasm = run({"circuit", "-q", qop, "--t", "0.5", "--qasm", "-"});
    EXPECT_EQ(stdout_qasm.out, text);

    auto steps = json::parse(run({"circuit", "-i", fixture(), "-m", "bk", "--t", "0.1", "--steps", "2", "--json"}).out);
    EXPECT_EQ(steps["cnot"], 88);
    EXPECT_EQ(steps["steps"], 2);
}

TEST(Cli, ReduceWithElectronCounts) {
    auto bk = run({"reduce", "-i", fixture(), "-m", "bk", "--permute", "spin-block", "--electrons-up", "1",
                   "--electrons-down", "1"});
    auto sp = run({"reduce", "-i", fixture(), "-m", "2sp:w=2", "--permute", "spin-block", "--electrons-up", "1",
                   "--electrons-down", "1"});
    ASSERT_EQ(bk.code, 0) << bk.err;
    ASSERT_EQ(sp.code, 0) << sp.err;
    EXPECT_NE(bk.err.find("q1=-1"), std::string::npos);
    EXPECT_NE(bk.err.find("q3=+1"), std::string::npos);
    EXPECT_NE(sp.err.find("q3=-1"), std::string::npos);
    EXPECT_LE(max_abs_difference(parse_qubit_operator(bk.out), parse_qubit_operator(sp.out)), 1e-12);

    auto manual = run({"reduce", "-i", fixture(), "-m", "bk", "--permute", "spin-block", "--taper", "q=1:-1,3:+1"});
    EXPECT_EQ(manual.out, bk.out);
    auto compact = run({"reduce", "-i", fixture(), "-m", "bk", "--permute", "spin-block", "--taper", "1:-1,3:1",
                        "--compact", "--json"});
    auto j = json::parse(compact.out);
    EXPECT_EQ(j["tapered"].size(), 2u);
    for (const auto &t : j["terms"]) EXPECT_EQ(t["pauli"].get<std::string>().find('2'), std::string::npos);
}

TEST(Cli, ExitCodes) {
    TempDir dir;
    EXPECT_EQ(run({"reduce", "-i", fixture(), "-m", "jw", "--taper", "3:+1"}).code, cli::kSymmetry);
    EXPECT_EQ(run({"verify", "-m", "jw", "-M", "9"}).code, cli::kUnsupported);
    EXPECT_EQ(run({"map", "-i", fixture(), "-m", "msp"}).code, cli::kInvalid);
    EXPECT_EQ(run({"map", "-i", dir.file("missing.ferm"), "-m", "jw"}).code, cli::kInvalid);
    EXPECT_EQ(run({"sets", "-m", "msp:2-2", "-M", "5"}).code, cli::kInvalid);
    EXPECT_EQ(run({"reduce", "-i", fixture(), "-m", "bk", "--taper", "1:2"}).code, cli::kInvalid);
    EXPECT_EQ(run({}).code, cli::kInvalid);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kInvalid);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);

    auto bad = run({"map", "-i", dir.file("bad.ferm", "modes 2\n1.0 0^ 1\nabc 0\n"), "-m", "jw"});
    EXPECT_EQ(bad.code, cli::kInvalid);
    EXPECT_NE(bad.err.find("line 3"), std::string::npos) << bad.err;
    auto range = run({"map", "-i", dir.file("range.ferm", "modes 2\n1.0 0^ 5\n"), "-m", "jw"});
    EXPECT_EQ(range.code, cli::kInvalid);
}
