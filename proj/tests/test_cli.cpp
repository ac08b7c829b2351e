// Copyright 2026 The daqc-qft Authors
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


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
    int code = -1;
    std::string out;
};

// Runs the CLI with stderr merged into stdout.
Result run(const std::string &args) {
    const std::string cmd = std::string(DAQC_CLI_PATH) + " " + args + " 2>&1";
    Result r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
        r.out += buf.data();
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("daqc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string &name) const { return (dir / name).string(); }
    fs::path dir;
};

TEST_F(Cli, IdealDigitalAndStepwiseRowsAreOne) {
    const Result r = run("sweep-beta --ideal --protocols dqc,sdaqc --qubits 3 --beta-points 5 --out " + path("a.csv"));
    ASSERT_EQ(r.code, 0) << r.out;
    std::istringstream csv(slurp(path("a.csv")));
    std::string line;
    std::getline(csv, line);
    int rows = 0;
    while (std::getline(csv, line)) {
        EXPECT_NE(line.find(",1.000000000,0.000000000,"), std::string::npos) << line;
        ++rows;
    }
    EXPECT_EQ(rows, 10);
    EXPECT_TRUE(fs::exists(path("a.csv.manifest.json")));
}

TEST_F(Cli, FourQubitDaqcIsAnInputError) {
    const Result r = run("sweep-beta --protocols sdaqc --qubits 4 --shots 2 --out " + path("b.csv"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("singular sign matrix for N=4"), std::string::npos) << r.out;
}

TEST_F(Cli, InvalidFlagsAndConfig) {
    EXPECT_EQ(run("sweep-beta --bogus").code, 2);
    EXPECT_EQ(run("sweep-beta --protocols xyz --out " + path("c.csv")).code, 2);
    std::ofstream(path("bad.json")) << R"({"sqgn": 0.1, "extra": 2})";
    EXPECT_EQ(run("sweep-beta --noise-config " + path("bad.json") + " --out " + path("c.csv")).code, 2);
    EXPECT_EQ(run("sweep-beta --noise-config " + path("missing.json") + " --out " + path("c.csv")).code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST_F(Cli, SameSeedGivesByteIdenticalCsvAcrossThreadCounts) {
    const std::string common = "sweep-beta --protocols bdaqc,dqc --qubits 3 --beta-points 3 --shots 12 --seed 9";
    ASSERT_EQ(run("--threads 1 " + common + " --out " + path("t1.csv")).code, 0);
    ASSERT_EQ(run("--threads 3 " + common + " --out " + path("t3.csv")).code, 0);
    ASSERT_EQ(run("--threads 3 " + common + " --out " + path("t3b.csv")).code, 0);
    EXPECT_EQ(slurp(path("t1.csv")), slurp(path("t3.csv")));
    EXPECT_EQ(slurp(path("t3.csv")), slurp(path("t3b.csv")));
}

TEST_F(Cli, ErrorScaleRowCount) {
    const Result r = run("sweep-error-scale --protocols dqc,bdaqc --qubits 3,5 --scales 0,1,2 --shots 3 --out " +
                         path("s.csv"));
    ASSERT_EQ(r.code, 0) << r.out;
    std::istringstream csv(slurp(path("s.csv")));
    std::string line;
    int rows = -1;
    while (std::getline(csv, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 2 * 2 * 3);
}

TEST_F(Cli, CompileQftBlock) {
    const Result r = run("compile --qubits 3 --target qft-block:1");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("1 1 2 -0.098174770\n2 1 3 -0.196349541\n3 2 3 -0.294524311\n"), std::string::npos);
    EXPECT_NE(r.out.find("residual 0.000e+00"), std::string::npos) << r.out;
    const Result b = run("compile --qubits 3 --target qft-block:1 --mode banged --delta-t 0.1");
    ASSERT_EQ(b.code, 0);
    EXPECT_NE(b.out.find("negative_segments yes"), std::string::npos);
    EXPECT_EQ(run("compile --qubits 4 --target qft-block:1").code, 2);
}

TEST_F(Cli, CompileCouplingFile) {
    std::ofstream(path("zero.txt")) << "# no couplings\n";
    const Result z = run("compile --qubits 3 --target " + path("zero.txt"));
    ASSERT_EQ(z.code, 0) << z.out;
    EXPECT_NE(z.out.find("1 1 2 0.000000000\n2 1 3 0.000000000\n3 2 3 0.000000000\n"), std::string::npos);

    std::ofstream(path("homog.txt")) << "1 2 1\n1 3 1\n2 3 1\n";
    const Result h = run("compile --qubits 3 --target " + path("homog.txt"));
    EXPECT_NE(h.out.find("1 1 2 -1.000000000"), std::string::npos) << h.out;

    std::ofstream(path("bad.txt")) << "1 2\n";
    EXPECT_EQ(run("compile --qubits 3 --target " + path("bad.txt")).code, 2);
    std::ofstream(path("order.txt")) << "3 1 0.5\n";
    EXPECT_EQ(run("compile --qubits 3 --target " + path("order.txt")).code, 2);
}

TEST_F(Cli, Nn2ata) {
    const Result four = run("nn2ata --size 4");
    EXPECT_EQ(four.code, 0) << four.out;
    EXPECT_NE(four.out.find("paths 2"), std::string::npos);
    EXPECT_NE(four.out.find("verdict PASS"), std::string::npos);
    const Result six = run("nn2ata --size 6");
    EXPECT_EQ(six.code, 0);
    EXPECT_NE(six.out.find("paths 3"), std::string::npos);
    const Result three = run("nn2ata --size 3");
    EXPECT_EQ(three.code, 1);
    EXPECT_NE(three.out.find("verdict FAIL"), std::string::npos);
}

TEST_F(Cli, PlotFromSweep) {
    ASSERT_EQ(run("sweep-beta --ideal --protocols dqc,sdaqc,bdaqc --qubits 3 --beta-points 4 --out " + path("p.csv"))
                  .code,
              0);
    ASSERT_EQ(run("plot --in " + path("p.csv") + " --x beta --out " + path("p.svg")).code, 0);
    const std::string svg = slurp(path("p.svg"));
    std::size_t count = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) {
        ++count;
    }
    EXPECT_EQ(count, 3u);
    std::ofstream(path("empty.csv")) << "";
    EXPECT_EQ(run("plot --in " + path("empty.csv") + " --out " + path("e.svg")).code, 2);
}

}  // namespace
