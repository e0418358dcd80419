// Copyright 2026 The sowig Authors
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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using sowig::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("sowig_cli_" + std::string(
                                                              ::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string prefix(const std::string &name) const { return (dir_ / name).string(); }
    std::size_t file_count() const {
        std::size_t n = 0;
        for ([[maybe_unused]] const auto &e : fs::directory_iterator(dir_)) ++n;
        return n;
    }
    fs::path dir_;
};

}  // namespace

TEST(cli, checksum) {
    EXPECT_EQ(sowig::cli::fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(sowig::cli::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST_F(CliTest, coeffs_table) {
    const Result r = invoke({"coeffs", "--n", "2", "--alpha", "3", "--out", prefix("t")});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string text = slurp(prefix("t") + ".coeffs.csv");
    EXPECT_NE(text.find("j,C,D,K\n0,4,-4,2\n1,-4,5,2.2360679774997898\n2,1,,\n"), std::string::npos);
    EXPECT_NE(text.find("# sum_C = 1\n"), std::string::npos);
    EXPECT_NE(text.find("# input_checksum = fnv1a64:"), std::string::npos);

    ASSERT_EQ(invoke({"coeffs", "--n", "4", "--alpha", "1", "--out", prefix("u")}).code, 0);
    EXPECT_NE(slurp(prefix("u") + ".coeffs.csv").find("0,1,0,0\n1,0,0,0\n2,0,1,1\n3,0,,\n4,0,,\n"), std::string::npos);
}

TEST_F(CliTest, invalid_parameters_exit_2) {
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"coeffs", "--n", "3"},
             {"coeffs", "--alpha", "0.5"},
             {"wigner", "--preset", "fig9"},
             {"wigner", "--map", "rainbow"},
             {"wigner", "--grid", "0:1"},
             {"coeffs", "--bogus"},
             {},
         }) {
        std::vector<std::string> a = args;
        a.push_back("--out");
        a.push_back(prefix("x"));
        if (args.empty()) a.clear();
        const Result r = invoke(a);
        EXPECT_EQ(r.code, 2) << r.err;
        EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    }
    EXPECT_EQ(file_count(), 0u);
}

TEST_F(CliTest, undersampled_grid_exit_3) {
    const Result r = invoke({"wigner", "--preset", "fig1", "--grid", "-0.2:0.2:21,-0.2:0.2:21", "--out", prefix("g")});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(file_count(), 0u);
    const Result ok = invoke(
        {"wigner", "--preset", "fig1", "--grid", "-0.2:0.2:21,-0.2:0.2:21", "--allow-undersampled", "--out", prefix("g")});
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_NE(ok.err.find("warning"), std::string::npos);
    EXPECT_TRUE(fs::exists(prefix("g") + ".csv"));
}

TEST_F(CliTest, wigner_outputs) {
    const Result r = invoke({"wigner", "--preset", "fig1", "--format", "csv", "--format", "pgm", "--map", "signed",
                             "--out", prefix("w")});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string csv = slurp(prefix("w") + ".csv");
    EXPECT_NE(csv.find("# preset = fig1\n"), std::string::npos);
    EXPECT_NE(csv.find("# resolved_grid = "), std::string::npos);
    EXPECT_EQ(slurp(prefix("w") + ".pgm").substr(0, 3), "P5\n");
    EXPECT_TRUE(fs::exists(prefix("w") + ".state"));

    const Result cut = invoke({"wigner", "--preset", "fig1", "--cut", "p", "--map", "logabs", "--out", prefix("w")});
    ASSERT_EQ(cut.code, 0) << cut.err;
    EXPECT_NE(slurp(prefix("w") + ".cut.csv").find("\np,W,logabs\n"), std::string::npos);

    const Result at = invoke({"wigner", "--preset", "cat", "--delta-x", "3", "--at", "0,0"});
    ASSERT_EQ(at.code, 0) << at.err;
    EXPECT_EQ(at.out.rfind("W(0, 0) = 0.3183098", 0), 0u) << at.out;
}

TEST_F(CliTest, repeated_runs_are_byte_identical) {
    for (const std::string name : {"a", "b"}) {
        ASSERT_EQ(invoke({"wigner", "--preset", "fig2b", "--format", "csv", "--format", "pgm", "--out", prefix(name)}).code,
                  0);
    }
    // Only the echoed output prefix may differ.
    auto without_prefix = [](std::string text, const std::string &name) {
        const std::string line = "# out = " + name;
        return text.erase(text.find(line), line.size() + 1);
    };
    for (const std::string ext : {".csv", ".pgm"}) {
        const std::string a = slurp(prefix("a") + ext), b = slurp(prefix("b") + ext);
        EXPECT_EQ(without_prefix(a, prefix("a")), without_prefix(b, prefix("b"))) << ext;
    }
}

TEST_F(CliTest, precedence_flags_over_file_over_preset) {
    const fs::path cfg = dir_ / "run.cfg";
    std::ofstream(cfg) << "# scenario\npreset = fig2b\nxi = 0.3\nalpha = 11\n";

    ASSERT_EQ(invoke({"wigner", "--config", cfg.string(), "--alpha", "7", "--cut", "p", "--out", prefix("a")}).code, 0);
    const std::string a = slurp(prefix("a") + ".cut.csv");
    EXPECT_NE(a.find("# preset = fig2b\n# n = 12\n# alpha = 7\n# xi = 0.29999999999999999\n"), std::string::npos) << a;

    ASSERT_EQ(invoke({"wigner", "--config", cfg.string(), "--preset", "fig1", "--cut", "p", "--out", prefix("b")}).code,
              0);
    const std::string b = slurp(prefix("b") + ".cut.csv");
    EXPECT_NE(b.find("# preset = fig1\n# n = 8\n# alpha = 11\n# xi = 0.29999999999999999\n"), std::string::npos) << b;

    EXPECT_EQ(invoke({"wigner", "--config", (dir_ / "missing.cfg").string()}).code, 2);
}

TEST_F(CliTest, analyze_reports) {
    const Result r = invoke({"analyze", "--preset", "fig1", "--out", prefix("r")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("alpha_est"), std::string::npos);
    EXPECT_NE(r.out.find("satisfied"), std::string::npos);
    const std::string report = slurp(prefix("r") + ".report");
    EXPECT_NE(report.find("\nalpha_est = 9.8"), std::string::npos);

    const Result cat = invoke({"analyze", "--preset", "cat", "--out", prefix("c")});
    ASSERT_EQ(cat.code, 0) << cat.err;
    EXPECT_NE(cat.out.find("overspill check skipped"), std::string::npos);

    const Result wide = invoke({"analyze", "--preset", "fig1", "--xi", "3", "--out", prefix("w")});
    ASSERT_EQ(wide.code, 0) << wide.err;
    EXPECT_NE(wide.out.find("VIOLATED"), std::string::npos);
    EXPECT_NE(wide.err.find("warning: overspill condition violated"), std::string::npos);
}

TEST_F(CliTest, validate_gates) {
    const Result r = invoke({"validate", "--preset", "cat", "--points", "10"});
    EXPECT_EQ(r.code, 0) << r.err;
    for (const char *gate : {"oracle", "marginal", "norm", "total_integral"}) {
        EXPECT_NE(r.out.find(gate), std::string::npos) << gate;
    }
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, help_exits_zero) {
    const Result r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("coeffs"), std::string::npos);
}
