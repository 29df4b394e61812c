// Copyright 2026 The corr-radiance Authors
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
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
};

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("corr_radiance_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    CliRun run(const std::string &args) {
        const fs::path capture = dir_ / "stdout.txt";
        const std::string cmd = std::string(CORR_RADIANCE_CLI) + " " + args + " > " +
                                capture.string() + " 2> " + (dir_ / "stderr.txt").string();
        const int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(capture)};
    }

    static std::string slurp(const fs::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }

    fs::path dir_;
};

long lines(const std::string &s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_F(CliTest, HelpSucceeds) { EXPECT_EQ(run("--help").exit_code, 0); }

TEST_F(CliTest, InvalidArgumentsExitOne) {
    EXPECT_EQ(run("").exit_code, 1);
    EXPECT_EQ(run("fig6").exit_code, 1);
    EXPECT_EQ(run("fig2 --grid-d 1").exit_code, 1);
    EXPECT_EQ(run("fig2 --kl 0.5").exit_code, 1);
    EXPECT_EQ(run("fig5 --sin-beta 1.2").exit_code, 1);
    EXPECT_EQ(run("fig2 --format xml").exit_code, 1);
    EXPECT_EQ(run("fig2 --grid-b abc").exit_code, 1);
}

TEST_F(CliTest, IoErrorExitsThree) {
    EXPECT_EQ(run("fig3 --out " + (dir_ / "missing" / "x.csv").string()).exit_code, 3);
}

TEST_F(CliTest, Fig2FileIsDeterministic) {
    const fs::path a = dir_ / "a.csv";
    const fs::path b = dir_ / "b.csv";
    ASSERT_EQ(run("fig2 --grid-d 13 --grid-b 7 --out " + a.string()).exit_code, 0);
    ASSERT_EQ(run("fig2 --grid-d 13 --grid-b 7 --out " + b.string()).exit_code, 0);
    const std::string text = slurp(a);
    EXPECT_EQ(text, slurp(b));
    EXPECT_EQ(lines(text), 13 * 7 + 1);
    EXPECT_EQ(text.substr(0, text.find('\n')), "D,c,sin_beta,I");
}

TEST_F(CliTest, Fig4JsonShape) {
    const CliRun r = run("fig4 --grid-d 5 --grid-b 4 --format json");
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["rows"].size(), 20u);
    EXPECT_EQ(doc["config"]["grid_b"], 4);
    EXPECT_EQ(doc["columns"].size(), 6u);
}

TEST_F(CliTest, TransitionRecords) {
    CliRun r = run("transition");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "sin_beta,kl,c_star,D_t,flag\n0.2,3.14159265359,0.944271909999,"
                     "0.866851815724,found\n");
    r = run("transition --sin-beta 1");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find(",,none"), std::string::npos);
}

TEST_F(CliTest, VerifyExitCodes) {
    const CliRun ok = run("verify");
    EXPECT_EQ(ok.exit_code, 0) << ok.out;
    EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(run("verify --grid-d 11").exit_code, 0);
    EXPECT_EQ(run("verify --tolerance-override 0").exit_code, 2);
}
