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

#include "corr_radiance/figures.hpp"
#include "corr_radiance/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace corr_radiance;

namespace {

double num(const Cell &c) { return std::get<double>(c); }
const std::string &str(const Cell &c) { return std::get<std::string>(c); }

std::string csv(const Table &t) {
    std::ostringstream os;
    write_csv(t, os);
    return os.str();
}

const std::vector<Cell> &find_row(const Table &t, double d, double s) {
    for (const auto &row : t.rows) {
        if (std::abs(num(row[0]) - d) < 1e-12 && std::abs(num(row[2]) - s) < 1e-12) return row;
    }
    throw std::runtime_error("row not found");
}

}  // namespace

TEST(Format, TwelveSignificantDigits) {
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_number(2.0), "2");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(1e-20), "1e-20");
    EXPECT_THROW(format_number(std::nan("")), std::domain_error);
}

TEST(Axis, EndpointsExact) {
    const auto a = linear_axis(-1.0, 1.0, 101);
    EXPECT_EQ(a.front(), -1.0);
    EXPECT_EQ(a.back(), 1.0);
    EXPECT_EQ(a[50], 0.0);
    EXPECT_THROW(linear_axis(0.0, 1.0, 1), std::invalid_argument);
}

TEST(Config, Validation) {
    EXPECT_NO_THROW(FigureConfig{}.validate());
    EXPECT_THROW((FigureConfig{.kl = 1.0}.validate()), std::invalid_argument);
    EXPECT_THROW((FigureConfig{.grid_d = 1}.validate()), std::invalid_argument);
    EXPECT_THROW((FigureConfig{.grid_b = 0}.validate()), std::invalid_argument);
    EXPECT_THROW((FigureConfig{.sin_beta = 1.5}.validate()), std::invalid_argument);
}

TEST(Fig2, ShapeAndExamples) {
    FigureConfig cfg;
    cfg.grid_d = 501;  // puts D = 0.126 on the axis
    cfg.grid_b = 3;
    const Table t = fig2_table(cfg);
    EXPECT_EQ(t.columns, (std::vector<std::string>{"D", "c", "sin_beta", "I"}));
    ASSERT_EQ(t.rows.size(), 501u * 3u);
    for (double s : {-1.0, 0.0, 1.0}) EXPECT_EQ(num(find_row(t, 0.0, s)[3]), 1.0);
    EXPECT_NEAR(num(find_row(t, 1.0, 1.0)[3]), 2.0, 1e-12);
    EXPECT_NEAR(num(find_row(t, 0.126, 0.0)[3]), 2.0 / 3.0, 1e-3);
    for (const auto &row : t.rows) {
        EXPECT_GE(num(row[3]), 0.0);
        EXPECT_LE(num(row[3]), 2.0);
    }
}

TEST(Fig2, DefaultRowCount) {
    const Table t = fig2_table({});
    EXPECT_EQ(t.rows.size(), 101u * 101u);
    const std::string text = csv(t);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 101 * 101 + 1);
    EXPECT_EQ(text.rfind("D,c,sin_beta,I\n", 0), 0u);
}

TEST(Fig3, Examples) {
    FigureConfig cfg;
    cfg.grid_d = 501;
    const Table t = fig3_table(cfg);
    ASSERT_EQ(t.rows.size(), 501u);
    EXPECT_EQ(num(t.rows.front()[2]), 1.0);
    EXPECT_EQ(num(t.rows.front()[3]), 1.0);
    EXPECT_NEAR(num(t.rows.back()[2]), 2.0, 1e-12);
    EXPECT_NEAR(num(t.rows.back()[3]), 0.0, 1e-12);
    const auto &mid = t.rows[63];  // D = 0.126
    EXPECT_NEAR(num(mid[0]), 0.126, 1e-15);
    EXPECT_NEAR(num(mid[2]), 4.0 / 3.0, 1e-3);
    EXPECT_NEAR(num(mid[3]), 2.0 / 3.0, 1e-3);
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        EXPECT_GT(num(t.rows[i][2]), num(t.rows[i - 1][2]));
        EXPECT_LT(num(t.rows[i][3]), num(t.rows[i - 1][3]));
    }
}

TEST(Fig4, ExamplesAndUndefinedRows) {
    FigureConfig cfg;
    cfg.grid_b = 11;
    const Table t = fig4_table(cfg);
    ASSERT_EQ(t.rows.size(), 101u * 11u);
    const auto &zero = find_row(t, 0.0, 0.6);
    EXPECT_EQ(num(zero[3]), 1.0);
    EXPECT_EQ(str(zero[4]), "POISSONIAN");

    const auto &full = find_row(t, 1.0, 1.0);
    EXPECT_NEAR(num(full[3]), 0.0, 1e-12);
    EXPECT_EQ(str(full[4]), "SUB_POISSONIAN");

    const auto &near_transition = find_row(t, 0.87, 0.2);
    EXPECT_NEAR(num(near_transition[3]), 1.0, 0.05);

    const auto &undefined = find_row(t, 1.0, 0.0);
    EXPECT_TRUE(std::holds_alternative<std::monostate>(undefined[3]));
    EXPECT_EQ(str(undefined[4]), "UNDEFINED");
    EXPECT_EQ(str(undefined[5]), "undefined");

    const std::string text = csv(t);
    EXPECT_EQ(text.find("nan"), std::string::npos);
    EXPECT_EQ(text.find("inf"), std::string::npos);
    EXPECT_NE(text.find("1,1,0,,UNDEFINED,undefined\n"), std::string::npos);
}

TEST(Fig5, CrossingMarker) {
    const Table t = fig5_table({});
    ASSERT_EQ(t.rows.size(), 101u);
    EXPECT_EQ(num(t.rows.front()[3]), 1.0);
    EXPECT_NEAR(num(t.rows.back()[3]), 0.0, 1e-12);
    int crossings = 0;
    for (const auto &row : t.rows) {
        if (str(row[6]) != "crossing") continue;
        ++crossings;
        EXPECT_NEAR(num(row[0]), 0.87, 1e-12);  // first grid point past D_t = 0.8669
        EXPECT_NEAR(num(row[3]), 1.0, 0.05);
    }
    EXPECT_EQ(crossings, 1);
}

TEST(Transition, FoundAndNone) {
    const Table found = transition_table({});
    ASSERT_EQ(found.rows.size(), 1u);
    EXPECT_NEAR(num(found.rows[0][2]), 0.9442719099991589, 1e-12);
    EXPECT_NEAR(num(found.rows[0][3]), 0.87, 0.01);
    EXPECT_EQ(str(found.rows[0][4]), "found");

    FigureConfig cfg;
    cfg.sin_beta = 1.0;
    const Table none = transition_table(cfg);
    EXPECT_TRUE(std::holds_alternative<std::monostate>(none.rows[0][2]));
    EXPECT_EQ(csv(none), "sin_beta,kl,c_star,D_t,flag\n1,3.14159265359,,,none\n");
}

TEST(Output, DeterministicCsvAndJson) {
    FigureConfig cfg;
    cfg.grid_d = 21;
    cfg.grid_b = 17;
    EXPECT_EQ(csv(fig4_table(cfg)), csv(fig4_table(cfg)));

    std::ostringstream a, b;
    write_json(fig4_table(cfg), a);
    write_json(fig4_table(cfg), b);
    EXPECT_EQ(a.str(), b.str());

    const auto doc = nlohmann::json::parse(a.str());
    EXPECT_EQ(doc["config"]["command"], "fig4");
    EXPECT_EQ(doc["config"]["grid_d"], 21);
    ASSERT_EQ(doc["rows"].size(), 21u * 17u);
    const auto &last = doc["rows"].back();
    EXPECT_EQ(last["D"], 1.0);
    EXPECT_EQ(last["sin_beta"], 1.0);
    EXPECT_EQ(last["statistics"], "SUB_POISSONIAN");
}

TEST(Output, JsonNullForUndefined) {
    FigureConfig cfg;
    cfg.grid_d = 2;
    cfg.grid_b = 3;
    std::ostringstream os;
    write_json(fig4_table(cfg), os);
    const auto doc = nlohmann::json::parse(os.str());
    // Rows: D = 0 then D = 1, sin_beta in {-1, 0, 1}; (1, 0) has zero intensity.
    EXPECT_TRUE(doc["rows"][4]["g2"].is_null());
    EXPECT_EQ(doc["rows"][4]["flag"], "undefined");
}

TEST(Verify, DefaultsPass) {
    const auto results = run_verification({});
    EXPECT_GE(results.size(), 20u);
    for (const auto &r : results) EXPECT_TRUE(r.passed) << r.name << " " << r.max_deviation;
    EXPECT_TRUE(all_passed(results));
}

TEST(Verify, ZeroToleranceFails) {
    VerifyOptions opts;
    opts.tolerance_override = 0.0;
    EXPECT_FALSE(all_passed(run_verification(opts)));
}

TEST(Verify, VerdictIndependentOfGrid) {
    VerifyOptions coarse;
    coarse.figure.grid_d = 11;
    const auto a = run_verification(coarse);
    const auto b = run_verification({});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].passed, b[i].passed) << a[i].name;
}
