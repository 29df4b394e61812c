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

#include "corr_radiance/correlations.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace corr_radiance {
namespace {

struct DiscordSample {
    double discord;
    double c;
};

std::vector<DiscordSample> discord_axis(int n) {
    std::vector<DiscordSample> out;
    out.reserve(n);
    for (double d : linear_axis(0.0, 1.0, n)) out.push_back({d, discord_to_c(d)});
    return out;
}

nlohmann::ordered_json echo(const char *command, const FigureConfig &cfg) {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["kl"] = std::stod(format_number(cfg.kl));
    j["grid_d"] = cfg.grid_d;
    j["grid_b"] = cfg.grid_b;
    j["sin_beta"] = std::stod(format_number(cfg.sin_beta));
    return j;
}

std::vector<Cell> g2_cells(double d, double c, double sin_beta, double kl) {
    const auto geom = DetectionGeometry::from_sin_beta(kl, sin_beta);
    const auto g2 = g2_closed_werner(c, geom);
    const auto report = classify(intensity_closed_werner(c, geom), g2);
    std::vector<Cell> row{d, c, sin_beta};
    if (g2) {
        row.emplace_back(*g2);
    } else {
        row.emplace_back(std::monostate{});
    }
    row.emplace_back(std::string(to_string(report.statistics)));
    row.emplace_back(std::string(g2 ? "ok" : "undefined"));
    return row;
}

}  // namespace

void FigureConfig::validate() const {
    std::ostringstream os;
    if (!(kl > 1.0)) os << " kl must be > 1 (got " << kl << ");";
    if (grid_d < 2) os << " grid_d must be >= 2 (got " << grid_d << ");";
    if (grid_b < 2) os << " grid_b must be >= 2 (got " << grid_b << ");";
    if (!(sin_beta >= -1.0 && sin_beta <= 1.0)) {
        os << " sin_beta must lie in [-1, 1] (got " << sin_beta << ");";
    }
    if (!os.str().empty()) throw std::invalid_argument("invalid configuration:" + os.str());
}

std::vector<double> linear_axis(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("axis needs at least 2 points");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

Table fig2_table(const FigureConfig &cfg) {
    cfg.validate();
    Table t;
    t.columns = {"D", "c", "sin_beta", "I"};
    t.config = echo("fig2", cfg);
    const auto angles = linear_axis(-1.0, 1.0, cfg.grid_b);
    for (const auto &[d, c] : discord_axis(cfg.grid_d)) {
        for (double s : angles) {
            const auto geom = DetectionGeometry::from_sin_beta(cfg.kl, s);
            t.rows.push_back({d, c, s, intensity_closed_werner(c, geom)});
        }
    }
    return t;
}

Table fig3_table(const FigureConfig &cfg) {
    cfg.validate();
    Table t;
    t.columns = {"D", "c", "I_sin_beta_1", "I_sin_beta_0"};
    t.config = echo("fig3", cfg);
    const auto solid = DetectionGeometry::from_sin_beta(cfg.kl, 1.0);
    const auto dashed = DetectionGeometry::from_sin_beta(cfg.kl, 0.0);
    for (const auto &[d, c] : discord_axis(cfg.grid_d)) {
        t.rows.push_back(
            {d, c, intensity_closed_werner(c, solid), intensity_closed_werner(c, dashed)});
    }
    return t;
}

Table fig4_table(const FigureConfig &cfg) {
    cfg.validate();
    Table t;
    t.columns = {"D", "c", "sin_beta", "g2", "statistics", "flag"};
    t.config = echo("fig4", cfg);
    const auto angles = linear_axis(-1.0, 1.0, cfg.grid_b);
    for (const auto &[d, c] : discord_axis(cfg.grid_d)) {
        for (double s : angles) t.rows.push_back(g2_cells(d, c, s, cfg.kl));
    }
    return t;
}

Table fig5_table(const FigureConfig &cfg) {
    cfg.validate();
    Table t;
    t.columns = {"D", "c", "sin_beta", "g2", "statistics", "flag", "marker"};
    t.config = echo("fig5", cfg);
    int last_sign = 0;
    for (const auto &[d, c] : discord_axis(cfg.grid_d)) {
        auto row = g2_cells(d, c, cfg.sin_beta, cfg.kl);
        const auto &stats = std::get<std::string>(row[4]);
        int sign = 0;
        if (stats == to_string(PhotonStatistics::SuperPoissonian)) sign = 1;
        if (stats == to_string(PhotonStatistics::SubPoissonian)) sign = -1;
        const bool crossing = sign != 0 && last_sign != 0 && sign != last_sign;
        if (sign != 0) last_sign = sign;
        row.emplace_back(std::string(crossing ? "crossing" : ""));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table transition_table(const FigureConfig &cfg) {
    cfg.validate();
    Table t;
    t.columns = {"sin_beta", "kl", "c_star", "D_t", "flag"};
    t.config = echo("transition", cfg);
    const auto geom = DetectionGeometry::from_sin_beta(cfg.kl, cfg.sin_beta);
    if (const auto tr = find_statistics_transition(geom)) {
        t.rows.push_back({cfg.sin_beta, cfg.kl, tr->c_star, tr->discord, std::string("found")});
    } else {
        t.rows.push_back({cfg.sin_beta, cfg.kl, std::monostate{}, std::monostate{},
                          std::string("none")});
    }
    return t;
}

}  // namespace corr_radiance
