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

#include "corr_radiance/verify.hpp"

#include "corr_radiance/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace corr_radiance {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLowest = -std::numeric_limits<double>::infinity();

// Accumulates the worst deviation seen by one suite.
class Suite {
  public:
    Suite(std::string name, double tolerance, bool strict = false)
        : result_{std::move(name), kLowest, tolerance, strict, 0, false} {}

    void observe(double deviation) {
        ++result_.samples;
        if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
        result_.max_deviation = std::max(result_.max_deviation, deviation);
    }

    SuiteResult finish(const std::optional<double> &override_tol) {
        if (override_tol) result_.tolerance = *override_tol;
        if (result_.samples == 0) {
            result_.max_deviation = std::numeric_limits<double>::infinity();
        }
        result_.passed = result_.strict ? result_.max_deviation < result_.tolerance
                                        : result_.max_deviation <= result_.tolerance;
        return result_;
    }

  private:
    SuiteResult result_;
};

std::vector<XStateParams> x_state_grid(double step) {
    std::vector<XStateParams> out;
    const int n = static_cast<int>(std::lround(2.0 / step));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            for (int k = 0; k <= n; ++k) {
                const XStateParams p{-1.0 + i * step, -1.0 + j * step, -1.0 + k * step};
                if (is_valid_x_state(p)) out.push_back(p);
            }
        }
    }
    return out;
}

std::vector<DetectionGeometry> geometry_grid() {
    std::vector<DetectionGeometry> out;
    for (double kl : {1.5, kPi, 2.0 * kPi, 3.0 * kPi + 0.3, 10.0}) {
        for (double s : linear_axis(-1.0, 1.0, 21)) {
            out.push_back(DetectionGeometry::from_sin_beta(kl, s));
        }
    }
    return out;
}

CMatrix random_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    CMatrix z(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    return qr.householderQ() * CMatrix::Identity(4, 4);
}

double max_abs(const CMatrix &m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions &opts) {
    opts.figure.validate();
    const auto &tol = opts.tolerance_override;
    std::vector<SuiteResult> results;

    const auto x_states = x_state_grid(0.1);
    const auto geometries = geometry_grid();
    const CMatrix half_identity = 0.5 * CMatrix::Identity(2, 2);

    {
        Suite validity("x_state_validity", kPositivityTol);
        Suite marginals("partial_trace_marginals", 1e-12);
        Suite excitation("excitation_probability", 1e-12);
        for (const auto &p : x_states) {
            const auto rho = make_x_state(p);
            const auto report = validate_density(rho.matrix());
            validity.observe(std::max({report.trace_deviation, report.hermiticity_deviation,
                                       -report.min_eigenvalue, report.passed ? 0.0 : 1.0}));
            for (auto keep : {Subsystem::First, Subsystem::Second}) {
                marginals.observe(max_abs(partial_trace(rho, keep).matrix() - half_identity));
            }
            excitation.observe(std::abs(excitation_probability(rho) - 1.0));
        }
        results.push_back(validity.finish(tol));
        results.push_back(marginals.finish(tol));
        results.push_back(excitation.finish(tol));
    }

    {
        Suite entropy("entropy_unitary_invariance", 1e-10);
        std::mt19937_64 rng(20260101);
        std::uniform_int_distribution<std::size_t> pick(0, x_states.size() - 1);
        for (int i = 0; i < 20; ++i) {
            const auto rho = make_x_state(x_states[pick(rng)]);
            const CMatrix u = random_unitary(rng);
            const DensityMatrix rotated(u * rho.matrix() * u.adjoint());
            entropy.observe(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)));
        }
        results.push_back(entropy.finish(tol));
    }

    {
        Suite algebra("sigma_minus_algebra", 0.0);
        const CMatrix s1 = sigma_minus(1);
        const CMatrix s2 = sigma_minus(2);
        algebra.observe(max_abs(s1 * s1));
        algebra.observe(max_abs(s2 * s2));
        algebra.observe(max_abs(s1 * s2 - s2 * s1));
        results.push_back(algebra.finish(tol));
    }

    {
        Suite monotone("discord_monotonicity", 1e-12);
        double prev = discord_werner_closed(0.0);
        for (int i = 1; i <= 1000; ++i) {
            const double d = discord_werner_closed(i * 1e-3);
            monotone.observe(std::max(0.0, prev - d));
            prev = d;
        }
        results.push_back(monotone.finish(tol));
    }

    {
        Suite benchmark("discord_benchmark_c_one_third", 5e-4);
        benchmark.observe(std::abs(discord_werner_closed(1.0 / 3.0) - 0.126));
        results.push_back(benchmark.finish(tol));

        Suite oracle("discord_oracle_equivalence", 1e-4);
        Suite swap("discord_swap_symmetry", 2e-4);
        Suite zero("discord_zero_at_c0", 1e-8);
        for (double c : linear_axis(0.0, 1.0, 11)) {
            const auto rho = make_werner(WernerParam(c));
            const auto second = discord_numeric(rho, {.measured = Subsystem::Second});
            const auto first = discord_numeric(rho, {.measured = Subsystem::First});
            oracle.observe(std::abs(second.value - discord_werner_closed(c)));
            swap.observe(std::abs(second.value - first.value));
            if (c == 0.0) zero.observe(std::abs(second.value));
        }
        results.push_back(oracle.finish(tol));
        results.push_back(swap.finish(tol));
        results.push_back(zero.finish(tol));
    }

    {
        Suite concurrence("concurrence_oracle_equivalence", 1e-10);
        for (double c : linear_axis(0.0, 1.0, 21)) {
            const auto rho = make_werner(WernerParam(c));
            concurrence.observe(std::abs(concurrence_wootters(rho) - concurrence_closed(c)));
        }
        results.push_back(concurrence.finish(tol));

        Suite round_trip("discord_round_trip", 1e-6);
        for (double c : linear_axis(0.0, 1.0, 11)) {
            round_trip.observe(std::abs(discord_to_c(discord_werner_closed(c)) - c));
        }
        results.push_back(round_trip.finish(tol));
    }

    {
        Suite intensity("intensity_oracle_equivalence", 1e-12);
        Suite phase("phase_convention_independence", 1e-12);
        for (const auto &p : x_states) {
            const auto rho = make_x_state(p);
            for (const auto &g : geometries) {
                const double oracle = intensity_oracle(rho, g);
                intensity.observe(std::abs(oracle - intensity_closed_x(p, g)));
                phase.observe(
                    std::abs(oracle - intensity_oracle(rho, g, PhaseConvention::Centered)));
            }
        }
        results.push_back(intensity.finish(tol));

        Suite g2("g2_oracle_equivalence", 1e-12);
        for (double c : linear_axis(0.0, 1.0, 21)) {
            const auto rho = make_werner(WernerParam(c));
            for (const auto &g : geometries) {
                const auto oracle = g2_oracle(rho, g);
                const auto closed = g2_closed_werner(c, g);
                if (oracle && closed) {
                    g2.observe(std::abs(*oracle - *closed));
                    const auto centered = g2_oracle(rho, g, PhaseConvention::Centered);
                    phase.observe(centered ? std::abs(*oracle - *centered) : 1.0);
                } else if (oracle.has_value() != closed.has_value()) {
                    g2.observe(1.0);
                }
            }
        }
        results.push_back(g2.finish(tol));
        results.push_back(phase.finish(tol));
    }

    // Figure-level invariants are stated at kl = pi, the value every figure uses.
    const auto discord_grid = linear_axis(0.0, 1.0, opts.figure.grid_d);
    std::vector<double> c_grid;
    for (double d : discord_grid) c_grid.push_back(discord_to_c(d));
    const auto angle_grid = linear_axis(-1.0, 1.0, opts.figure.grid_b);

    {
        Suite neutral("radiance_boundary_neutrality", 1e-12);
        for (double kl : {kPi, 3.0 * kPi, 2.5}) {
            for (double s : radiance_boundary(kl)) {
                const auto g = DetectionGeometry::from_sin_beta(kl, s);
                for (double c : linear_axis(0.0, 1.0, 11)) {
                    neutral.observe(std::abs(intensity_closed_werner(c, g) - 1.0));
                }
            }
        }
        results.push_back(neutral.finish(tol));

        // Margin < 0 means I > 1 outside |sin b| = 0.5 and I < 1 inside.
        Suite regions("radiance_regions", 0.0, true);
        for (double c : c_grid) {
            if (c == 0.0) continue;
            for (double s : angle_grid) {
                if (std::abs(std::abs(s) - 0.5) < 1e-12) continue;
                const double i = intensity_closed_werner(c, DetectionGeometry::from_sin_beta(kPi, s));
                regions.observe(std::abs(s) > 0.5 ? 1.0 - i : i - 1.0);
            }
        }
        results.push_back(regions.finish(tol));
    }

    {
        Suite enhancement("monotone_enhancement", 0.0, true);
        const auto up = DetectionGeometry::from_sin_beta(kPi, 1.0);
        const auto down = DetectionGeometry::from_sin_beta(kPi, 0.0);
        for (std::size_t k = 1; k < c_grid.size(); ++k) {
            enhancement.observe(intensity_closed_werner(c_grid[k - 1], up) -
                                intensity_closed_werner(c_grid[k], up));
            enhancement.observe(intensity_closed_werner(c_grid[k], down) -
                                intensity_closed_werner(c_grid[k - 1], down));
        }
        results.push_back(enhancement.finish(tol));
    }

    {
        Suite sub_poisson("superradiant_sub_poissonian", 1.0, true);
        Suite nonincreasing("superradiant_g2_nonincreasing", 0.0);
        for (double s : angle_grid) {
            if (!(std::abs(s) > 0.5 + 1e-12)) continue;
            const auto g = DetectionGeometry::from_sin_beta(kPi, s);
            std::optional<double> prev;
            for (double c : c_grid) {
                const auto value = g2_closed_werner(c, g);
                if (!value) {
                    sub_poisson.observe(std::numeric_limits<double>::infinity());
                    continue;
                }
                if (c > 0.0 && c < 1.0) sub_poisson.observe(*value);
                if (prev) nonincreasing.observe(std::max(0.0, *value - *prev));
                prev = value;
            }
        }
        results.push_back(sub_poisson.finish(tol));
        results.push_back(nonincreasing.finish(tol));
    }

    {
        const auto g = DetectionGeometry::from_sin_beta(kPi, 0.2);
        Suite crossing("transition_single_crossing", 0.0);
        int changes = 0;
        int last = 0;
        for (int i = 1; i < 1000; ++i) {
            const double v = *g2_closed_werner(i / 1000.0, g) - 1.0;
            const int sign = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
            if (sign != 0 && last != 0 && sign != last) ++changes;
            if (sign != 0) last = sign;
        }
        crossing.observe(std::abs(changes - 1));
        results.push_back(crossing.finish(tol));

        Suite window("transition_discord_window", 0.01);
        Suite roots("transition_root_agreement", 1e-8);
        if (const auto t = find_statistics_transition(g)) {
            window.observe(std::abs(t->discord - 0.87));
            roots.observe(std::abs(t->c_star - t->c_bisected));
        }
        results.push_back(window.finish(tol));
        results.push_back(roots.finish(tol));
    }

    return results;
}

bool all_passed(const std::vector<SuiteResult> &results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult &r) { return r.passed; });
}

Table verification_table(const std::vector<SuiteResult> &results, const VerifyOptions &opts) {
    Table t;
    t.columns = {"suite", "samples", "max_deviation", "tolerance", "comparison", "status"};
    t.config["command"] = "verify";
    t.config["grid_d"] = opts.figure.grid_d;
    t.config["grid_b"] = opts.figure.grid_b;
    if (opts.tolerance_override) {
        t.config["tolerance_override"] = std::stod(format_number(*opts.tolerance_override));
    }
    for (const auto &r : results) {
        Cell deviation = std::isfinite(r.max_deviation) ? Cell(r.max_deviation)
                                                        : Cell(std::string("inf"));
        t.rows.push_back({r.name, static_cast<double>(r.samples), deviation, r.tolerance,
                          std::string(r.strict ? "<" : "<="),
                          std::string(r.passed ? "PASS" : "FAIL")});
    }
    return t;
}

}  // namespace corr_radiance
