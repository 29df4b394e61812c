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

#include "corr_radiance/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace corr_radiance {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClassSnap = 1e-12;
// Eigenvalues of rho below this are treated as exact zeros when forming sqrt(rho).
constexpr double kRankCutoff = 1e-14;
// Refinement only counts as converged once the pattern step is below this (radians).
constexpr double kFineStep = 1e-6;

void require_unit_interval(double c, const char *what) {
    if (!(c >= 0.0 && c <= 1.0)) {
        std::ostringstream os;
        os << what << " must lie in [0, 1], got " << c;
        throw std::invalid_argument(os.str());
    }
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Entropy of a 2x2 Hermitian, trace-normalized block, from its closed-form
// eigenvalues.
double qubit_entropy(const Eigen::Matrix2cd &m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    const double mean = 0.5 * (a + d);
    return -xlog2x(mean + half_gap) - xlog2x(mean - half_gap);
}

double wrap_phi(double phi) {
    double w = std::fmod(phi, 2.0 * kPi);
    if (w < 0.0) w += 2.0 * kPi;
    if (w >= 2.0 * kPi) w = 0.0;
    return w;
}

}  // namespace

std::string_view to_string(CorrelationClass c) {
    switch (c) {
    case CorrelationClass::Classical:
        return "CLASSICAL";
    case CorrelationClass::DiscordantSeparable:
        return "DISCORDANT_SEPARABLE";
    case CorrelationClass::Entangled:
        return "ENTANGLED";
    }
    return "UNKNOWN";
}

double discord_werner_closed(double c) {
    require_unit_interval(c, "Werner parameter c");
    return 0.25 * xlog2x(1.0 - c) - 0.5 * xlog2x(1.0 + c) + 0.25 * xlog2x(1.0 + 3.0 * c);
}

double measured_conditional_entropy(const DensityMatrix &rho, Subsystem measured, double theta,
                                    double phi) {
    if (rho.dim() != 4) throw std::invalid_argument("discord requires a two-qubit state");
    const CMatrix &m = rho.matrix();
    const Eigen::Vector2cd up(std::cos(theta / 2.0),
                              std::polar(1.0, phi) * std::sin(theta / 2.0));
    const Eigen::Vector2cd down(-std::polar(1.0, -phi) * std::sin(theta / 2.0),
                                std::cos(theta / 2.0));

    double total = 0.0;
    for (const Eigen::Vector2cd &v : {up, down}) {
        // Unnormalized post-measurement state of the other qubit:
        // block(i, j) = sum_{k,l} conj(v_k) rho(.., ..) v_l.
        Eigen::Matrix2cd block = Eigen::Matrix2cd::Zero();
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int k = 0; k < 2; ++k) {
                    for (int l = 0; l < 2; ++l) {
                        const Complex entry = measured == Subsystem::Second
                                                  ? m(2 * i + k, 2 * j + l)
                                                  : m(2 * k + i, 2 * l + j);
                        block(i, j) += std::conj(v(k)) * entry * v(l);
                    }
                }
            }
        }
        const double p = block.trace().real();
        if (p > 1e-15) total += p * qubit_entropy(block / p);
    }
    return total;
}

DiscordResult discord_numeric(const DensityMatrix &rho, const DiscordOptions &opts) {
    if (rho.dim() != 4) throw std::invalid_argument("discord requires a two-qubit state");
    if (opts.grid < 2) throw std::invalid_argument("discord grid must be at least 2");
    if (!(opts.tol >= 0.0)) throw std::invalid_argument("discord tolerance must be >= 0");

    const auto objective = [&](double theta, double phi) {
        return measured_conditional_entropy(rho, opts.measured, theta, phi);
    };

    // Strict '<' keeps the lexicographically smallest (theta, phi) on ties.
    const double dtheta = kPi / (opts.grid - 1);
    const double dphi = 2.0 * kPi / opts.grid;
    double best = objective(0.0, 0.0);
    double theta = 0.0;
    double phi = 0.0;
    for (int i = 0; i < opts.grid; ++i) {
        for (int j = 0; j < opts.grid; ++j) {
            const double t = i * dtheta;
            const double f = j * dphi;
            const double value = objective(t, f);
            if (value < best) {
                best = value;
                theta = t;
                phi = f;
            }
        }
    }

    DiscordResult result;
    double step_theta = dtheta;
    double step_phi = dphi;
    for (int depth = 1; depth <= opts.max_depth; ++depth) {
        result.iterations = depth;
        const double start = best;
        bool moved = true;
        for (int moves = 0; moved && moves < 64; ++moves) {
            moved = false;
            for (int axis = 0; axis < 2; ++axis) {
                for (double sign : {-1.0, 1.0}) {
                    const double t = axis == 0 ? std::clamp(theta + sign * step_theta, 0.0, kPi)
                                               : theta;
                    const double f = axis == 1 ? wrap_phi(phi + sign * step_phi) : phi;
                    const double value = objective(t, f);
                    if (value < best - opts.tol * 1e-3) {
                        best = value;
                        theta = t;
                        phi = f;
                        moved = true;
                    }
                }
            }
        }
        const bool fine = step_theta <= kFineStep;
        step_theta *= 0.5;
        step_phi *= 0.5;
        if (fine && start - best < opts.tol) {
            result.converged = true;
            break;
        }
    }

    const DensityMatrix kept = partial_trace(rho, opts.measured);
    result.value = von_neumann_entropy(kept) - von_neumann_entropy(rho) + best;
    result.theta = theta;
    result.phi = phi;
    return result;
}

double concurrence_closed(double c) {
    require_unit_interval(c, "Werner parameter c");
    return std::max(0.0, 0.5 * (3.0 * c - 1.0));
}

double concurrence_wootters(const DensityMatrix &rho) {
    if (rho.dim() != 4) throw std::invalid_argument("concurrence requires a two-qubit state");
    const CMatrix h = 0.5 * (rho.matrix() + rho.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver failed to converge");
    }
    const double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
    RVector roots = eig.eigenvalues().unaryExpr(
        [scale](double v) { return v > kRankCutoff * scale ? std::sqrt(v) : 0.0; });
    const CMatrix sqrt_rho =
        eig.eigenvectors() * roots.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();

    const CMatrix yy = kron(pauli_y(), pauli_y());
    const CMatrix a = sqrt_rho * yy * sqrt_rho.conjugate();
    Eigen::JacobiSVD<CMatrix> svd(a);
    const RVector s = svd.singularValues();  // descending
    return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double discord_to_c(double discord, double tol) {
    if (!(discord >= 0.0 && discord <= 1.0)) {
        std::ostringstream os;
        os << "discord " << discord << " outside the attained range [0, 1]";
        throw std::invalid_argument(os.str());
    }
    if (!(tol > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
    if (discord == 0.0) return 0.0;
    if (discord == 1.0) return 1.0;
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (discord_werner_closed(mid) < discord) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

CorrelationClass classify_correlations(double c) {
    require_unit_interval(c, "Werner parameter c");
    if (c == 0.0) return CorrelationClass::Classical;
    if (c <= kSeparabilityThreshold + kClassSnap) return CorrelationClass::DiscordantSeparable;
    return CorrelationClass::Entangled;
}

}  // namespace corr_radiance
