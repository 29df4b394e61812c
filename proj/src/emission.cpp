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

#include "corr_radiance/emission.hpp"

#include "corr_radiance/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace corr_radiance {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBisectionTol = 1e-10;
constexpr double kRootAgreement = 1e-8;
constexpr int kBracketSamples = 1000;

void require_kl(double kl) {
    if (!(kl > 1.0) || !std::isfinite(kl)) {
        std::ostringstream os;
        os << "kl must be finite and > 1, got " << kl;
        throw std::invalid_argument(os.str());
    }
}

void require_werner(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        std::ostringstream os;
        os << "Werner parameter c must lie in [0, 1], got " << c;
        throw std::invalid_argument(os.str());
    }
}

double g2_minus_one(double c, double cos_phase) {
    const double bracket = 1.0 - c * cos_phase;
    return (1.0 - c) / (bracket * bracket) - 1.0;
}

}  // namespace

DetectionGeometry::DetectionGeometry(double kl, double beta) {
    require_kl(kl);
    if (!(beta >= -kPi / 2.0 && beta <= kPi / 2.0)) {
        std::ostringstream os;
        os << "beta must lie in [-pi/2, pi/2], got " << beta;
        throw std::invalid_argument(os.str());
    }
    kl_ = kl;
    sin_beta_ = std::sin(beta);
}

DetectionGeometry DetectionGeometry::from_sin_beta(double kl, double sin_beta) {
    require_kl(kl);
    if (!(sin_beta >= -1.0 && sin_beta <= 1.0)) {
        std::ostringstream os;
        os << "sin(beta) must lie in [-1, 1], got " << sin_beta;
        throw std::invalid_argument(os.str());
    }
    DetectionGeometry g;
    g.kl_ = kl;
    g.sin_beta_ = sin_beta;
    return g;
}

double DetectionGeometry::beta() const { return std::asin(sin_beta_); }

std::string_view to_string(Radiance r) {
    switch (r) {
    case Radiance::Super:
        return "SUPER";
    case Radiance::Sub:
        return "SUB";
    case Radiance::Neutral:
        return "NEUTRAL";
    }
    return "UNKNOWN";
}

std::string_view to_string(PhotonStatistics s) {
    switch (s) {
    case PhotonStatistics::SubPoissonian:
        return "SUB_POISSONIAN";
    case PhotonStatistics::Poissonian:
        return "POISSONIAN";
    case PhotonStatistics::SuperPoissonian:
        return "SUPER_POISSONIAN";
    case PhotonStatistics::Undefined:
        return "UNDEFINED";
    }
    return "UNKNOWN";
}

CMatrix field_operator(const DetectionGeometry &geom, PhaseConvention convention) {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    if (convention == PhaseConvention::Indexed) {
        alpha1 = geom.phase();
        alpha2 = 2.0 * geom.phase();
    } else {
        alpha1 = -0.5 * geom.phase();
        alpha2 = 0.5 * geom.phase();
    }
    return std::polar(1.0, -alpha1) * sigma_minus(1) + std::polar(1.0, -alpha2) * sigma_minus(2);
}

double intensity_oracle(const DensityMatrix &rho, const DetectionGeometry &geom,
                        PhaseConvention convention) {
    if (rho.dim() != 4) throw std::invalid_argument("intensity requires a two-qubit state");
    const CMatrix e_plus = field_operator(geom, convention);
    const Complex value = (rho.matrix() * e_plus.adjoint() * e_plus).trace();
    return value.real();
}

std::optional<double> g2_oracle(const DensityMatrix &rho, const DetectionGeometry &geom,
                                PhaseConvention convention) {
    if (rho.dim() != 4) throw std::invalid_argument("g2 requires a two-qubit state");
    const CMatrix e_plus = field_operator(geom, convention);
    const CMatrix e_minus = e_plus.adjoint();
    const double intensity = (rho.matrix() * e_minus * e_plus).trace().real();
    if (intensity < kUndefinedIntensity) return std::nullopt;
    const double pair = (rho.matrix() * e_minus * e_minus * e_plus * e_plus).trace().real();
    return pair / (intensity * intensity);
}

double intensity_closed_x(const XStateParams &p, const DetectionGeometry &geom) {
    return 1.0 + 0.5 * (p.cx + p.cy) * std::cos(geom.phase());
}

double intensity_closed_werner(double c, const DetectionGeometry &geom) {
    require_werner(c);
    return 1.0 - c * std::cos(geom.phase());
}

std::optional<double> g2_closed_werner(double c, const DetectionGeometry &geom) {
    require_werner(c);
    const double bracket = 1.0 - c * std::cos(geom.phase());
    if (std::abs(bracket) < kUndefinedIntensity) return std::nullopt;
    return (1.0 - c) / (bracket * bracket);
}

EmissionReport classify(double intensity, std::optional<double> g2) {
    if (!(intensity >= 0.0)) {
        std::ostringstream os;
        os << "intensity must be >= 0, got " << intensity;
        throw std::invalid_argument(os.str());
    }
    EmissionReport report;
    report.intensity = intensity;
    report.g2 = g2;
    if (intensity > 1.0 + kClassifyTol) {
        report.radiance = Radiance::Super;
    } else if (intensity < 1.0 - kClassifyTol) {
        report.radiance = Radiance::Sub;
    } else {
        report.radiance = Radiance::Neutral;
    }
    if (!g2) {
        report.statistics = PhotonStatistics::Undefined;
    } else if (*g2 > 1.0 + kClassifyTol) {
        report.statistics = PhotonStatistics::SuperPoissonian;
    } else if (*g2 < 1.0 - kClassifyTol) {
        report.statistics = PhotonStatistics::SubPoissonian;
    } else {
        report.statistics = PhotonStatistics::Poissonian;
    }
    return report;
}

std::vector<double> radiance_boundary(double kl) {
    require_kl(kl);
    std::vector<double> roots;
    // kl sin(beta) = pi/2 + n pi, n = -N-1 .. N.
    const int n_max = static_cast<int>(std::floor(kl / kPi)) + 1;
    for (int n = -n_max - 1; n <= n_max; ++n) {
        const double s = (kPi / 2.0 + n * kPi) / kl;
        if (std::abs(s) <= 1.0 + 1e-15) roots.push_back(std::clamp(s, -1.0, 1.0));
    }
    return roots;
}

std::optional<StatisticsTransition> find_statistics_transition(const DetectionGeometry &geom) {
    const double cos_phase = std::cos(geom.phase());
    // c* = (2 cos - 1) / cos^2 lies in (0, 1) only for cos in (1/2, 1).
    if (!(cos_phase > 0.5 && cos_phase < 1.0)) return std::nullopt;
    StatisticsTransition t;
    t.c_star = (2.0 * cos_phase - 1.0) / (cos_phase * cos_phase);
    if (!(t.c_star > 0.0 && t.c_star < 1.0)) return std::nullopt;

    // Bracket the first sign change of g2 - 1 on a uniform scan, then bisect.
    double lo = 0.0;
    double hi = 0.0;
    bool bracketed = false;
    // g2 - 1 = c (2 cos - 1) + O(c^2), so the scan starts positive at c = 0+.
    double prev_c = 0.0;
    double prev = 1.0;
    for (int i = 1; i <= kBracketSamples; ++i) {
        const double c = static_cast<double>(i) / kBracketSamples;
        const double value = g2_minus_one(c, cos_phase);
        if ((prev > 0.0) != (value > 0.0)) {
            lo = prev_c;
            hi = c;
            bracketed = true;
            break;
        }
        prev_c = c;
        prev = value;
    }
    if (!bracketed) {
        throw std::logic_error("transition root exists but g2 - 1 never changes sign on the scan");
    }
    const bool lo_positive = lo == 0.0 || g2_minus_one(lo, cos_phase) > 0.0;
    while (hi - lo > kBisectionTol) {
        const double mid = 0.5 * (lo + hi);
        if ((g2_minus_one(mid, cos_phase) > 0.0) == lo_positive) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    t.c_bisected = 0.5 * (lo + hi);
    if (std::abs(t.c_bisected - t.c_star) > kRootAgreement) {
        std::ostringstream os;
        os << "transition roots disagree: quadratic " << t.c_star << ", bisection "
           << t.c_bisected;
        throw std::logic_error(os.str());
    }
    t.discord = discord_werner_closed(t.c_star);
    return t;
}

}  // namespace corr_radiance
