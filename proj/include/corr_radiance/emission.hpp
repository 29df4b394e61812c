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

#pragma once

#include "corr_radiance/qstate.hpp"

#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

namespace corr_radiance {

inline constexpr double kDefaultKl = std::numbers::pi;
inline constexpr double kClassifyTol = 1e-12;
inline constexpr double kUndefinedIntensity = 1e-12;

/// Far-field detection geometry: the dimensionless separation kl and the
/// directional angle beta measured from the plane normal to the atomic axis.
/// Observables depend on the pair only through phase() = kl sin(beta).
class DetectionGeometry {
  public:
    /// Requires kl > 1 and beta in [-pi/2, pi/2].
    DetectionGeometry(double kl, double beta);

    /// Requires kl > 1 and sin_beta in [-1, 1]; sin_beta is stored exactly.
    static DetectionGeometry from_sin_beta(double kl, double sin_beta);

    double kl() const { return kl_; }
    double sin_beta() const { return sin_beta_; }
    double beta() const;
    double phase() const { return kl_ * sin_beta_; }

  private:
    DetectionGeometry() = default;
    double kl_ = kDefaultKl;
    double sin_beta_ = 0.0;
};

/// How the per-atom optical phases alpha_j are assigned. Indexed uses
/// alpha_j = j kl sin(beta); Centered uses atoms at -l/2 and +l/2, i.e.
/// alpha_j = -/+ (kl/2) sin(beta). Both share alpha_2 - alpha_1.
enum class PhaseConvention { Indexed, Centered };

enum class Radiance { Super, Sub, Neutral };
enum class PhotonStatistics { SubPoissonian, Poissonian, SuperPoissonian, Undefined };

std::string_view to_string(Radiance r);
std::string_view to_string(PhotonStatistics s);

struct EmissionReport {
    double intensity = 0.0;
    std::optional<double> g2;
    Radiance radiance = Radiance::Neutral;
    PhotonStatistics statistics = PhotonStatistics::Undefined;
};

/// Dimensionless E+ = sum_j exp(-i alpha_j) sigma^-_j.
CMatrix field_operator(const DetectionGeometry &geom,
                       PhaseConvention convention = PhaseConvention::Indexed);

/// tr(rho E- E+), in units of one excited atom's emission.
double intensity_oracle(const DensityMatrix &rho, const DetectionGeometry &geom,
                        PhaseConvention convention = PhaseConvention::Indexed);

/// tr(rho E-^2 E+^2) / tr(rho E- E+)^2, or nullopt when the intensity is
/// below kUndefinedIntensity.
std::optional<double> g2_oracle(const DensityMatrix &rho, const DetectionGeometry &geom,
                                PhaseConvention convention = PhaseConvention::Indexed);

double intensity_closed_x(const XStateParams &p, const DetectionGeometry &geom);
double intensity_closed_werner(double c, const DetectionGeometry &geom);

/// (1 - c) / [1 - c cos(kl sin beta)]^2, or nullopt when the bracket is
/// below kUndefinedIntensity in magnitude.
std::optional<double> g2_closed_werner(double c, const DetectionGeometry &geom);

EmissionReport classify(double intensity, std::optional<double> g2);

/// All sin(beta) in [-1, 1] with cos(kl sin beta) = 0, ascending.
std::vector<double> radiance_boundary(double kl);

struct StatisticsTransition {
    double c_star = 0.0;      // quadratic root
    double c_bisected = 0.0;  // independent bracketing root of g2 = 1
    double discord = 0.0;     // D_t, bits
};

/// Solves g2_closed_werner(c, geom) = 1 for c in (0, 1). Returns nullopt
/// when no crossing exists, which happens unless cos(kl sin beta) lies in
/// (1/2, 1). Throws std::logic_error if the two roots disagree by more
/// than 1e-8.
std::optional<StatisticsTransition> find_statistics_transition(const DetectionGeometry &geom);

}  // namespace corr_radiance
