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

#include <string_view>

namespace corr_radiance {

/// Werner parameter at which entanglement sets in.
inline constexpr double kSeparabilityThreshold = 1.0 / 3.0;

struct DiscordOptions {
    Subsystem measured = Subsystem::Second;
    int grid = 64;
    double tol = 1e-8;
    int max_depth = 50;
};

struct DiscordResult {
    double value = 0.0;  // bits
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2 pi)
    int iterations = 0;
    bool converged = false;
};

enum class CorrelationClass { Classical, DiscordantSeparable, Entangled };

std::string_view to_string(CorrelationClass c);

/// Closed-form discord of the Werner state, in bits.
double discord_werner_closed(double c);

/// Entropic discord with projective measurements on `opts.measured`,
/// minimized over the Bloch sphere by grid search plus coordinate descent.
DiscordResult discord_numeric(const DensityMatrix &rho, const DiscordOptions &opts = {});

/// Conditional entropy sum_j p_j S(rho_{unmeasured|j}) for the projective
/// measurement along the Bloch direction (theta, phi) on `measured`.
double measured_conditional_entropy(const DensityMatrix &rho, Subsystem measured, double theta,
                                    double phi);

double concurrence_closed(double c);

/// Wootters concurrence. The square roots of the eigenvalues of
/// rho (sy x sy) rho* (sy x sy) are taken as the singular values of
/// sqrt(rho) (sy x sy) sqrt(rho)*, which avoids square roots of tiny
/// eigenvalues.
double concurrence_wootters(const DensityMatrix &rho);

/// Inverts the monotone Werner discord map by bisection; the returned c is
/// within `tol` of the exact preimage.
double discord_to_c(double discord, double tol = 1e-9);

CorrelationClass classify_correlations(double c);

}  // namespace corr_radiance
