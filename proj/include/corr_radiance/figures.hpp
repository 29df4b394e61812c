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

#include "corr_radiance/emission.hpp"
#include "corr_radiance/table.hpp"

#include <vector>

namespace corr_radiance {

/// Sweep settings shared by the figure tables. The discord axis is
/// D in [0, 1] with grid_d points and the angle axis is sin(beta) in
/// [-1, 1] with grid_b points, both endpoint-inclusive.
struct FigureConfig {
    double kl = kDefaultKl;
    int grid_d = 101;
    int grid_b = 101;
    double sin_beta = 0.2;

    /// Throws std::invalid_argument on grids < 2, |sin_beta| > 1 or kl <= 1.
    void validate() const;
};

/// n evenly spaced points from lo to hi; the endpoints are exact.
std::vector<double> linear_axis(double lo, double hi, int n);

/// Columns D,c,sin_beta,I; D-major row order.
Table fig2_table(const FigureConfig &cfg);
/// Columns D,c,I_sin_beta_1,I_sin_beta_0.
Table fig3_table(const FigureConfig &cfg);
/// Columns D,c,sin_beta,g2,statistics,flag; undefined g2 leaves the g2
/// field empty and sets flag to "undefined".
Table fig4_table(const FigureConfig &cfg);
/// fig4 columns plus "marker", which reads "crossing" on the first row
/// past each sign change of g2 - 1.
Table fig5_table(const FigureConfig &cfg);
/// Columns sin_beta,kl,c_star,D_t,flag; flag is "found" or "none".
Table transition_table(const FigureConfig &cfg);

}  // namespace corr_radiance
