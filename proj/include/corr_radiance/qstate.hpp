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

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string>

namespace corr_radiance {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Two-qubit basis order is |ee>, |eg>, |ge>, |gg> with |e> = [1,0]^T and
// |g> = [0,1]^T. Qubit 1 is the left Kronecker factor.
enum class Subsystem { First = 1, Second = 2 };

inline constexpr double kTraceTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kXStatePositivityTol = 1e-12;

/// Correlation coefficients (c_x, c_y, c_z) of a Bell-diagonal X state
/// rho = (I + sum_i c_i sigma_i (x) sigma_i) / 4.
struct XStateParams {
    double cx = 0.0;
    double cy = 0.0;
    double cz = 0.0;
};

/// Werner mixing parameter, 0 <= c <= 1. Equivalent to the X state with
/// cx = cy = cz = -c.
class WernerParam {
  public:
    explicit WernerParam(double c);
    double c() const { return c_; }

  private:
    double c_;
};

struct ValidationReport {
    double trace_deviation = 0.0;
    double hermiticity_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool passed = false;

    std::string describe() const;
};

/// Checks the density-matrix invariants: unit trace, Hermiticity and
/// positivity, each within its tolerance. Throws std::invalid_argument for
/// non-square input.
ValidationReport validate_density(const CMatrix &m);

/// A validated, immutable 2x2 or 4x4 density matrix.
class DensityMatrix {
  public:
    /// Throws std::invalid_argument with the validation report when `m` is
    /// not a valid state or has a dimension other than 2 or 4.
    explicit DensityMatrix(CMatrix m);

    const CMatrix &matrix() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }

    /// Ascending eigenvalues.
    RVector eigenvalues() const;

  private:
    CMatrix mat_;
};

/// Fails with std::invalid_argument naming every negative Bell-diagonal
/// eigenvalue expression.
DensityMatrix make_x_state(const XStateParams &p);
DensityMatrix make_werner(const WernerParam &w);

/// Returns the four Bell-diagonal eigenvalues in the order
/// (1-cx-cy-cz)/4, (1-cx+cy+cz)/4, (1+cx-cy+cz)/4, (1+cx+cy-cz)/4.
std::array<double, 4> bell_eigenvalues(const XStateParams &p);
bool is_valid_x_state(const XStateParams &p);

DensityMatrix partial_trace(const DensityMatrix &rho, Subsystem keep);

/// Entropy in bits, with 0 log 0 := 0.
double von_neumann_entropy(const DensityMatrix &rho);
double shannon_entropy_bits(const RVector &probabilities);

/// sigma^-_j = |g><e| embedded at slot j of the two-qubit space.
CMatrix sigma_minus(int atom);

/// tr[(|e>_1<e| + |e>_2<e|) rho].
double excitation_probability(const DensityMatrix &rho);

// Small helpers shared by the other modules.
CMatrix kron(const CMatrix &a, const CMatrix &b);
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
RVector hermitian_eigenvalues(const CMatrix &m);
CVector basis_state(int index, int dim = 4);

}  // namespace corr_radiance
