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

#include "corr_radiance/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace corr_radiance {

WernerParam::WernerParam(double c) : c_(c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        std::ostringstream os;
        os << "Werner parameter c must lie in [0, 1], got " << c;
        throw std::invalid_argument(os.str());
    }
}

std::string ValidationReport::describe() const {
    std::ostringstream os;
    os << (passed ? "valid" : "invalid") << " density matrix: |tr-1|=" << trace_deviation
       << ", max|A-A^H|=" << hermiticity_deviation << ", min eigenvalue=" << min_eigenvalue;
    return os.str();
}

RVector hermitian_eigenvalues(const CMatrix &m) {
    // Symmetrize so round-off in the strictly Hermitian part cannot leak in.
    CMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver failed to converge");
    }
    return solver.eigenvalues();
}

ValidationReport validate_density(const CMatrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        std::ostringstream os;
        os << "density matrix must be square, got " << m.rows() << "x" << m.cols();
        throw std::invalid_argument(os.str());
    }
    ValidationReport report;
    report.trace_deviation = std::abs(m.trace() - Complex(1.0, 0.0));
    report.hermiticity_deviation = (m - m.adjoint()).cwiseAbs().maxCoeff();
    report.min_eigenvalue = hermitian_eigenvalues(m).minCoeff();
    report.passed = report.trace_deviation <= kTraceTol &&
                    report.hermiticity_deviation <= kHermitianTol &&
                    report.min_eigenvalue >= -kPositivityTol;
    return report;
}

DensityMatrix::DensityMatrix(CMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || (mat_.rows() != 2 && mat_.rows() != 4)) {
        std::ostringstream os;
        os << "density matrix must be 2x2 or 4x4, got " << mat_.rows() << "x" << mat_.cols();
        throw std::invalid_argument(os.str());
    }
    const ValidationReport report = validate_density(mat_);
    if (!report.passed) {
        throw std::invalid_argument(report.describe());
    }
}

RVector DensityMatrix::eigenvalues() const { return hermitian_eigenvalues(mat_); }

std::array<double, 4> bell_eigenvalues(const XStateParams &p) {
    return {(1.0 - p.cx - p.cy - p.cz) / 4.0, (1.0 - p.cx + p.cy + p.cz) / 4.0,
            (1.0 + p.cx - p.cy + p.cz) / 4.0, (1.0 + p.cx + p.cy - p.cz) / 4.0};
}

bool is_valid_x_state(const XStateParams &p) {
    for (double c : {p.cx, p.cy, p.cz}) {
        if (!(std::abs(c) <= 1.0)) return false;
    }
    const auto ev = bell_eigenvalues(p);
    return std::all_of(ev.begin(), ev.end(),
                       [](double v) { return v >= -kXStatePositivityTol; });
}

DensityMatrix make_x_state(const XStateParams &p) {
    std::ostringstream errors;
    for (auto [name, c] : {std::pair{"cx", p.cx}, std::pair{"cy", p.cy}, std::pair{"cz", p.cz}}) {
        if (!(std::abs(c) <= 1.0)) errors << " " << name << "=" << c << " outside [-1, 1];";
    }
    static constexpr const char *kExpressions[4] = {
        "(1-cx-cy-cz)/4", "(1-cx+cy+cz)/4", "(1+cx-cy+cz)/4", "(1+cx+cy-cz)/4"};
    const auto ev = bell_eigenvalues(p);
    for (int i = 0; i < 4; ++i) {
        if (ev[i] < -kXStatePositivityTol) {
            errors << " eigenvalue " << kExpressions[i] << " = " << ev[i] << " < 0;";
        }
    }
    if (!errors.str().empty()) {
        throw std::invalid_argument("invalid X-state parameters:" + errors.str());
    }

    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = m(3, 3) = (1.0 + p.cz) / 4.0;
    m(1, 1) = m(2, 2) = (1.0 - p.cz) / 4.0;
    m(0, 3) = m(3, 0) = (p.cx - p.cy) / 4.0;
    m(1, 2) = m(2, 1) = (p.cx + p.cy) / 4.0;
    return DensityMatrix(std::move(m));
}

DensityMatrix make_werner(const WernerParam &w) {
    return make_x_state({-w.c(), -w.c(), -w.c()});
}

DensityMatrix partial_trace(const DensityMatrix &rho, Subsystem keep) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("partial_trace requires a two-qubit (4x4) state");
    }
    const CMatrix &m = rho.matrix();
    CMatrix out = CMatrix::Zero(2, 2);
    // Index of |a b> is 2a + b.
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                out(i, j) += keep == Subsystem::First ? m(2 * i + k, 2 * j + k)
                                                      : m(2 * k + i, 2 * k + j);
            }
        }
    }
    return DensityMatrix(std::move(out));
}

double shannon_entropy_bits(const RVector &probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    // Roundoff can leave tiny negative eigenvalues; they carry no entropy.
    const double s = shannon_entropy_bits(rho.eigenvalues());
    return std::clamp(s, 0.0, std::log2(static_cast<double>(rho.dim())));
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

CMatrix pauli_y() {
    CMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

CVector basis_state(int index, int dim) {
    if (index < 0 || index >= dim) throw std::out_of_range("basis index out of range");
    CVector v = CVector::Zero(dim);
    v(index) = 1.0;
    return v;
}

CMatrix sigma_minus(int atom) {
    if (atom != 1 && atom != 2) {
        throw std::invalid_argument("atom index must be 1 or 2, got " + std::to_string(atom));
    }
    CMatrix lower = CMatrix::Zero(2, 2);
    lower(1, 0) = 1.0;  // |g><e|
    const CMatrix id = CMatrix::Identity(2, 2);
    return atom == 1 ? kron(lower, id) : kron(id, lower);
}

double excitation_probability(const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("excitation_probability requires a two-qubit state");
    }
    CMatrix excited = CMatrix::Zero(2, 2);
    excited(0, 0) = 1.0;
    const CMatrix id = CMatrix::Identity(2, 2);
    const CMatrix n = kron(excited, id) + kron(id, excited);
    return (n * rho.matrix()).trace().real();
}

}  // namespace corr_radiance
