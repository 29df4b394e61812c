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

#include "corr_radiance/figures.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace corr_radiance {

/// One oracle-equivalence or invariant check. A suite passes when
/// max_deviation <= tolerance, or < tolerance for strict suites (used by the
/// strict-monotonicity and sign checks, whose deviation is a signed margin).
struct SuiteResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool strict = false;
    std::size_t samples = 0;
    bool passed = false;
};

struct VerifyOptions {
    FigureConfig figure;
    /// Replaces every suite tolerance; 0 turns any nonzero deviation into a
    /// failure, which is how the harness is self-tested.
    std::optional<double> tolerance_override;
};

std::vector<SuiteResult> run_verification(const VerifyOptions &opts);

bool all_passed(const std::vector<SuiteResult> &results);

Table verification_table(const std::vector<SuiteResult> &results, const VerifyOptions &opts);

}  // namespace corr_radiance
