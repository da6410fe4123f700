// Copyright 2026 The su4geom Authors
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

#ifndef SU4GEOM_VERIFY_HPP
#define SU4GEOM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace su4geom {

enum class VerifyLevel { quick, full };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::quick;
    unsigned workers = 1;
    std::uint64_t seed = 20260101;
    /// Multiplies every Weyl density evaluated by the suite. Anything other than
    /// 1 must make the suite fail; used to test the suite itself.
    double density_scale = 1.0;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Largest observed deviation (or statistic) and the budget it was compared with.
    double observed = 0.0;
    double budget = 0.0;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

VerifyReport run_verification(const VerifyOptions &opts);

}  // namespace su4geom

#endif
