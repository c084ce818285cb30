// Copyright 2026 The pingpong-ghz Authors
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

#ifndef PINGPONG_VERIFY_H
#define PINGPONG_VERIFY_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pingpong/attack.h"

namespace pingpong {

enum class CheckGroup { table1, equations, properties };

std::string_view check_group_name(CheckGroup group);
CheckGroup parse_check_group(std::string_view name);

struct CheckResult {
    CheckGroup group;
    std::string name;
    bool passed = false;
    std::string detail;  // expected-vs-actual diff on failure
};

struct VerifyOptions {
    std::optional<CheckGroup> only;
    AttackVariant variant = AttackVariant::table;
};

/// The full checklist: 8 encoding-table rows, 8 published states, 12
/// structural and probability properties. Each check is exact.
std::vector<CheckResult> run_checks(const VerifyOptions &options = {});

/// One "PASS"/"FAIL" line per check, failure details indented beneath, then
/// "N checks passed" or "F of N checks failed".
std::string format_checks(const std::vector<CheckResult> &results);

bool all_passed(const std::vector<CheckResult> &results);

}  // namespace pingpong

#endif
