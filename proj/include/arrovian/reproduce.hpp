// Copyright 2026 The Arrovian Agreement Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARROVIAN_REPRODUCE_HPP_
#define ARROVIAN_REPRODUCE_HPP_

#include <string>
#include <vector>

namespace arrovian {

struct CriterionResult {
  int id = 0;
  std::string name;
  /// Checks held and the run finished within `limit_seconds`.
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

inline constexpr int kCriterionCount = 9;

/// Runs acceptance criterion `id` (1-based). Exceptions become failures.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

}  // namespace arrovian

#endif  // ARROVIAN_REPRODUCE_HPP_
