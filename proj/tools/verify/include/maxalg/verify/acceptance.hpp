/*
 *   Copyright 2026 The maxalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

namespace maxalg::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// First failing check, or a short summary when passed.
  std::string detail;
};

/// Runs every acceptance criterion in order. Deterministic: random suites
/// use fixed seeds.
std::vector<CriterionResult> run_acceptance();

/// One line per criterion: "PASS  3 three-vertex limits: ...".
std::string format_line(const CriterionResult& r);

}  // namespace maxalg::verify
