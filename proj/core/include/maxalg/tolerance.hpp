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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>

namespace maxalg {

/// Two-tier tolerance policy. `exact` guards algebraic identities that only
/// multiply and compare; `structural` guards quantities that went through a
/// log/exp round trip (mu, criticality, eigen-equations).
struct Tolerances {
  double exact = 1e-12;
  double structural = 1e-9;
  /// Entries of a converging power sequence below this are clamped to 0.
  double zero = 1e-9;
};

/// |a - b| <= tol * max(1, |a|, |b|).
inline bool approx_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Equality used when comparing terms of a converging sequence: values
/// below `zero` count as zero, everything else is compared relatively.
inline bool settled_equal(double a, double b, const Tolerances& tol) {
  const bool a_small = a < tol.zero;
  const bool b_small = b < tol.zero;
  if (a_small || b_small) return a_small && b_small;
  return std::abs(a - b) <= tol.exact * std::max(a, b);
}

/// Knobs shared by the iterative routines.
struct IterationOptions {
  /// Overrides the default step cap of 10 * n * q + 100.
  std::optional<std::size_t> max_steps;
  Tolerances tol;
  /// Called once per step with the step index; returning false cancels the
  /// iteration with an InconclusiveError.
  std::function<bool(std::size_t)> progress;
};

inline std::size_t default_max_steps(std::size_t n, std::size_t q_candidate) {
  return 10 * n * std::max<std::size_t>(q_candidate, 1) + 100;
}

inline std::size_t step_cap(const IterationOptions& opts, std::size_t n,
                            std::size_t q_candidate) {
  return opts.max_steps ? *opts.max_steps : default_max_steps(n, q_candidate);
}

}  // namespace maxalg
