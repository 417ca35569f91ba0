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

// Helpers shared by the dynamics translation units. Not installed.

#include <cstddef>
#include <vector>

#include "maxalg/dynamics.hpp"
#include "maxalg/matrix.hpp"
#include "maxalg/tolerance.hpp"

namespace maxalg::detail {

/// Invokes the progress hook; throws InconclusiveError on cancellation.
void tick(const IterationOptions& opts, std::size_t step);

/// x <= y up to a relative tolerance.
bool less_or_close(double x, double y, double tol);

/// gcd over cycle lengths of each strongly connected component that carries
/// a circuit, combined by lcm. 1 for an acyclic graph.
std::size_t boolean_cyclicity(const MaxMatrix& b);

/// lim_k p^k, reached by repeated squaring, with entries below tol.zero
/// clamped to 0. Throws InconclusiveError if squaring does not settle.
MaxMatrix settled_power_limit(const MaxMatrix& p, const IterationOptions& opts);

/// Limits of A^(kq+j) for a q known to be a multiple of the asymptotic
/// period; reduced to the minimal period.
PowerLimit limits_for_period(const MaxMatrix& a, std::size_t q,
                             const IterationOptions& opts);

/// Smallest t such that A^(t+r) matches the limit for r = 0..q-1.
std::size_t transient_index(const MaxMatrix& a,
                            const std::vector<MaxMatrix>& limits,
                            const IterationOptions& opts);

/// Smallest d dividing limits.size() with limits[j] = limits[j + d].
std::size_t sequence_period(const std::vector<MaxMatrix>& limits,
                            const Tolerances& tol);

}  // namespace maxalg::detail
