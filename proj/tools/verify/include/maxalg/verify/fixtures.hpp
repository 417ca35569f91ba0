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

#include <vector>

#include "maxalg/matrix.hpp"

// Worked examples used by the acceptance suite and the CLI fixture run.
namespace maxalg::verify::fixtures {

/// Period-2 swap with damped diagonal.
inline MaxMatrix swap2() { return {{0.5, 1}, {1, 0.5}}; }

// Upper-triangular 2x2 spectra.
inline MaxMatrix diag45() { return {{4, 0}, {0, 5}}; }
inline MaxMatrix upper45() { return {{4, 2}, {0, 5}}; }
inline MaxMatrix upper54() { return {{5, 2}, {0, 4}}; }

/// Critical 2-cycle feeding into a decaying loop on vertex 3.
inline MaxMatrix three_vertex() {
  return {{0.2, 1, 4}, {1, 0.5, 6}, {0, 0, 0.9}};
}
inline MaxMatrix three_vertex_odd_limit() {
  return {{0.5, 1, 5.4}, {1, 0.5, 6}, {0, 0, 0}};
}
inline MaxMatrix three_vertex_even_limit() {
  return {{1, 0.5, 6}, {0.5, 1, 5.4}, {0, 0, 0}};
}

/// Three pairwise commuting 5x5 matrices with periods 3, 3 and 2.
inline std::vector<MaxMatrix> commuting_triple() {
  return {
      {{0, 1, 0, 8, 5}, {0, 0, 1, 5, 8}, {1, 0, 0, 8, 5}, {0, 0, 0, 1, 0.5}, {0, 0, 0, 0.5, 1}},
      {{0, 0, 1, 9, 9}, {1, 0, 0, 9, 9}, {0, 1, 0, 9, 9}, {0, 0, 0, 1, 1}, {0, 0, 0, 1, 1}},
      {{1, 0, 0, 8, 9}, {0, 1, 0, 8, 9}, {0, 0, 1, 8, 9}, {0, 0, 0, 0.8, 1}, {0, 0, 0, 1, 0.8}},
  };
}

/// Two non-commuting matrices sharing the eigenvectors u and v.
inline std::vector<MaxMatrix> shared_eigen_pair() {
  return {
      {{0.9, 0.45, 5, 6, 27}, {0.45, 0.9, 1, 23, 8}, {0, 0, 0.9, 1, 0}, {0, 0, 0, 0.2, 1}, {0, 0, 1, 0, 0}},
      {{1, 1, 27, 6, 2}, {0.5, 1, 17, 3, 23}, {0, 0, 0.4, 1, 0}, {0, 0, 1, 0.8, 1}, {0, 0, 0.9, 1, 0.2}},
  };
}
inline MaxVector shared_u() { return {27, 23, 1, 1, 1}; }
inline MaxVector shared_v() { return {2, 1, 0, 0, 0}; }

}  // namespace maxalg::verify::fixtures
