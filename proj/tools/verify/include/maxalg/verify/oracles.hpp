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

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "maxalg/matrix.hpp"

// Reference implementations that share no code with the library routines
// they check, plus seeded generators for property runs.
namespace maxalg::verify {

/// Triple loop over k, written against raw entries.
MaxMatrix naive_mul(const MaxMatrix& a, const MaxMatrix& b);

/// Max over all simple circuits of (weight product)^(1/length), by DFS
/// from each start vertex through larger vertices only. Exponential; n <= 8.
double exhaustive_mu(const MaxMatrix& a);

/// All simple circuits, each as its vertex sequence starting at its
/// smallest vertex.
std::vector<std::vector<std::size_t>> simple_circuits(const MaxMatrix& a);

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::size_t dimension(std::size_t lo, std::size_t hi);
  double uniform(double lo, double hi);
  /// Uniform entries in [lo, hi]; each entry zero with probability p_zero.
  MaxMatrix matrix(std::size_t n, double lo, double hi, double p_zero = 0.0);
  /// Entries drawn uniformly from `values`.
  MaxMatrix matrix_from(std::size_t n, const std::vector<double>& values);
  MaxVector vector(std::size_t n, double lo, double hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// (+)_k c_k m^k, k = 0..coeffs.size()-1.
MaxMatrix polynomial(const MaxMatrix& m, const std::vector<double>& coeffs);

}  // namespace maxalg::verify
