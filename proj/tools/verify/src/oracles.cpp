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

#include "maxalg/verify/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace maxalg::verify {

MaxMatrix naive_mul(const MaxMatrix& a, const MaxMatrix& b) {
  const std::size_t n = a.size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double best = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double p = a(i, k) * b(k, j);
        if (p > best) best = p;
      }
      out[i * n + j] = best;
    }
  }
  return MaxMatrix(n, std::move(out));
}

namespace {

void extend(const MaxMatrix& a, std::size_t start, std::vector<std::size_t>& path,
            std::vector<bool>& on_path, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t u = path.back();
  for (std::size_t v = start; v < a.size(); ++v) {
    if (a(u, v) == 0.0) continue;
    if (v == start) {
      out.push_back(path);
    } else if (!on_path[v]) {
      on_path[v] = true;
      path.push_back(v);
      extend(a, start, path, on_path, out);
      path.pop_back();
      on_path[v] = false;
    }
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> simple_circuits(const MaxMatrix& a) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> on_path(a.size(), false);
  for (std::size_t s = 0; s < a.size(); ++s) {
    std::vector<std::size_t> path{s};
    on_path[s] = true;
    extend(a, s, path, on_path, out);
    on_path[s] = false;
  }
  return out;
}

double exhaustive_mu(const MaxMatrix& a) {
  double best = 0.0;
  for (const auto& c : simple_circuits(a)) {
    double w = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) w *= a(c[k], c[(k + 1) % c.size()]);
    best = std::max(best, std::pow(w, 1.0 / static_cast<double>(c.size())));
  }
  return best;
}

std::size_t Generator::dimension(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

double Generator::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

MaxMatrix Generator::matrix(std::size_t n, double lo, double hi, double p_zero) {
  std::bernoulli_distribution zero(p_zero);
  std::vector<double> e(n * n);
  for (double& x : e) x = zero(rng_) ? 0.0 : uniform(lo, hi);
  return MaxMatrix(n, std::move(e));
}

MaxMatrix Generator::matrix_from(std::size_t n, const std::vector<double>& values) {
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  std::vector<double> e(n * n);
  for (double& x : e) x = values[pick(rng_)];
  return MaxMatrix(n, std::move(e));
}

MaxVector Generator::vector(std::size_t n, double lo, double hi) {
  MaxVector v(n);
  for (double& x : v) x = uniform(lo, hi);
  return v;
}

MaxMatrix polynomial(const MaxMatrix& m, const std::vector<double>& coeffs) {
  MaxMatrix out(m.size());
  MaxMatrix p = MaxMatrix::identity(m.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) p = naive_mul(p, m);
    out = max_add(out, scale(p, coeffs[k]));
  }
  return out;
}

}  // namespace maxalg::verify
