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

#include "maxalg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maxalg/error.hpp"

namespace maxalg {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

bool less_or_close(double x, double y, double tol) {
  return x <= y + tol * std::max(1.0, std::abs(y));
}

// Karp's maximum mean cycle on log-weights, restricted to one strongly
// connected component. Returns -inf if the component carries no circuit.
double max_log_mean_in_component(const MaxMatrix& a,
                                 const std::vector<std::size_t>& comp) {
  const std::size_t m = comp.size();
  if (m == 1 && a(comp[0], comp[0]) == 0.0) return neg_inf;

  struct LocalEdge {
    std::size_t from;
    std::size_t to;
    double log_weight;
  };
  std::vector<LocalEdge> edges;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      const double w = a(comp[u], comp[v]);
      if (w > 0) edges.push_back({u, v, std::log(w)});
    }
  }

  // walk[k][v]: heaviest k-edge walk from local vertex 0 to v
  std::vector<std::vector<double>> walk(m + 1, std::vector<double>(m, neg_inf));
  walk[0][0] = 0.0;
  for (std::size_t k = 1; k <= m; ++k) {
    for (const auto& e : edges) {
      if (walk[k - 1][e.from] == neg_inf) continue;
      walk[k][e.to] = std::max(walk[k][e.to], walk[k - 1][e.from] + e.log_weight);
    }
  }

  double best = neg_inf;
  for (std::size_t v = 0; v < m; ++v) {
    if (walk[m][v] == neg_inf) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < m; ++k) {
      if (walk[k][v] == neg_inf) continue;
      worst = std::min(worst, (walk[m][v] - walk[k][v]) /
                                  static_cast<double>(m - k));
    }
    best = std::max(best, worst);
  }
  return best;
}

MaxVector column(const MaxMatrix& a, std::size_t k) {
  MaxVector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a(i, k);
  return v;
}

MaxVector normalized(MaxVector v) {
  const double top = *std::max_element(v.begin(), v.end());
  if (top > 0) {
    for (double& x : v) x /= top;
  }
  return v;
}

// Vertices of `block` (local indices) lying on a critical circuit of it.
std::vector<std::size_t> local_critical_vertices(const MaxMatrix& block,
                                                 const Tolerances& tol) {
  if (block.size() == 1) return {0};
  return critical_graph(block, tol).critical_vertices;
}

std::optional<MaxVector> eigen_witness(const MaxMatrix& a,
                                       const FrobeniusForm& form,
                                       std::size_t cls, double lambda,
                                       const Tolerances& tol) {
  const std::size_t n = a.size();
  if (lambda > 0) {
    const MaxMatrix star = kleene_star(scale(a, 1.0 / lambda));
    const auto& members = form.classes[cls];
    const MaxMatrix block = principal_submatrix(a, members);
    for (std::size_t local : local_critical_vertices(block, tol)) {
      MaxVector v = normalized(column(star, members[local]));
      if (eigen_residual(a, v, lambda) <= tol.structural) return v;
    }
    return std::nullopt;
  }
  // lambda = 0: a unit vector on an upstream vertex with a zero column.
  for (std::size_t c = 0; c < form.class_count(); ++c) {
    if (!form.access[c][cls]) continue;
    for (std::size_t u : form.classes[c]) {
      bool zero_column = true;
      for (std::size_t i = 0; i < n && zero_column; ++i) zero_column = a(i, u) == 0.0;
      if (!zero_column) continue;
      MaxVector v(n, 0.0);
      v[u] = 1.0;
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

double mu(const MaxMatrix& a) {
  double best = neg_inf;
  for (const auto& comp : strongly_connected_components(to_digraph(a))) {
    best = std::max(best, max_log_mean_in_component(a, comp));
  }
  if (best == neg_inf) return 0.0;
  const double karp = std::exp(best);
  // exp(log) loses the last bits; prefer a short circuit's mean when it ties
  double short_circuit = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    short_circuit = std::max(short_circuit, a(i, i));
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      short_circuit = std::max(short_circuit, std::sqrt(a(i, j) * a(j, i)));
    }
  }
  return approx_equal(short_circuit, karp, 1e-12) ? short_circuit : karp;
}

MuBounds mu_bounds(const MaxMatrix& a) {
  double lower = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto r = a.row(i);
    lower = std::min(lower, *std::max_element(r.begin(), r.end()));
  }
  return {lower, a.max_entry()};
}

CriticalGraph critical_graph(const MaxMatrix& a, const Tolerances& tol) {
  const double m = mu(a);
  if (m == 0.0) {
    throw PreconditionError("critical_graph: matrix has no circuits (mu = 0)");
  }
  const std::size_t n = a.size();
  const MaxMatrix b = scale(a, 1.0 / m);
  const MaxMatrix plus = max_mul(b, kleene_star(b));

  CriticalGraph cg;
  cg.mu = m;
  std::vector<double> crit(n * n, 0.0);
  std::vector<bool> vertex(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) == 0.0) continue;
      // heaviest closed walk through (i, j) has weight 1 iff the edge is
      // on a circuit of mean mu
      if (approx_equal(b(i, j) * plus(j, i), 1.0, tol.structural)) {
        cg.critical_edges.emplace_back(i, j);
        crit[i * n + j] = a(i, j);
        vertex[i] = vertex[j] = true;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (vertex[v]) cg.critical_vertices.push_back(v);
  }
  cg.critical_matrix = MaxMatrix(n, std::move(crit));
  return cg;
}

std::vector<double> SpectralReport::eigenvalues() const {
  std::vector<double> out;
  out.reserve(eigenpairs.size());
  for (const auto& p : eigenpairs) out.push_back(p.value);
  return out;
}

double eigen_residual(const MaxMatrix& a, const MaxVector& v, double lambda) {
  const MaxVector av = max_mul(a, v);
  const double top = std::max(1e-300, *std::max_element(v.begin(), v.end()));
  double worst = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    worst = std::max(worst, std::abs(av[i] - lambda * v[i]));
  }
  return worst / (top * std::max(1.0, lambda));
}

SpectralReport spectrum(const MaxMatrix& a, const Tolerances& tol) {
  SpectralReport report;
  report.form = frobenius_form(a);
  const auto& form = report.form;
  const std::size_t m = form.class_count();

  std::vector<double> class_mu(m, 0.0);
  for (std::size_t c = 0; c < m; ++c) {
    if (form.kinds[c] == BlockKind::irreducible) {
      class_mu[c] = mu(principal_submatrix(a, form.classes[c]));
    }
  }
  report.mu = m ? *std::max_element(class_mu.begin(), class_mu.end()) : 0.0;

  for (std::size_t c = 0; c < m; ++c) {
    bool admissible = true;
    for (std::size_t j = 0; j < m && admissible; ++j) {
      if (j == c || !form.access[j][c]) continue;
      if (!less_or_close(class_mu[j], class_mu[c], tol.structural)) admissible = false;
    }
    report.classes.push_back({c, class_mu[c], admissible});
  }

  std::vector<std::size_t> order(m);
  for (std::size_t c = 0; c < m; ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return class_mu[x] < class_mu[y]; });

  for (std::size_t c : order) {
    if (!report.classes[c].admissible) continue;
    const double lambda = class_mu[c];
    const bool seen = std::any_of(
        report.eigenpairs.begin(), report.eigenpairs.end(),
        [&](const Eigenpair& p) { return approx_equal(p.value, lambda, tol.structural); });
    if (seen) continue;
    if (auto v = eigen_witness(a, form, c, lambda, tol)) {
      report.eigenpairs.push_back({lambda, c, std::move(*v)});
    }
  }
  return report;
}

MaxVector principal_eigenvector(const MaxMatrix& a, const Tolerances& tol) {
  if (!is_irreducible(a)) {
    throw PreconditionError(
        "principal_eigenvector: matrix is reducible; use spectrum instead");
  }
  const CriticalGraph cg = critical_graph(a, tol);
  const MaxMatrix star = kleene_star(scale(a, 1.0 / cg.mu));
  for (std::size_t k : cg.critical_vertices) {
    MaxVector v = normalized(column(star, k));
    if (eigen_residual(a, v, cg.mu) <= tol.structural) return v;
  }
  throw InconclusiveError("principal_eigenvector: no critical column verified");
}

DadScaling dad_scale(const MaxMatrix& a, const MaxVector& seed,
                     const Tolerances& tol) {
  const std::size_t n = a.size();
  if (seed.size() != n) {
    throw DimensionError("dad_scale: seed of length " + std::to_string(seed.size()) +
                         " for dimension " + std::to_string(n));
  }
  if (std::any_of(seed.begin(), seed.end(), [](double x) { return !(x >= 0) || !std::isfinite(x); })) {
    throw PreconditionError("dad_scale: seed must be nonnegative and finite");
  }
  if (std::all_of(seed.begin(), seed.end(), [](double x) { return x == 0.0; })) {
    throw PreconditionError("dad_scale: seed must be nonzero");
  }
  if (!is_irreducible(a)) throw PreconditionError("dad_scale: matrix is reducible");
  const double m = mu(a);
  if (!less_or_close(m, 1.0, tol.structural)) {
    throw PreconditionError("dad_scale: mu = " + std::to_string(m) + " exceeds 1");
  }

  DadScaling out{max_mul(kleene_star(a), seed), MaxMatrix(n)};
  std::vector<double> scaled(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double v = a(i, j) * out.d[j] / out.d[i];
      if (std::abs(v - 1.0) <= tol.structural) v = 1.0;
      if (v > 1.0) {
        throw InconclusiveError("dad_scale: scaled entry exceeds 1");
      }
      scaled[i * n + j] = v;
    }
  }
  out.scaled = MaxMatrix(n, std::move(scaled));
  return out;
}

CommutingMuReport check_commuting_mu(const MaxMatrix& a, const MaxMatrix& b,
                                     const Tolerances& tol) {
  const MaxMatrix ab = max_mul(a, b);
  const MaxMatrix ba = max_mul(b, a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!approx_equal(ab(i, j), ba(i, j), tol.exact)) {
        throw PreconditionError(
            "matrices do not commute: entry (" + std::to_string(i + 1) + "," +
            std::to_string(j + 1) + ") of A*B is " + std::to_string(ab(i, j)) +
            " but of B*A is " + std::to_string(ba(i, j)));
      }
    }
  }
  CommutingMuReport r{};
  const double mu_a = mu(a);
  const double mu_b = mu(b);
  r.mu_product = mu(ab);
  r.product_of_mu = mu_a * mu_b;
  r.mu_sum = mu(max_add(a, b));
  r.max_of_mu = std::max(mu_a, mu_b);
  r.product_bound_holds = less_or_close(r.mu_product, r.product_of_mu, tol.structural);
  r.sum_bound_holds = less_or_close(r.mu_sum, r.max_of_mu, tol.structural);
  r.both_irreducible = is_irreducible(a) && is_irreducible(b);
  r.product_equal = approx_equal(r.mu_product, r.product_of_mu, tol.structural);
  r.sum_equal = approx_equal(r.mu_sum, r.max_of_mu, tol.structural);
  return r;
}

}  // namespace maxalg
