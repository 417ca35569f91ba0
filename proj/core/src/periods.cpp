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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <queue>

#include "detail.hpp"
#include "maxalg/dynamics.hpp"
#include "maxalg/error.hpp"
#include "maxalg/graph.hpp"
#include "maxalg/spectral.hpp"

namespace maxalg {

namespace detail {

void tick(const IterationOptions& opts, std::size_t step) {
  if (opts.progress && !opts.progress(step)) {
    throw InconclusiveError("iteration cancelled at step " + std::to_string(step));
  }
}

bool less_or_close(double x, double y, double tol) {
  return x <= y + tol * std::max(1.0, std::abs(y));
}

std::size_t boolean_cyclicity(const MaxMatrix& b) {
  const Digraph g = to_digraph(b);
  const auto adj = g.adjacency();
  std::size_t period = 1;
  std::vector<std::size_t> comp_of(g.n);
  const auto sccs = strongly_connected_components(g);
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    for (std::size_t v : sccs[c]) comp_of[v] = c;
  }
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    const auto& comp = sccs[c];
    if (comp.size() == 1 && b(comp[0], comp[0]) == 0.0) continue;

    // BFS levels inside the component; every intra-component edge u -> v
    // closes a cycle-length discrepancy of level(u) + 1 - level(v).
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> level(g.n, unseen);
    std::queue<std::size_t> frontier;
    level[comp[0]] = 0;
    frontier.push(comp[0]);
    std::size_t g_comp = 0;
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v : adj[u]) {
        if (comp_of[v] != c) continue;
        if (level[v] == unseen) {
          level[v] = level[u] + 1;
          frontier.push(v);
        } else {
          const auto diff = static_cast<long long>(level[u]) + 1 -
                            static_cast<long long>(level[v]);
          g_comp = std::gcd(g_comp, static_cast<std::size_t>(std::llabs(diff)));
        }
      }
    }
    period = lcm(period, g_comp);
  }
  return period;
}

}  // namespace detail

std::size_t gcd_all(const std::vector<std::size_t>& values) {
  std::size_t g = 0;
  for (std::size_t v : values) g = std::gcd(g, v);
  return g;
}

std::size_t lcm(std::size_t a, std::size_t b) { return std::lcm(a, b); }

std::vector<std::size_t> divisors(std::size_t q) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= q; ++d) {
    if (q % d == 0) out.push_back(d);
  }
  return out;
}

std::string_view to_string(PeriodMethod m) {
  switch (m) {
    case PeriodMethod::boolean_gcd:
      return "boolean_gcd";
    case PeriodMethod::iteration_oracle:
      return "iteration_oracle";
  }
  return "unknown";
}

std::string_view to_string(OracleOutcome o) {
  switch (o) {
    case OracleOutcome::cycle:
      return "cycle";
    case OracleOutcome::converges_to_zero:
      return "converges_to_zero";
    case OracleOutcome::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

PeriodReport boolean_period(const MaxMatrix& b, const IterationOptions& opts) {
  if (!b.is_boolean()) {
    throw PreconditionError("boolean_period: entries must be 0 or 1");
  }
  const std::size_t n = b.size();
  const std::size_t q = detail::boolean_cyclicity(b);
  // Boolean transients are at most (n-1)^2 + 1.
  const std::size_t cap =
      opts.max_steps ? *opts.max_steps : std::max(default_max_steps(n, q), n * n + q);

  std::vector<MaxMatrix> powers{MaxMatrix::identity(n)};
  for (std::size_t t = 0;; ++t) {
    while (powers.size() <= t + q) {
      if (powers.size() > cap) {
        throw InconclusiveError("boolean_period: no transient found within " +
                                std::to_string(cap) + " steps");
      }
      detail::tick(opts, powers.size());
      powers.push_back(max_mul(powers.back(), b));
    }
    if (powers[t + q] == powers[t]) return {q, t, PeriodMethod::boolean_gcd};
  }
}

PeriodReport elsner_period(const MaxMatrix& a, const IterationOptions& opts) {
  if (!is_irreducible(a)) throw PreconditionError("elsner_period: matrix is reducible");
  const double m = mu(a);
  if (!approx_equal(m, 1.0, opts.tol.structural)) {
    throw PreconditionError("elsner_period: mu = " + std::to_string(m) +
                            ", expected 1");
  }
  const MaxMatrix scaled = dad_scale(a, MaxVector(a.size(), 1.0), opts.tol).scaled;
  const std::size_t q =
      detail::boolean_cyclicity(bool_residual_split(scaled).boolean_part);

  const std::size_t cap = step_cap(opts, a.size(), q);
  std::vector<MaxMatrix> powers{MaxMatrix::identity(a.size())};
  std::size_t t0 = 0;
  for (;; ++t0) {
    while (powers.size() <= t0 + q) {
      if (powers.size() > cap) {
        throw InconclusiveError("elsner_period: powers not periodic within " +
                                std::to_string(cap) + " steps");
      }
      detail::tick(opts, powers.size());
      powers.push_back(max_mul(powers.back(), a));
    }
    if (approx_equal(powers[t0 + q], powers[t0], opts.tol.exact)) break;
  }
  for (std::size_t d : divisors(q)) {
    if (d < q && approx_equal(powers[t0 + d], powers[t0], opts.tol.exact)) {
      throw InconclusiveError("elsner_period: critical cyclicity " + std::to_string(q) +
                              " disagrees with observed period " + std::to_string(d));
    }
  }
  return {q, t0, PeriodMethod::boolean_gcd};
}

namespace {

bool exactly_equal_within(const MaxMatrix& x, const MaxMatrix& y, double tol) {
  auto xe = x.entries();
  auto ye = y.entries();
  for (std::size_t k = 0; k < xe.size(); ++k) {
    if (std::abs(xe[k] - ye[k]) > tol * std::max(xe[k], ye[k])) return false;
  }
  return true;
}

}  // namespace

MaxMatrix OracleTrace::power(std::size_t t) const {
  if (t == 0) return MaxMatrix::identity(powers.front().size());
  if (t > powers.size()) {
    throw PreconditionError("oracle trace holds powers up to " +
                            std::to_string(powers.size()));
  }
  return powers[t - 1];
}

OracleTrace oracle_iterate(const MaxMatrix& a, std::size_t max_steps,
                           const IterationOptions& opts) {
  if (max_steps < 1) throw PreconditionError("oracle_iterate: max_steps must be >= 1");
  const Tolerances& tol = opts.tol;
  OracleTrace trace;
  const MaxMatrix id = MaxMatrix::identity(a.size());
  auto nth = [&](std::size_t t) -> const MaxMatrix& {
    return t == 0 ? id : trace.powers[t - 1];
  };

  for (std::size_t t = 1; t <= max_steps; ++t) {
    detail::tick(opts, t);
    trace.powers.push_back(t == 1 ? a : max_mul(trace.powers.back(), a));
    const MaxMatrix& p = trace.powers.back();

    if (!p.is_zero() && clamp_small(p, tol).is_zero()) {
      trace.outcome = OracleOutcome::converges_to_zero;
      trace.zero_step = t;
      return trace;
    }
    for (std::size_t s = 0; s < t; ++s) {
      if (settled_equal(p, nth(s), tol)) {
        trace.outcome = OracleOutcome::cycle;
        trace.t0 = s;
        trace.q = t - s;
        trace.exact = exactly_equal_within(p, nth(s), tol.exact);
        return trace;
      }
    }
  }
  return trace;
}

}  // namespace maxalg
