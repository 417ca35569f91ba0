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

#include "detail.hpp"
#include "maxalg/dynamics.hpp"
#include "maxalg/error.hpp"
#include "maxalg/graph.hpp"
#include "maxalg/spectral.hpp"

namespace maxalg {

namespace detail {

MaxMatrix settled_power_limit(const MaxMatrix& p, const IterationOptions& opts) {
  // p^(2^s); 64 squarings exceed any transient a double can resolve
  constexpr std::size_t max_squarings = 64;
  MaxMatrix current = p;
  for (std::size_t s = 0; s < max_squarings; ++s) {
    tick(opts, s);
    MaxMatrix next = max_mul(current, current);
    if (settled_equal(next, current, opts.tol)) {
      // one more squaring pushes decaying entries far below the clamp
      return clamp_small(max_mul(next, next), opts.tol);
    }
    current = std::move(next);
  }
  throw InconclusiveError("power sequence did not settle after " +
                          std::to_string(max_squarings) + " squarings");
}

std::size_t sequence_period(const std::vector<MaxMatrix>& limits,
                            const Tolerances& tol) {
  const std::size_t q = limits.size();
  for (std::size_t d : divisors(q)) {
    bool repeats = true;
    for (std::size_t j = 0; j < q && repeats; ++j) {
      repeats = settled_equal(limits[j], limits[(j + d) % q], tol);
    }
    if (repeats) return d;
  }
  return q;
}

std::size_t transient_index(const MaxMatrix& a,
                            const std::vector<MaxMatrix>& limits,
                            const IterationOptions& opts) {
  const std::size_t q = limits.size();
  auto matches_from = [&](std::size_t t) {
    MaxMatrix p = max_pow(a, t);
    for (std::size_t r = 0; r < q; ++r) {
      if (r > 0) p = max_mul(p, a);
      if (!settled_equal(p, limits[(t + r + q - 1) % q], opts.tol)) return false;
    }
    return true;
  };
  if (matches_from(0)) return 0;
  // galloping search, then bisection on (lo, hi]
  std::size_t lo = 0;
  std::size_t hi = 1;
  std::size_t step = 0;
  while (!matches_from(hi)) {
    tick(opts, ++step);
    lo = hi;
    if (hi > (std::size_t{1} << 40)) {
      throw InconclusiveError("transient not reached below 2^40 steps");
    }
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (matches_from(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

PowerLimit limits_for_period(const MaxMatrix& a, std::size_t q,
                             const IterationOptions& opts) {
  const Tolerances& tol = opts.tol;
  const MaxMatrix aq = max_pow(a, q);
  const MaxMatrix base = settled_power_limit(aq, opts);
  if (!settled_equal(max_mul(aq, base), base, tol)) {
    throw InconclusiveError("lim A^(kq) is not invariant under A^q; q = " +
                            std::to_string(q) + " is not a period multiple");
  }

  std::size_t minimal = q;
  for (std::size_t d : divisors(q)) {
    if (settled_equal(max_mul(max_pow(a, d), base), base, tol)) {
      minimal = d;
      break;
    }
  }

  PowerLimit out;
  out.q = minimal;
  MaxMatrix p = MaxMatrix::identity(a.size());
  for (std::size_t j = 1; j <= minimal; ++j) {
    p = max_mul(p, a);
    out.limits.push_back(clamp_small(max_mul(p, base), tol));
  }
  out.t0 = transient_index(a, out.limits, opts);
  return out;
}

}  // namespace detail

const MaxMatrix& PowerLimit::at(std::size_t j) const {
  return limits[(j + q - 1) % q];
}

PowerLimit power_limit(const MaxMatrix& a, const IterationOptions& opts) {
  const double m = mu(a);
  if (!detail::less_or_close(m, 1.0, opts.tol.structural)) {
    throw PreconditionError("power_limit: mu = " + std::to_string(m) +
                            " exceeds 1; powers diverge");
  }
  const FrobeniusForm form = frobenius_form(a);
  std::size_t q = 1;
  for (std::size_t c = 0; c < form.class_count(); ++c) {
    if (form.kinds[c] != BlockKind::irreducible) continue;
    const MaxMatrix block = principal_submatrix(a, form.classes[c]);
    if (!approx_equal(mu(block), 1.0, opts.tol.structural)) continue;
    const MaxMatrix scaled =
        dad_scale(block, MaxVector(block.size(), 1.0), opts.tol).scaled;
    q = lcm(q, elsner_period(scaled, opts).q);
  }
  return detail::limits_for_period(a, q, opts);
}

bool limits_coherent(const MaxMatrix& a, const PowerLimit& limit,
                     const Tolerances& tol) {
  if (limit.limits.size() != limit.q) return false;
  const MaxMatrix aq = max_pow(a, limit.q);
  for (std::size_t j = 1; j <= limit.q; ++j) {
    const MaxMatrix& lj = limit.at(j);
    if (!settled_equal(max_mul(aq, lj), lj, tol)) return false;
    if (!settled_equal(max_mul(a, lj), limit.at(j + 1), tol)) return false;
  }
  return true;
}

PeriodicPoint periodic_point(const MaxMatrix& a, const MaxVector& x,
                             const PowerLimit& limit, std::size_t j,
                             const Tolerances& tol) {
  if (j < 1 || j > limit.q) {
    throw PreconditionError("periodic_point: j = " + std::to_string(j) +
                            " outside 1.." + std::to_string(limit.q));
  }
  if (x.size() != a.size()) {
    throw DimensionError("periodic_point: vector of length " +
                         std::to_string(x.size()) + " for dimension " +
                         std::to_string(a.size()));
  }
  if (std::any_of(x.begin(), x.end(), [](double v) { return !(v >= 0) || !std::isfinite(v); })) {
    throw PreconditionError("periodic_point: x must be nonnegative and finite");
  }
  PeriodicPoint out{max_mul(limit.at(j), x), limit.q};
  for (std::size_t d : divisors(limit.q)) {
    if (settled_equal(max_mul(max_pow(a, d), out.point), out.point, tol)) {
      out.period = d;
      return out;
    }
  }
  throw InconclusiveError("periodic_point: A^q does not fix the limit point");
}

}  // namespace maxalg
