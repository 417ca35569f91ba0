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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxalg/matrix.hpp"
#include "maxalg/tolerance.hpp"

namespace maxalg {

enum class PeriodMethod { boolean_gcd, iteration_oracle };

struct PeriodReport {
  std::size_t q = 1;   ///< period
  std::size_t t0 = 0;  ///< transient: A^(t+q) = A^t for all t >= t0
  PeriodMethod method = PeriodMethod::boolean_gcd;
};

/// Period and transient of the power sequence of a 0/1 matrix. The period is
/// the lcm over strongly connected components with circuits of the gcd of
/// their circuit lengths.
PeriodReport boolean_period(const MaxMatrix& b,
                            const IterationOptions& opts = {});

/// Period and transient of an irreducible matrix with mu = 1, whose powers
/// are eventually exactly periodic.
PeriodReport elsner_period(const MaxMatrix& a,
                           const IterationOptions& opts = {});

/// Limits of the subsequences A^(kq+j), j = 1..q.
struct PowerLimit {
  std::size_t q = 1;
  std::size_t t0 = 0;
  /// limits[j - 1] is the limit of A^(kq+j); limits[q - 1] = lim A^(kq).
  std::vector<MaxMatrix> limits;

  /// Limit for any j >= 0, reduced mod q.
  const MaxMatrix& at(std::size_t j) const;
};

/// Requires mu(a) <= 1. q is the minimal asymptotic period.
PowerLimit power_limit(const MaxMatrix& a, const IterationOptions& opts = {});

/// Checks A^q (x) L_j = L_j and A (x) L_j = L_(j+1 mod q).
bool limits_coherent(const MaxMatrix& a, const PowerLimit& limit,
                     const Tolerances& tol = {});

struct PeriodicPoint {
  MaxVector point;
  /// Smallest divisor d of q with A^d (x) point = point.
  std::size_t period = 1;
};

/// xi = limits[j-1] (x) x, for 1 <= j <= limit.q.
PeriodicPoint periodic_point(const MaxMatrix& a, const MaxVector& x,
                             const PowerLimit& limit, std::size_t j,
                             const Tolerances& tol = {});

/// A finite word over the letters 1..N.
class Word {
 public:
  explicit Word(std::vector<std::size_t> letters);
  /// Comma separated letters, e.g. "1,2,1".
  static Word parse(std::string_view text);

  const std::vector<std::size_t>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  std::size_t largest_letter() const noexcept;
  /// counts[i - 1] is the number of occurrences of letter i, for i <= alphabet.
  std::vector<std::size_t> counts(std::size_t alphabet) const;
  bool uses_every_letter(std::size_t alphabet) const;

  std::string to_string() const;

 private:
  std::vector<std::size_t> letters_;
};

/// A_w = A_(w_p) (x) ... (x) A_(w_1); the first letter acts first.
MaxMatrix word_product(const std::vector<MaxMatrix>& mats, const Word& w);

struct WordLimit {
  /// q = lcm of the letters' asymptotic periods; independent of the word.
  PowerLimit limit;
  /// Smallest d dividing q with limits repeating every d steps.
  std::size_t cycle_period = 1;
  std::vector<std::size_t> counts;
};

/// Limits of A_w^(kq+j) for pairwise commuting matrices with mu <= 1,
/// assembled from the per-letter power limits and checked against direct
/// iteration of A_w. Letters absent from w are ignored.
WordLimit commuting_word_limit(const std::vector<MaxMatrix>& mats,
                               const Word& w,
                               const IterationOptions& opts = {});

struct BooleanWordLimit {
  std::size_t t0 = 0;
  std::size_t q = 1;
  /// candidates[t - t0] = A1^(p1 t) (x) A2^(p2 t), t = t0 .. t0+q-1.
  std::vector<MaxMatrix> candidates;
  /// Limit cycle, cycle[j - 1] = lim A_w^(kq+j).
  std::vector<MaxMatrix> cycle;
  /// member[j - 1] = t such that cycle[j - 1] = candidates[t - t0].
  std::vector<std::size_t> member;
  std::size_t cycle_period = 1;
};

/// Two commuting matrices whose max eigenvalues are all 0 or 1: the limit
/// cycle of A_w is a subset of {A1^(p1 t) (x) A2^(p2 t) : t0 <= t < t0+q}.
BooleanWordLimit two_matrix_boolean_limit(const MaxMatrix& a1,
                                          const MaxMatrix& a2, const Word& w,
                                          const IterationOptions& opts = {});

struct CommonEigenbasis {
  std::vector<MaxVector> vectors;
  /// eigenvalues[i][j]: A_i (x) v_j = eigenvalues[i][j] v_j.
  std::vector<std::vector<double>> eigenvalues;
  /// Indices j with eigenvalue 1 for every matrix.
  std::vector<std::size_t> persistent;
  /// Indices j with some eigenvalue below 1.
  std::vector<std::size_t> transient;
  /// Indices into the candidate list that failed the eigen-equation.
  std::vector<std::size_t> rejected;
};

CommonEigenbasis common_eigenbasis(const std::vector<MaxMatrix>& mats,
                                   const std::vector<MaxVector>& candidates,
                                   const Tolerances& tol = {});

struct LcLimit {
  MaxVector x;   ///< (+)_j coeffs[j] v_j
  MaxVector xi;  ///< (+) over persistent j of coeffs[j] v_j
  std::size_t steps = 0;  ///< iterations until A_w^k (x) x settled
};

/// lim_k A_w^k (x) x for x in the max-span of the basis. w must use every
/// letter 1..mats.size().
LcLimit lc_limit(const std::vector<MaxMatrix>& mats,
                 const CommonEigenbasis& basis, const MaxVector& coeffs,
                 const Word& w, const IterationOptions& opts = {});

enum class OracleOutcome { cycle, converges_to_zero, inconclusive };

struct OracleTrace {
  /// powers[t - 1] = A^t, t = 1..steps computed.
  std::vector<MaxMatrix> powers;
  OracleOutcome outcome = OracleOutcome::inconclusive;
  std::size_t t0 = 0;
  std::size_t q = 0;
  /// False when the detected cycle relied on clamping decaying entries.
  bool exact = true;
  /// First step at which every entry fell below tol.zero.
  std::size_t zero_step = 0;

  /// A^t for t >= 0 within the computed range.
  MaxMatrix power(std::size_t t) const;
};

/// Brute force: iterate A^1..A^max_steps and report the first repeat.
OracleTrace oracle_iterate(const MaxMatrix& a, std::size_t max_steps,
                           const IterationOptions& opts = {});

std::size_t gcd_all(const std::vector<std::size_t>& values);
std::size_t lcm(std::size_t a, std::size_t b);
/// Divisors of q in increasing order.
std::vector<std::size_t> divisors(std::size_t q);

std::string_view to_string(PeriodMethod m);
std::string_view to_string(OracleOutcome o);

}  // namespace maxalg
