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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "maxalg/tolerance.hpp"

namespace maxalg {

/// A nonnegative vector acted on by max-times products.
using MaxVector = std::vector<double>;

/// Dense n x n matrix over the (max, x) semiring on the nonnegative reals.
/// Entries are finite and >= 0; zero is the additive identity, so a zero
/// entry means "no edge".
class MaxMatrix {
 public:
  /// The n x n zero matrix. n must be positive.
  explicit MaxMatrix(std::size_t n);
  /// Row-major entries; throws PreconditionError on a negative or
  /// non-finite entry and DimensionError if entries.size() != n * n.
  MaxMatrix(std::size_t n, std::vector<double> entries);
  MaxMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static MaxMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static MaxMatrix identity(std::size_t n);
  /// J_n, the all-ones matrix.
  static MaxMatrix ones(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * n_ + j];
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const double> entries() const noexcept { return entries_; }
  std::vector<std::vector<double>> rows() const;

  bool is_zero() const noexcept;
  bool is_boolean() const noexcept;
  double max_entry() const noexcept;

  friend bool operator==(const MaxMatrix&, const MaxMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

/// a (x) b: [a (x) b]_ij = max_k a_ik * b_kj.
MaxMatrix max_mul(const MaxMatrix& a, const MaxMatrix& b);
/// a (x) x for a column vector x.
MaxVector max_mul(const MaxMatrix& a, const MaxVector& x);
/// Entrywise maximum.
MaxMatrix max_add(const MaxMatrix& a, const MaxMatrix& b);
MaxVector max_add(const MaxVector& a, const MaxVector& b);
MaxMatrix scale(const MaxMatrix& a, double c);
MaxVector scale(const MaxVector& x, double c);

/// k-fold product; a^0 is the identity.
MaxMatrix max_pow(const MaxMatrix& a, std::size_t k);

/// I (+) a (+) a^2 (+) ... (+) a^(n-1).
MaxMatrix kleene_star(const MaxMatrix& a);

/// Zeroes every entry below tol.zero.
MaxMatrix clamp_small(const MaxMatrix& a, const Tolerances& tol);
MaxVector clamp_small(const MaxVector& x, const Tolerances& tol);

/// Entrywise approx_equal at `tol`.
bool approx_equal(const MaxMatrix& a, const MaxMatrix& b, double tol);
bool approx_equal(const MaxVector& a, const MaxVector& b, double tol);
/// Entrywise settled_equal.
bool settled_equal(const MaxMatrix& a, const MaxMatrix& b,
                   const Tolerances& tol);
bool settled_equal(const MaxVector& a, const MaxVector& b,
                   const Tolerances& tol);
/// Largest entrywise |a - b|.
double max_abs_diff(const MaxMatrix& a, const MaxMatrix& b);

/// Splitting of a matrix bounded by J_n into its unit entries and the rest.
struct BoolResidualSplit {
  MaxMatrix boolean_part;
  MaxMatrix residual_part;
};

/// Throws PreconditionError if some entry exceeds 1.
BoolResidualSplit bool_residual_split(const MaxMatrix& a);

struct FrobeniusForm;

/// Block-diagonal and strictly block-upper parts of the permuted matrix.
struct DiagNilpotentSplit {
  MaxMatrix diagonal_part;
  MaxMatrix nilpotent_part;
};

/// Both parts are expressed in the permuted coordinates of `form`.
DiagNilpotentSplit diag_nilpotent_split(const MaxMatrix& a,
                                        const FrobeniusForm& form);

std::string to_string(const MaxMatrix& a);

}  // namespace maxalg
