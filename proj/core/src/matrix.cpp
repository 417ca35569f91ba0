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

#include "maxalg/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "maxalg/error.hpp"
#include "maxalg/graph.hpp"

namespace maxalg {

namespace {

void check_entry(double v, std::size_t index, std::size_t n) {
  if (!std::isfinite(v) || v < 0) {
    throw PreconditionError("entry (" + std::to_string(index / n + 1) + "," +
                            std::to_string(index % n + 1) +
                            ") must be finite and nonnegative");
  }
}

void require_same_size(const MaxMatrix& a, const MaxMatrix& b,
                       const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": dimensions " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " differ");
  }
}

}  // namespace

MaxMatrix::MaxMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {
  if (n == 0) throw DimensionError("matrix dimension must be positive");
}

MaxMatrix::MaxMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n == 0) throw DimensionError("matrix dimension must be positive");
  if (entries_.size() != n * n) {
    throw DimensionError("expected " + std::to_string(n * n) +
                         " entries, got " + std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) check_entry(entries_[k], k, n);
}

MaxMatrix::MaxMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : MaxMatrix(from_rows(std::vector<std::vector<double>>(rows.begin(),
                                                           rows.end()))) {}

MaxMatrix MaxMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw DimensionError("matrix is not square: row of length " +
                           std::to_string(r.size()) + " in a " +
                           std::to_string(n) + "-row matrix");
    }
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return MaxMatrix(n, std::move(entries));
}

MaxMatrix MaxMatrix::identity(std::size_t n) {
  MaxMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1.0;
  return m;
}

MaxMatrix MaxMatrix::ones(std::size_t n) {
  return MaxMatrix(n, std::vector<double>(n * n, 1.0));
}

std::vector<std::vector<double>> MaxMatrix::rows() const {
  std::vector<std::vector<double>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(i);
    out[i].assign(r.begin(), r.end());
  }
  return out;
}

bool MaxMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](double v) { return v == 0.0; });
}

bool MaxMatrix::is_boolean() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](double v) { return v == 0.0 || v == 1.0; });
}

double MaxMatrix::max_entry() const noexcept {
  return *std::max_element(entries_.begin(), entries_.end());
}

MaxMatrix max_mul(const MaxMatrix& a, const MaxMatrix& b) {
  require_same_size(a, b, "max_mul");
  const std::size_t n = a.size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double* dst = out.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      auto bk = b.row(k);
      for (std::size_t j = 0; j < n; ++j) dst[j] = std::max(dst[j], aik * bk[j]);
    }
  }
  return MaxMatrix(n, std::move(out));
}

MaxVector max_mul(const MaxMatrix& a, const MaxVector& x) {
  if (x.size() != a.size()) {
    throw DimensionError("max_mul: vector of length " +
                         std::to_string(x.size()) + " against " +
                         std::to_string(a.size()) + "x" +
                         std::to_string(a.size()) + " matrix");
  }
  MaxVector out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto r = a.row(i);
    for (std::size_t k = 0; k < a.size(); ++k) out[i] = std::max(out[i], r[k] * x[k]);
  }
  return out;
}

MaxMatrix max_add(const MaxMatrix& a, const MaxMatrix& b) {
  require_same_size(a, b, "max_add");
  std::vector<double> out(a.entries().begin(), a.entries().end());
  auto be = b.entries();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::max(out[k], be[k]);
  return MaxMatrix(a.size(), std::move(out));
}

MaxVector max_add(const MaxVector& a, const MaxVector& b) {
  if (a.size() != b.size()) throw DimensionError("max_add: vector lengths differ");
  MaxVector out(a);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::max(out[k], b[k]);
  return out;
}

MaxMatrix scale(const MaxMatrix& a, double c) {
  std::vector<double> out(a.entries().begin(), a.entries().end());
  for (double& v : out) v *= c;
  return MaxMatrix(a.size(), std::move(out));
}

MaxVector scale(const MaxVector& x, double c) {
  MaxVector out(x);
  for (double& v : out) v *= c;
  return out;
}

MaxMatrix max_pow(const MaxMatrix& a, std::size_t k) {
  const std::size_t n = a.size();
  if (k <= n) {
    MaxMatrix result = MaxMatrix::identity(n);
    for (std::size_t i = 0; i < k; ++i) result = max_mul(result, a);
    return result;
  }
  MaxMatrix result = MaxMatrix::identity(n);
  MaxMatrix base = a;
  while (k > 0) {
    if (k & 1U) result = max_mul(result, base);
    k >>= 1U;
    if (k > 0) base = max_mul(base, base);
  }
  return result;
}

MaxMatrix kleene_star(const MaxMatrix& a) {
  const std::size_t n = a.size();
  MaxMatrix star = MaxMatrix::identity(n);
  MaxMatrix power = MaxMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = max_mul(power, a);
    star = max_add(star, power);
  }
  return star;
}

MaxMatrix clamp_small(const MaxMatrix& a, const Tolerances& tol) {
  std::vector<double> out(a.entries().begin(), a.entries().end());
  for (double& v : out) {
    if (v < tol.zero) v = 0.0;
  }
  return MaxMatrix(a.size(), std::move(out));
}

MaxVector clamp_small(const MaxVector& x, const Tolerances& tol) {
  MaxVector out(x);
  for (double& v : out) {
    if (v < tol.zero) v = 0.0;
  }
  return out;
}

bool approx_equal(const MaxMatrix& a, const MaxMatrix& b, double tol) {
  if (a.size() != b.size()) return false;
  auto ae = a.entries();
  auto be = b.entries();
  for (std::size_t k = 0; k < ae.size(); ++k) {
    if (!approx_equal(ae[k], be[k], tol)) return false;
  }
  return true;
}

bool approx_equal(const MaxVector& a, const MaxVector& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!approx_equal(a[k], b[k], tol)) return false;
  }
  return true;
}

bool settled_equal(const MaxMatrix& a, const MaxMatrix& b,
                   const Tolerances& tol) {
  if (a.size() != b.size()) return false;
  auto ae = a.entries();
  auto be = b.entries();
  for (std::size_t k = 0; k < ae.size(); ++k) {
    if (!settled_equal(ae[k], be[k], tol)) return false;
  }
  return true;
}

bool settled_equal(const MaxVector& a, const MaxVector& b,
                   const Tolerances& tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!settled_equal(a[k], b[k], tol)) return false;
  }
  return true;
}

double max_abs_diff(const MaxMatrix& a, const MaxMatrix& b) {
  require_same_size(a, b, "max_abs_diff");
  double worst = 0;
  auto ae = a.entries();
  auto be = b.entries();
  for (std::size_t k = 0; k < ae.size(); ++k) {
    worst = std::max(worst, std::abs(ae[k] - be[k]));
  }
  return worst;
}

BoolResidualSplit bool_residual_split(const MaxMatrix& a) {
  const std::size_t n = a.size();
  std::vector<double> boolean(n * n, 0.0);
  std::vector<double> residual(n * n, 0.0);
  auto e = a.entries();
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] > 1.0) {
      throw PreconditionError("bool_residual_split: entry (" +
                              std::to_string(k / n + 1) + "," +
                              std::to_string(k % n + 1) +
                              ") exceeds 1; scale the matrix first");
    }
    if (e[k] == 1.0) {
      boolean[k] = 1.0;
    } else {
      residual[k] = e[k];
    }
  }
  return {MaxMatrix(n, std::move(boolean)), MaxMatrix(n, std::move(residual))};
}

DiagNilpotentSplit diag_nilpotent_split(const MaxMatrix& a,
                                        const FrobeniusForm& form) {
  if (form.n != a.size() || form.permutation.size() != a.size()) {
    throw DimensionError("diag_nilpotent_split: form is for dimension " +
                         std::to_string(form.n) + ", matrix has " +
                         std::to_string(a.size()));
  }
  const std::size_t n = a.size();
  const MaxMatrix permuted = apply_permutation(a, form);
  // block id of each permuted position
  std::vector<std::size_t> block(n);
  for (std::size_t c = 0; c < form.class_count(); ++c) {
    const std::size_t off = form.block_offset(c);
    for (std::size_t k = 0; k < form.classes[c].size(); ++k) block[off + k] = c;
  }
  std::vector<double> diag(n * n, 0.0);
  std::vector<double> nil(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = permuted(i, j);
      if (block[i] == block[j]) {
        diag[i * n + j] = v;
      } else if (block[i] < block[j]) {
        nil[i * n + j] = v;
      } else if (v != 0.0) {
        throw DimensionError(
            "diag_nilpotent_split: form does not triangularize the matrix");
      }
    }
  }
  return {MaxMatrix(n, std::move(diag)), MaxMatrix(n, std::move(nil))};
}

std::string to_string(const MaxMatrix& a) {
  std::ostringstream os;
  char buf[32];
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << (i == 0 ? "[[" : " [");
    for (std::size_t j = 0; j < a.size(); ++j) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, a(i, j));
      if (j) os << ", ";
      os.write(buf, end - buf);
    }
    os << (i + 1 == a.size() ? "]]" : "]\n");
  }
  return os.str();
}

}  // namespace maxalg
