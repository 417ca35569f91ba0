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
#include <charconv>
#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "maxalg/dynamics.hpp"
#include "maxalg/error.hpp"
#include "maxalg/spectral.hpp"

namespace maxalg {

namespace {

void require_collection(const std::vector<MaxMatrix>& mats, const char* op) {
  if (mats.empty()) throw PreconditionError(std::string(op) + ": no matrices given");
  for (const auto& m : mats) {
    if (m.size() != mats.front().size()) {
      throw DimensionError(std::string(op) + ": matrices differ in dimension");
    }
  }
}

void require_letters(const std::vector<MaxMatrix>& mats, const Word& w) {
  if (w.largest_letter() > mats.size()) {
    throw PreconditionError("letter " + std::to_string(w.largest_letter()) +
                            " out of range 1.." + std::to_string(mats.size()));
  }
}

void require_commuting(const std::vector<MaxMatrix>& mats, const Tolerances& tol) {
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      if (!approx_equal(max_mul(mats[i], mats[j]), max_mul(mats[j], mats[i]), tol.exact)) {
        throw PreconditionError("matrices " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " do not commute");
      }
    }
  }
}

void require_vector(const MaxVector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(n));
  }
  for (double x : v) {
    if (!(x >= 0) || !std::isfinite(x)) {
      throw PreconditionError(std::string(what) + " must be nonnegative and finite");
    }
  }
}

// lambda with a (x) v = lambda v, if v is an eigenvector of a.
std::optional<double> eigen_ratio(const MaxMatrix& a, const MaxVector& v,
                                  const Tolerances& tol) {
  const MaxVector av = max_mul(a, v);
  double lambda = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] > 0) lambda = std::max(lambda, av[k] / v[k]);
  }
  if (eigen_residual(a, v, lambda) > tol.structural) return std::nullopt;
  return lambda;
}

}  // namespace

Word::Word(std::vector<std::size_t> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw PreconditionError("word must contain at least one letter");
  for (std::size_t l : letters_) {
    if (l == 0) throw PreconditionError("word letters are numbered from 1");
  }
}

Word Word::parse(std::string_view text) {
  std::vector<std::size_t> letters;
  std::size_t column = 0;
  while (true) {
    ++column;
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::size_t letter = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), letter);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw ParseError(1, column, "bad word letter '" + std::string(token) + "'");
    }
    if (letter == 0) throw ParseError(1, column, "word letters are numbered from 1");
    letters.push_back(letter);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Word(std::move(letters));
}

std::size_t Word::largest_letter() const noexcept {
  return *std::max_element(letters_.begin(), letters_.end());
}

std::vector<std::size_t> Word::counts(std::size_t alphabet) const {
  std::vector<std::size_t> out(alphabet, 0);
  for (std::size_t l : letters_) {
    if (l <= alphabet) ++out[l - 1];
  }
  return out;
}

bool Word::uses_every_letter(std::size_t alphabet) const {
  const auto c = counts(alphabet);
  return std::all_of(c.begin(), c.end(), [](std::size_t k) { return k > 0; });
}

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) os << (k ? "," : "") << letters_[k];
  return os.str();
}

MaxMatrix word_product(const std::vector<MaxMatrix>& mats, const Word& w) {
  require_collection(mats, "word_product");
  require_letters(mats, w);
  const auto& letters = w.letters();
  MaxMatrix out = mats[letters.front() - 1];
  for (std::size_t k = 1; k < letters.size(); ++k) out = max_mul(mats[letters[k] - 1], out);
  return out;
}

WordLimit commuting_word_limit(const std::vector<MaxMatrix>& mats, const Word& w,
                               const IterationOptions& opts) {
  require_collection(mats, "commuting_word_limit");
  require_letters(mats, w);
  require_commuting(mats, opts.tol);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const double m = mu(mats[i]);
    if (!detail::less_or_close(m, 1.0, opts.tol.structural)) {
      throw PreconditionError("matrix " + std::to_string(i + 1) + " has mu = " +
                              std::to_string(m) + " > 1");
    }
  }

  WordLimit out;
  out.counts = w.counts(mats.size());
  std::vector<std::pair<PowerLimit, std::size_t>> letter_limits;  // (limit, p_i)
  std::size_t q = 1;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (out.counts[i] == 0) continue;
    PowerLimit pl = power_limit(mats[i], opts);
    q = lcm(q, pl.q);
    letter_limits.emplace_back(std::move(pl), out.counts[i]);
  }

  const std::size_t n = mats.front().size();
  std::vector<MaxMatrix> assembled;
  for (std::size_t j = 1; j <= q; ++j) {
    MaxMatrix l = MaxMatrix::identity(n);
    for (const auto& [pl, count] : letter_limits) l = max_mul(l, max_pow(pl.at(j), count));
    assembled.push_back(clamp_small(l, opts.tol));
  }

  // direct route: lim (A_w^q)^k by squaring, then shift by A_w^j
  const MaxMatrix aw = word_product(mats, w);
  const MaxMatrix base = detail::settled_power_limit(max_pow(aw, q), opts);
  MaxMatrix p = MaxMatrix::identity(n);
  for (std::size_t j = 1; j <= q; ++j) {
    p = max_mul(p, aw);
    const MaxMatrix direct = clamp_small(max_mul(p, base), opts.tol);
    if (!settled_equal(direct, assembled[j - 1], opts.tol)) {
      throw InconclusiveError("word limit for j = " + std::to_string(j) +
                              " disagrees with direct iteration of A_w");
    }
  }

  out.limit.q = q;
  out.limit.limits = std::move(assembled);
  out.limit.t0 = detail::transient_index(aw, out.limit.limits, opts);
  out.cycle_period = detail::sequence_period(out.limit.limits, opts.tol);
  return out;
}

BooleanWordLimit two_matrix_boolean_limit(const MaxMatrix& a1, const MaxMatrix& a2,
                                          const Word& w, const IterationOptions& opts) {
  const std::vector<MaxMatrix> mats{a1, a2};
  require_collection(mats, "two_matrix_boolean_limit");
  require_letters(mats, w);
  for (std::size_t i = 0; i < 2; ++i) {
    for (double lambda : spectrum(mats[i], opts.tol).eigenvalues()) {
      const bool zero = lambda <= opts.tol.structural;
      const bool one = approx_equal(lambda, 1.0, opts.tol.structural);
      if (!zero && !one) {
        throw PreconditionError("matrix " + std::to_string(i + 1) +
                                " has max eigenvalue " + std::to_string(lambda) +
                                ", expected only 0 or 1");
      }
    }
  }

  const WordLimit wl = commuting_word_limit(mats, w, opts);
  BooleanWordLimit out;
  out.t0 = wl.limit.t0;
  out.q = wl.limit.q;
  out.cycle = wl.limit.limits;
  out.cycle_period = wl.cycle_period;
  for (std::size_t t = out.t0; t < out.t0 + out.q; ++t) {
    out.candidates.push_back(
        max_mul(max_pow(a1, wl.counts[0] * t), max_pow(a2, wl.counts[1] * t)));
  }
  for (std::size_t j = 0; j < out.q; ++j) {
    std::size_t found = 0;
    bool hit = false;
    for (std::size_t k = 0; k < out.candidates.size() && !hit; ++k) {
      if (settled_equal(out.cycle[j], out.candidates[k], opts.tol)) {
        found = out.t0 + k;
        hit = true;
      }
    }
    if (!hit) {
      throw InconclusiveError("limit " + std::to_string(j + 1) +
                              " is not among the candidate products");
    }
    out.member.push_back(found);
  }
  return out;
}

CommonEigenbasis common_eigenbasis(const std::vector<MaxMatrix>& mats,
                                   const std::vector<MaxVector>& candidates,
                                   const Tolerances& tol) {
  require_collection(mats, "common_eigenbasis");
  if (candidates.empty()) throw PreconditionError("common_eigenbasis: no candidate vectors");
  const std::size_t n = mats.front().size();

  CommonEigenbasis out;
  out.eigenvalues.resize(mats.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const MaxVector& v = candidates[c];
    require_vector(v, n, "candidate vector");
    if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) {
      throw PreconditionError("candidate vector " + std::to_string(c + 1) + " is zero");
    }
    std::vector<double> lambdas;
    for (const auto& a : mats) {
      auto lambda = eigen_ratio(a, v, tol);
      if (!lambda) break;
      lambdas.push_back(*lambda);
    }
    if (lambdas.size() != mats.size()) {
      out.rejected.push_back(c);
      continue;
    }
    for (std::size_t i = 0; i < mats.size(); ++i) {
      if (!detail::less_or_close(lambdas[i], 1.0, tol.structural)) {
        throw PreconditionError("candidate vector " + std::to_string(c + 1) +
                                " has eigenvalue " + std::to_string(lambdas[i]) +
                                " > 1 for matrix " + std::to_string(i + 1));
      }
    }
    const std::size_t index = out.vectors.size();
    out.vectors.push_back(v);
    bool persistent = true;
    for (std::size_t i = 0; i < mats.size(); ++i) {
      out.eigenvalues[i].push_back(lambdas[i]);
      persistent = persistent && approx_equal(lambdas[i], 1.0, tol.structural);
    }
    (persistent ? out.persistent : out.transient).push_back(index);
  }
  return out;
}

LcLimit lc_limit(const std::vector<MaxMatrix>& mats, const CommonEigenbasis& basis,
                 const MaxVector& coeffs, const Word& w, const IterationOptions& opts) {
  require_collection(mats, "lc_limit");
  require_letters(mats, w);
  if (!w.uses_every_letter(mats.size())) {
    throw PreconditionError("lc_limit: word " + w.to_string() + " must use every letter 1.." +
                            std::to_string(mats.size()));
  }
  if (coeffs.size() != basis.vectors.size()) {
    throw DimensionError("lc_limit: " + std::to_string(coeffs.size()) +
                         " coefficients for " + std::to_string(basis.vectors.size()) +
                         " basis vectors");
  }
  require_vector(coeffs, coeffs.size(), "coefficients");
  const std::size_t n = mats.front().size();

  LcLimit out{MaxVector(n, 0.0), MaxVector(n, 0.0), 0};
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    out.x = max_add(out.x, scale(basis.vectors[j], coeffs[j]));
  }
  for (std::size_t j : basis.persistent) {
    out.xi = max_add(out.xi, scale(basis.vectors[j], coeffs[j]));
  }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (!settled_equal(max_mul(mats[i], out.xi), out.xi, opts.tol)) {
      throw InconclusiveError("lc_limit: limit is not fixed by matrix " + std::to_string(i + 1));
    }
  }

  // direct iteration of A_w^k (x) x; a settled pair at k is confirmed at 2k
  const MaxMatrix aw = word_product(mats, w);
  const std::size_t cap = opts.max_steps ? *opts.max_steps : std::size_t{100000};
  MaxVector y = out.x;
  std::size_t k = 0;
  std::size_t settled_at = 0;
  while (true) {
    if (k >= cap) {
      throw InconclusiveError("lc_limit: A_w^k x did not settle within " +
                              std::to_string(cap) + " steps");
    }
    detail::tick(opts, k);
    MaxVector next = max_mul(aw, y);
    ++k;
    const bool settled = settled_equal(next, y, opts.tol);
    y = std::move(next);
    if (!settled) {
      settled_at = 0;
      continue;
    }
    if (settled_at == 0) {
      settled_at = k;
    } else if (k >= 2 * settled_at) {
      break;
    }
  }
  out.steps = settled_at;
  if (!settled_equal(clamp_small(y, opts.tol), out.xi, opts.tol)) {
    throw InconclusiveError("lc_limit: direct iteration disagrees with the eigenvector limit");
  }
  return out;
}

}  // namespace maxalg
