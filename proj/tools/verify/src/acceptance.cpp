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

#include "maxalg/verify/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>

#include "maxalg/maxalg.hpp"
#include "maxalg/verify/fixtures.hpp"
#include "maxalg/verify/oracles.hpp"

namespace maxalg::verify {

namespace {

// Pinned tolerances.
constexpr double kExact = 1e-12;
constexpr double kStructural = 1e-9;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  std::size_t count() const { return count_; }
  const std::string& failure() const { return failure_; }

 private:
  std::size_t count_ = 0;
  std::string failure_;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(const MaxVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
  return s + ")";
}

// u and v proportional with positive factor, within tol after normalizing
// both to max component 1.
bool proportional(const MaxVector& u, const MaxVector& v, double tol) {
  const double mu_ = *std::max_element(u.begin(), u.end());
  const double mv = *std::max_element(v.begin(), v.end());
  if (mu_ <= 0 || mv <= 0) return false;
  return approx_equal(scale(u, 1 / mu_), scale(v, 1 / mv), tol);
}

// Every limit produced by criteria 1-7, for the coherence check.
struct Produced {
  MaxMatrix a;
  PowerLimit limit;
  std::string origin;
};

// A^t for any t, extended periodically from a detected oracle cycle.
MaxMatrix oracle_power(const OracleTrace& tr, std::size_t t) {
  if (t >= tr.t0 + tr.q) t = tr.t0 + (t - tr.t0) % tr.q;
  return tr.power(t);
}

// Compares lim A^(kq+j) with oracle iteration of `a`.
void against_oracle(Check& c, const MaxMatrix& a, const PowerLimit& limit,
                    const std::string& label) {
  const OracleTrace tr = oracle_iterate(a, 2000);
  c.expect(tr.outcome == OracleOutcome::cycle, label + ": oracle found no cycle");
  if (tr.outcome != OracleOutcome::cycle) return;
  c.expect(limit.q % tr.q == 0, label + ": oracle period " + std::to_string(tr.q) +
                                    " does not divide q = " + std::to_string(limit.q));
  for (std::size_t j = 1; j <= limit.q; ++j) {
    std::size_t t = j;
    while (t < tr.t0) t += limit.q;
    c.expect(approx_equal(limit.at(j), oracle_power(tr, t), kExact),
             label + ": limit j=" + std::to_string(j) + " differs from A^" + std::to_string(t));
  }
}

CriterionResult run(int id, std::string name, const std::function<void(Check&)>& body) {
  CriterionResult r{id, std::move(name), false, {}};
  Check c;
  try {
    body(c);
    r.passed = c.ok();
    r.detail = c.ok() ? std::to_string(c.count()) + " checks" : c.failure();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

void swap_limit(Check& c, std::vector<Produced>& made) {
  const MaxMatrix a = fixtures::swap2();
  const PowerLimit pl = power_limit(a);
  made.push_back({a, pl, "swap2"});
  c.expect(pl.q == 2, "q = " + std::to_string(pl.q) + ", expected 2");
  if (pl.q != 2) return;
  c.expect(approx_equal(pl.at(1), a, kExact), "limit j=1 is " + to_string(pl.at(1)));
  c.expect(approx_equal(pl.at(2), MaxMatrix{{1, 0.5}, {0.5, 1}}, kExact),
           "limit j=2 is " + to_string(pl.at(2)));
  for (std::size_t j = 1; j <= 2; ++j) {
    const auto px = periodic_point(a, {1, 1}, pl, j);
    const auto py = periodic_point(a, {1, 0}, pl, j);
    c.expect(px.period == 1, "x=(1,1) j=" + std::to_string(j) + " period " +
                                 std::to_string(px.period));
    c.expect(py.period == 2, "y=(1,0) j=" + std::to_string(j) + " period " +
                                 std::to_string(py.period));
  }
}

void triangular_spectra(Check& c) {
  auto eigen_ok = [&](const MaxMatrix& m, const std::string& label) {
    const SpectralReport s = spectrum(m);
    for (const auto& p : s.eigenpairs) {
      c.expect(eigen_residual(m, p.vector, p.value) <= kStructural,
               label + ": eigen-equation fails for lambda=" + fmt(p.value));
    }
    return s;
  };
  auto find = [](const SpectralReport& s, double lambda) -> const Eigenpair* {
    for (const auto& p : s.eigenpairs) {
      if (approx_equal(p.value, lambda, kStructural)) return &p;
    }
    return nullptr;
  };
  auto values_are = [&](const SpectralReport& s, std::vector<double> want,
                        const std::string& label) {
    const auto got = s.eigenvalues();
    bool same = got.size() == want.size();
    for (std::size_t k = 0; same && k < got.size(); ++k) {
      same = approx_equal(got[k], want[k], kStructural);
    }
    std::string g;
    for (double x : got) g += fmt(x) + " ";
    c.expect(same, label + ": eigenvalues " + g);
  };

  const auto sa = eigen_ok(fixtures::diag45(), "diag");
  values_are(sa, {4, 5}, "diag");
  if (auto p = find(sa, 4)) c.expect(proportional(p->vector, {1, 0}, kStructural), "diag: lambda=4 vector " + fmt(p->vector));
  if (auto p = find(sa, 5)) c.expect(proportional(p->vector, {0, 1}, kStructural), "diag: lambda=5 vector " + fmt(p->vector));

  const auto sb = eigen_ok(fixtures::upper45(), "upper45");
  values_are(sb, {4, 5}, "upper45");
  if (auto p = find(sb, 5)) {
    c.expect(proportional(p->vector, {8, 5}, kStructural),
             "upper45: lambda=5 eigenvector " + fmt(p->vector) + " is not proportional to (8,5)");
  }

  const auto sc = eigen_ok(fixtures::upper54(), "upper54");
  values_are(sc, {5}, "upper54");
}

void three_vertex(Check& c, std::vector<Produced>& made) {
  const MaxMatrix a = fixtures::three_vertex();
  c.expect(approx_equal(mu(a), 1.0, kExact), "mu = " + fmt(mu(a)));
  const CriticalGraph cg = critical_graph(a);
  const std::vector<std::pair<std::size_t, std::size_t>> want{{0, 1}, {1, 0}};
  c.expect(cg.critical_edges == want, "critical edges differ from {(1,2),(2,1)}");

  const PowerLimit pl = power_limit(a);
  made.push_back({a, pl, "three_vertex"});
  c.expect(pl.q == 2, "q = " + std::to_string(pl.q));
  if (pl.q != 2) return;
  c.expect(approx_equal(pl.at(1), fixtures::three_vertex_odd_limit(), kExact),
           "odd limit is " + to_string(pl.at(1)));
  c.expect(approx_equal(pl.at(2), fixtures::three_vertex_even_limit(), kExact),
           "even limit is " + to_string(pl.at(2)));

  Generator gen(71);
  for (int trial = 0; trial < 10; ++trial) {
    const MaxVector x = gen.vector(3, 0.0, 10.0);
    const MaxVector odd{std::max({0.5 * x[0], x[1], 5.4 * x[2]}),
                        std::max({x[0], 0.5 * x[1], 6 * x[2]}), 0};
    const MaxVector even{std::max({x[0], 0.5 * x[1], 6 * x[2]}),
                         std::max({0.5 * x[0], x[1], 5.4 * x[2]}), 0};
    c.expect(approx_equal(periodic_point(a, x, pl, 1).point, odd, kExact),
             "odd periodic point for x=" + fmt(x));
    c.expect(approx_equal(periodic_point(a, x, pl, 2).point, even, kExact),
             "even periodic point for x=" + fmt(x));
  }
}

// Distinct members of a cycle, compared at kExact.
std::vector<MaxMatrix> distinct(const std::vector<MaxMatrix>& ms) {
  std::vector<MaxMatrix> out;
  for (const auto& m : ms) {
    if (std::none_of(out.begin(), out.end(),
                     [&](const MaxMatrix& o) { return approx_equal(o, m, kExact); })) {
      out.push_back(m);
    }
  }
  return out;
}

bool same_set(const std::vector<MaxMatrix>& x, const std::vector<MaxMatrix>& y) {
  auto dx = distinct(x);
  auto dy = distinct(y);
  if (dx.size() != dy.size()) return false;
  return std::all_of(dx.begin(), dx.end(), [&](const MaxMatrix& m) {
    return std::any_of(dy.begin(), dy.end(),
                       [&](const MaxMatrix& o) { return approx_equal(o, m, kExact); });
  });
}

void commuting_words(Check& c, std::vector<Produced>& made) {
  const auto mats = fixtures::commuting_triple();
  const std::size_t want_q[] = {3, 3, 2};
  for (std::size_t i = 0; i < 3; ++i) {
    const PowerLimit pl = power_limit(mats[i]);
    made.push_back({mats[i], pl, "commuting A" + std::to_string(i + 1)});
    c.expect(pl.q == want_q[i], "A" + std::to_string(i + 1) + " period " + std::to_string(pl.q));
    against_oracle(c, mats[i], pl, "A" + std::to_string(i + 1));
  }

  // (i) A1 A2
  {
    const Word w({1, 2});
    const WordLimit wl = commuting_word_limit(mats, w);
    const MaxMatrix aw = word_product(mats, w);
    made.push_back({aw, wl.limit, "word 1,2"});
    c.expect(wl.limit.q == 3, "(i) q_w = " + std::to_string(wl.limit.q));
    c.expect(wl.cycle_period == 1, "(i) cycle period " + std::to_string(wl.cycle_period));
    const MaxMatrix a1a2 = max_mul(mats[0], mats[1]);
    for (const auto& l : wl.limit.limits) {
      c.expect(approx_equal(l, a1a2, kExact), "(i) limit differs from A1 A2");
    }
    against_oracle(c, aw, wl.limit, "(i)");
  }
  // (ii) A2 A3
  {
    const Word w({2, 3});
    const WordLimit wl = commuting_word_limit(mats, w);
    const MaxMatrix aw = word_product(mats, w);
    made.push_back({aw, wl.limit, "word 2,3"});
    c.expect(wl.limit.q == 6, "(ii) q_w = " + std::to_string(wl.limit.q));
    c.expect(wl.cycle_period == 3, "(ii) cycle period " + std::to_string(wl.cycle_period));
    std::vector<MaxMatrix> want;
    for (std::size_t t = 1; t <= 3; ++t) {
      want.push_back(max_mul(max_pow(mats[1], t), max_pow(mats[2], t)));
    }
    c.expect(same_set(wl.limit.limits, want), "(ii) cycle differs from {A2^t A3^t : t=1..3}");
    against_oracle(c, aw, wl.limit, "(ii)");
  }
  // (iii) A1 A3
  {
    const Word w({1, 2});
    const BooleanWordLimit bl = two_matrix_boolean_limit(mats[0], mats[2], w);
    const MaxMatrix aw = max_mul(mats[2], mats[0]);
    PowerLimit as_limit;
    as_limit.q = bl.q;
    as_limit.t0 = bl.t0;
    as_limit.limits = bl.cycle;
    made.push_back({aw, as_limit, "word 1,3"});
    c.expect(bl.q == 6, "(iii) q_w = " + std::to_string(bl.q));
    c.expect(bl.cycle_period == 6, "(iii) cycle period " + std::to_string(bl.cycle_period));
    c.expect(bl.t0 == 2, "(iii) t0 = " + std::to_string(bl.t0));
    c.expect(same_set(bl.cycle, bl.candidates),
             "(iii) cycle differs from {A1^t A3^t : t0 <= t < t0+6}");
    against_oracle(c, aw, as_limit, "(iii)");
  }
}

void shared_eigen(Check& c) {
  const auto mats = fixtures::shared_eigen_pair();
  const MaxVector u = fixtures::shared_u();
  const MaxVector v = fixtures::shared_v();
  const CommonEigenbasis basis = common_eigenbasis(mats, {u, v});
  c.expect(basis.rejected.empty(), "a candidate eigenvector was rejected");
  c.expect(basis.persistent == std::vector<std::size_t>{0}, "u is not the only persistent vector");
  c.expect(basis.transient == std::vector<std::size_t>{1}, "v is not the only transient vector");
  if (!c.ok()) return;
  c.expect(approx_equal(basis.eigenvalues[0][1], 0.9, kStructural),
           "lambda_1(v) = " + fmt(basis.eigenvalues[0][1]));

  Generator gen(73);
  const Word words[] = {Word({1, 2}), Word({2, 1, 1}), Word({2, 2, 1, 2})};
  for (int trial = 0; trial < 10; ++trial) {
    const double alpha = gen.uniform(0.1, 10.0);
    const double beta = gen.uniform(0.1, 10.0);
    const Word& w = words[trial % 3];
    const LcLimit lim = lc_limit(mats, basis, {alpha, beta}, w);
    c.expect(approx_equal(lim.xi, scale(u, alpha), kExact),
             "xi differs from alpha u for alpha=" + fmt(alpha) + " beta=" + fmt(beta));
    for (std::size_t i = 0; i < 2; ++i) {
      c.expect(approx_equal(max_mul(mats[i], lim.xi), lim.xi, kExact),
               "A" + std::to_string(i + 1) + " does not fix xi");
    }
  }
}

void bounds_suite(Check& c) {
  Generator gen(6);
  for (int trial = 0; trial < 200; ++trial) {
    const MaxMatrix a = gen.matrix(gen.dimension(1, 6), 0.0, 2.0, 0.3);
    const MuBounds b = mu_bounds(a);
    const double m = mu(a);
    c.expect(b.lower - kStructural <= m && m <= b.upper + kStructural,
             "mu=" + fmt(m) + " outside [" + fmt(b.lower) + "," + fmt(b.upper) + "] for " +
                 to_string(a));
  }
}

void oracle_suite(Check& c, std::vector<Produced>& made) {
  Generator gen(7);
  const std::vector<double> values{0, 0, 0.5, 1};
  int found = 0;
  while (found < 100) {
    const MaxMatrix a = gen.matrix_from(gen.dimension(1, 5), values);
    if (!is_irreducible(a) || !approx_equal(mu(a), 1.0, kExact)) continue;
    ++found;
    const PeriodReport pr = elsner_period(a);
    const OracleTrace tr = oracle_iterate(a, 2000);
    c.expect(tr.outcome == OracleOutcome::cycle && tr.exact,
             "oracle did not find an exact cycle for " + to_string(a));
    c.expect(pr.q == tr.q && pr.t0 == tr.t0,
             "elsner (q,t0)=(" + std::to_string(pr.q) + "," + std::to_string(pr.t0) +
                 ") oracle (" + std::to_string(tr.q) + "," + std::to_string(tr.t0) +
                 ") for " + to_string(a));
    const PowerLimit pl = power_limit(a);
    made.push_back({a, pl, "random irreducible"});
    const PeriodReport bp = boolean_period(bool_residual_split(a).boolean_part);
    c.expect(bp.q == pl.q, "boolean period " + std::to_string(bp.q) + " vs power limit q " +
                               std::to_string(pl.q) + " for " + to_string(a));
  }
}

void exhaustive_mu_suite(Check& c) {
  Generator gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    const MaxMatrix a = gen.matrix(gen.dimension(1, 6), 0.0, 3.0, 0.4);
    const double fast = mu(a);
    const double slow = exhaustive_mu(a);
    c.expect(approx_equal(fast, slow, kStructural),
             "mu=" + fmt(fast) + " enumeration=" + fmt(slow) + " for " + to_string(a));
  }
}

void coherence_suite(Check& c, const std::vector<Produced>& made) {
  for (const auto& p : made) {
    const std::size_t q = p.limit.q;
    const MaxMatrix aq = max_pow(p.a, q);
    for (std::size_t j = 1; j <= q; ++j) {
      c.expect(approx_equal(max_mul(p.a, p.limit.at(j)), p.limit.at(j + 1), kExact),
               p.origin + ": A L_" + std::to_string(j) + " != L_" + std::to_string(j % q + 1));
      c.expect(approx_equal(max_mul(aq, p.limit.at(j)), p.limit.at(j), kExact),
               p.origin + ": A^q L_" + std::to_string(j) + " != L_" + std::to_string(j));
    }
  }
}

void commuting_mu_suite(Check& c) {
  Generator gen(10);
  const std::vector<double> entries{0, 0, 0.5, 1, 1.5, 2};
  const std::vector<double> coeffs{0, 0.5, 1, 2};
  std::size_t irreducible_pairs = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = gen.dimension(2, 5);
    const MaxMatrix m = gen.matrix_from(n, entries);
    std::vector<double> ca(gen.dimension(2, 4));
    std::vector<double> cb(gen.dimension(2, 4));
    std::uniform_int_distribution<std::size_t> pick(0, coeffs.size() - 1);
    for (double& x : ca) x = coeffs[pick(gen.engine())];
    for (double& x : cb) x = coeffs[pick(gen.engine())];
    const MaxMatrix a = polynomial(m, ca);
    const MaxMatrix b = polynomial(m, cb);
    const CommutingMuReport r = check_commuting_mu(a, b);
    c.expect(r.product_bound_holds, "mu(AB)=" + fmt(r.mu_product) + " > mu(A)mu(B)=" +
                                        fmt(r.product_of_mu));
    c.expect(r.sum_bound_holds, "mu(A+B)=" + fmt(r.mu_sum) + " > max=" + fmt(r.max_of_mu));
    if (r.both_irreducible) {
      ++irreducible_pairs;
      c.expect(r.product_equal && r.sum_equal,
               "irreducible pair without equality: A=" + to_string(a) + " B=" + to_string(b));
    }
  }
  c.expect(irreducible_pairs > 0, "no irreducible pairs generated");
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<Produced> made;
  std::vector<CriterionResult> out;
  out.push_back(run(1, "swap limits and point periods", [&](Check& c) { swap_limit(c, made); }));
  out.push_back(run(2, "triangular spectra", triangular_spectra));
  out.push_back(run(3, "three-vertex limits", [&](Check& c) { three_vertex(c, made); }));
  out.push_back(run(4, "commuting word limits", [&](Check& c) { commuting_words(c, made); }));
  out.push_back(run(5, "shared eigenvector limits", shared_eigen));
  out.push_back(run(6, "mu bounds (200 random)", bounds_suite));
  out.push_back(run(7, "period vs oracle (100 random)", [&](Check& c) { oracle_suite(c, made); }));
  out.push_back(run(8, "mu vs circuit enumeration (100 random)", exhaustive_mu_suite));
  out.push_back(run(9, "limit coherence", [&](Check& c) { coherence_suite(c, made); }));
  out.push_back(run(10, "commuting mu inequalities (50 random)", commuting_mu_suite));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << ' ';
  if (r.id < 10) os << ' ';
  os << r.id << ' ' << r.name << ": " << r.detail;
  return os.str();
}

}  // namespace maxalg::verify
