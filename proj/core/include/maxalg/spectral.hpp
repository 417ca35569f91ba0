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
#include <utility>
#include <vector>

#include "maxalg/graph.hpp"
#include "maxalg/matrix.hpp"
#include "maxalg/tolerance.hpp"

namespace maxalg {

/// Maximum circuit geometric mean. 0 when G(a) is acyclic.
///
/// Runs Karp's maximum mean cycle algorithm on log-weights inside each
/// strongly connected component and exponentiates the best mean back.
double mu(const MaxMatrix& a);

struct MuBounds {
  double lower;  ///< min over rows of the row maximum
  double upper;  ///< largest entry
};

MuBounds mu_bounds(const MaxMatrix& a);

/// Edges lying on circuits whose geometric mean equals mu(a).
struct CriticalGraph {
  double mu = 0;
  std::vector<std::size_t> critical_vertices;
  std::vector<std::pair<std::size_t, std::size_t>> critical_edges;
  /// a_ij on critical edges, 0 elsewhere.
  MaxMatrix critical_matrix{1};
};

/// Throws PreconditionError when mu(a) = 0.
CriticalGraph critical_graph(const MaxMatrix& a, const Tolerances& tol = {});

struct ClassSpectrum {
  std::size_t class_index;
  double mu;
  bool admissible;
};

struct Eigenpair {
  double value;
  /// Class whose mu equals `value` and whose critical column produced the
  /// vector.
  std::size_t witness_class;
  MaxVector vector;
};

struct SpectralReport {
  double mu = 0;
  FrobeniusForm form;
  /// One entry per Frobenius class, in block order.
  std::vector<ClassSpectrum> classes;
  /// One witness per distinct admissible eigenvalue, ascending by value.
  std::vector<Eigenpair> eigenpairs;

  /// Distinct admissible eigenvalues, ascending.
  std::vector<double> eigenvalues() const;
};

/// Max eigenvalues of a (Frobenius-Victory): mu(A_ii) is an eigenvalue iff
/// no class with access to class i has a larger class mu.
SpectralReport spectrum(const MaxMatrix& a, const Tolerances& tol = {});

/// Positive eigenvector for mu(a), scaled so its largest component is 1.
/// Throws PreconditionError for reducible input.
MaxVector principal_eigenvector(const MaxMatrix& a,
                                const Tolerances& tol = {});

/// Residual of a (x) v = lambda v, relative to the largest component.
double eigen_residual(const MaxMatrix& a, const MaxVector& v, double lambda);

struct DadScaling {
  /// Diagonal of D, strictly positive.
  MaxVector d;
  /// D^-1 a D, bounded by J_n.
  MaxMatrix scaled;
};

/// Diagonal similarity with D = diag(kleene_star(a) (x) seed). Requires a
/// irreducible, mu(a) <= 1 and a nonzero nonnegative seed.
DadScaling dad_scale(const MaxMatrix& a, const MaxVector& seed,
                     const Tolerances& tol = {});

struct CommutingMuReport {
  double mu_product;      ///< mu(a (x) b)
  double product_of_mu;   ///< mu(a) mu(b)
  double mu_sum;          ///< mu(a (+) b)
  double max_of_mu;       ///< max(mu(a), mu(b))
  bool product_bound_holds;
  bool sum_bound_holds;
  bool both_irreducible;
  bool product_equal;
  bool sum_equal;
};

/// Throws PreconditionError naming the first entry where a (x) b and
/// b (x) a differ.
CommutingMuReport check_commuting_mu(const MaxMatrix& a, const MaxMatrix& b,
                                     const Tolerances& tol = {});

}  // namespace maxalg
