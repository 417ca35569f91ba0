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
#include <vector>

#include "maxalg/matrix.hpp"

namespace maxalg {

/// Weighted digraph G(A): an edge i -> j of weight a_ij for each a_ij > 0.
struct Digraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    double weight;
  };

  std::size_t n = 0;
  std::vector<Edge> edges;

  /// Successor lists.
  std::vector<std::vector<std::size_t>> adjacency() const;
};

Digraph to_digraph(const MaxMatrix& a);

/// Strongly connected components of g, in no particular order.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const Digraph& g);

enum class BlockKind { irreducible, null_1x1 };

/// Permutation and block partition putting a matrix in block upper
/// triangular form with irreducible or 1x1 zero diagonal blocks.
struct FrobeniusForm {
  std::size_t n = 0;
  /// permutation[k] is the original vertex placed at position k.
  std::vector<std::size_t> permutation;
  /// Vertices of each class in original indices, ascending. Classes appear
  /// in block order.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<BlockKind> kinds;
  /// access[i][j]: class i reaches class j. Reflexive and transitive.
  std::vector<std::vector<bool>> access;

  std::size_t class_count() const noexcept { return classes.size(); }
  /// Position in the permuted order where class c starts.
  std::size_t block_offset(std::size_t c) const;
  /// Class index of an original vertex.
  std::size_t class_of(std::size_t vertex) const;
};

/// Classes ordered so that the permuted matrix is block upper triangular;
/// among classes with no access either way the one holding the smaller
/// original vertex comes first.
FrobeniusForm communication_classes(const Digraph& g);
FrobeniusForm frobenius_form(const MaxMatrix& a);

/// A 1x1 zero matrix is not irreducible.
bool is_irreducible(const MaxMatrix& a);

/// P A P^T, i.e. entry (k, l) is a(permutation[k], permutation[l]).
MaxMatrix apply_permutation(const MaxMatrix& a, const FrobeniusForm& form);
MaxMatrix apply_permutation(const MaxMatrix& a,
                            const std::vector<std::size_t>& permutation);

/// Principal submatrix on `vertices` (in the order given).
MaxMatrix principal_submatrix(const MaxMatrix& a,
                              const std::vector<std::size_t>& vertices);

/// True if every entry below the diagonal blocks of the permuted matrix is 0.
bool is_block_upper_triangular(const MaxMatrix& permuted,
                               const FrobeniusForm& form);

}  // namespace maxalg
