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

#include "maxalg/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "maxalg/error.hpp"

namespace maxalg {

std::vector<std::vector<std::size_t>> Digraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : edges) adj[e.from].push_back(e.to);
  return adj;
}

Digraph to_digraph(const MaxMatrix& a) {
  Digraph g;
  g.n = a.size();
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) {
      if (a(i, j) > 0) g.edges.push_back({i, j, a(i, j)});
    }
  }
  return g;
}

// Iterative Tarjan; an explicit call stack keeps deep chains off the
// machine stack.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const Digraph& g) {
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  const auto adj = g.adjacency();
  std::vector<std::size_t> index(g.n, unvisited);
  std::vector<std::size_t> lowlink(g.n, 0);
  std::vector<bool> on_stack(g.n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> sccs;
  std::size_t next_index = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t next_child;
  };
  std::vector<Frame> calls;

  for (std::size_t root = 0; root < g.n; ++root) {
    if (index[root] != unvisited) continue;
    calls.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!calls.empty()) {
      Frame& f = calls.back();
      const std::size_t v = f.vertex;
      if (f.next_child < adj[v].size()) {
        const std::size_t w = adj[v][f.next_child++];
        if (index[w] == unvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        std::vector<std::size_t> scc;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          scc.push_back(w);
        } while (w != v);
        std::sort(scc.begin(), scc.end());
        sccs.push_back(std::move(scc));
      }
      calls.pop_back();
      if (!calls.empty()) {
        const std::size_t parent = calls.back().vertex;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }
  return sccs;
}

std::size_t FrobeniusForm::block_offset(std::size_t c) const {
  std::size_t off = 0;
  for (std::size_t k = 0; k < c; ++k) off += classes[k].size();
  return off;
}

std::size_t FrobeniusForm::class_of(std::size_t vertex) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::binary_search(classes[c].begin(), classes[c].end(), vertex)) return c;
  }
  throw DimensionError("vertex " + std::to_string(vertex) + " out of range");
}

FrobeniusForm communication_classes(const Digraph& g) {
  auto sccs = strongly_connected_components(g);
  const std::size_t m = sccs.size();

  std::vector<std::size_t> comp(g.n);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t v : sccs[c]) comp[v] = c;
  }

  std::vector<bool> self_loop(g.n, false);
  std::vector<std::vector<bool>> dag(m, std::vector<bool>(m, false));
  for (const auto& e : g.edges) {
    if (e.from == e.to) self_loop[e.from] = true;
    if (comp[e.from] != comp[e.to]) dag[comp[e.from]][comp[e.to]] = true;
  }

  // Kahn's algorithm; ties broken by smallest original vertex.
  std::vector<std::size_t> indegree(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (dag[a][b]) ++indegree[b];
    }
  }
  using Item = std::pair<std::size_t, std::size_t>;  // (min vertex, comp)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t c = 0; c < m; ++c) {
    if (indegree[c] == 0) ready.push({sccs[c].front(), c});
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t c = ready.top().second;
    ready.pop();
    order.push_back(c);
    for (std::size_t b = 0; b < m; ++b) {
      if (dag[c][b] && --indegree[b] == 0) ready.push({sccs[b].front(), b});
    }
  }

  FrobeniusForm form;
  form.n = g.n;
  std::vector<std::size_t> position(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& cls = sccs[order[k]];
    position[order[k]] = k;
    form.classes.push_back(cls);
    form.permutation.insert(form.permutation.end(), cls.begin(), cls.end());
    const bool null_block = cls.size() == 1 && !self_loop[cls.front()];
    form.kinds.push_back(null_block ? BlockKind::null_1x1
                                    : BlockKind::irreducible);
  }

  form.access.assign(m, std::vector<bool>(m, false));
  for (std::size_t k = 0; k < m; ++k) form.access[k][k] = true;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (dag[a][b]) form.access[position[a]][position[b]] = true;
    }
  }
  // Block order is topological, so one backward sweep closes the relation.
  for (std::size_t k = m; k-- > 0;) {
    for (std::size_t j = k + 1; j < m; ++j) {
      if (!form.access[k][j]) continue;
      for (std::size_t l = j + 1; l < m; ++l) {
        if (form.access[j][l]) form.access[k][l] = true;
      }
    }
  }
  return form;
}

FrobeniusForm frobenius_form(const MaxMatrix& a) {
  return communication_classes(to_digraph(a));
}

bool is_irreducible(const MaxMatrix& a) {
  const auto form = frobenius_form(a);
  return form.class_count() == 1 && form.kinds[0] == BlockKind::irreducible;
}

MaxMatrix apply_permutation(const MaxMatrix& a,
                            const std::vector<std::size_t>& permutation) {
  const std::size_t n = a.size();
  if (permutation.size() != n) {
    throw DimensionError("apply_permutation: permutation of length " +
                         std::to_string(permutation.size()) + " for a " +
                         std::to_string(n) + "x" + std::to_string(n) +
                         " matrix");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t p : permutation) {
    if (p >= n || seen[p]) {
      throw PreconditionError("apply_permutation: not a permutation");
    }
    seen[p] = true;
  }
  std::vector<double> out(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      out[k * n + l] = a(permutation[k], permutation[l]);
    }
  }
  return MaxMatrix(n, std::move(out));
}

MaxMatrix apply_permutation(const MaxMatrix& a, const FrobeniusForm& form) {
  if (form.n != a.size()) {
    throw DimensionError("apply_permutation: form is for dimension " +
                         std::to_string(form.n) + ", matrix has " +
                         std::to_string(a.size()));
  }
  return apply_permutation(a, form.permutation);
}

MaxMatrix principal_submatrix(const MaxMatrix& a,
                              const std::vector<std::size_t>& vertices) {
  const std::size_t k = vertices.size();
  std::vector<double> out(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out[i * k + j] = a(vertices[i], vertices[j]);
  }
  return MaxMatrix(k, std::move(out));
}

bool is_block_upper_triangular(const MaxMatrix& permuted,
                               const FrobeniusForm& form) {
  std::vector<std::size_t> block(form.n);
  std::size_t pos = 0;
  for (std::size_t c = 0; c < form.class_count(); ++c) {
    for (std::size_t k = 0; k < form.classes[c].size(); ++k) block[pos++] = c;
  }
  for (std::size_t i = 0; i < form.n; ++i) {
    for (std::size_t j = 0; j < form.n; ++j) {
      if (block[i] > block[j] && permuted(i, j) != 0.0) return false;
    }
  }
  return true;
}

}  // namespace maxalg
