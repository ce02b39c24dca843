#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gstate/bit_matrix.hpp"
#include "gstate/entropy.hpp"
#include "gstate/partition.hpp"
#include "gstate/pauli.hpp"
#include "gstate/spin_flip_group.hpp"

namespace gstate {

/// Simple undirected graph on vertices {0..n-1}.
class Graph {
public:
  Graph() = default;

  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges)
      : n_(n), edges_(std::move(edges)), adjacency_(n, n, 2) {
    for (auto& [u, v] : edges_) {
      if (u >= n_ || v >= n_) {
        throw std::invalid_argument("edge endpoint out of range");
      }
      if (u == v) {
        throw std::invalid_argument("self-loops are not allowed");
      }
      if (u > v) {
        std::swap(u, v);
      }
      adjacency_.set(u, v, 1);
      adjacency_.set(v, u, 1);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  std::size_t n() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const BitMatrix& adjacency() const { return adjacency_; }

  bool has_edge(std::size_t u, std::size_t v) const { return adjacency_.get(u, v) != 0; }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n_; u++) {
      if (adjacency_.get(v, u)) {
        out.push_back(u);
      }
    }
    return out;
  }

  // Built-in families. Vertices are 0-based; the CLI names are 1-based.
  static Graph star(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 1; i < n; i++) {
      e.emplace_back(0, i);
    }
    return Graph(n, std::move(e));
  }

  static Graph line(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; i++) {
      e.emplace_back(i, i + 1);
    }
    return Graph(n, std::move(e));
  }

  static Graph ring(std::size_t n) {
    if (n < 3) {
      throw std::invalid_argument("ring needs at least 3 vertices");
    }
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; i++) {
      e.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, std::move(e));
  }

  /// 2-D cluster grid with r rows and c columns, row-major vertex order.
  static Graph grid(std::size_t r, std::size_t c) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t y = 0; y < r; y++) {
      for (std::size_t x = 0; x < c; x++) {
        std::size_t v = y * c + x;
        if (x + 1 < c) {
          e.emplace_back(v, v + 1);
        }
        if (y + 1 < r) {
          e.emplace_back(v, v + c);
        }
      }
    }
    return Graph(r * c, std::move(e));
  }

private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  BitMatrix adjacency_{0, 0, 2};
};

/// Proper 2-coloring with |V1| <= |V2|.
struct TwoColoring {
  std::vector<std::size_t> v1;
  std::vector<std::size_t> v2;
};

/// Graph-state stabilizer: generator i is X_i times Z on the neighbors of i,
/// all signs +. Generator matrix ( I | adjacency ).
inline StabilizerGroup graph_state_stabilizer(const Graph& g) {
  std::vector<PauliString> gens;
  gens.reserve(g.n());
  for (std::size_t i = 0; i < g.n(); i++) {
    PauliString p(g.n());
    p.x.set(i, true);
    for (std::size_t j : g.neighbors(i)) {
      p.z.set(j, true);
    }
    gens.push_back(std::move(p));
  }
  return StabilizerGroup(std::move(gens), g.n());
}

/// Breadth-first 2-coloring. Per connected component the color class put
/// into V1 is the smaller one, ties broken toward the lexicographically
/// smaller vertex set. Returns nullopt when an odd cycle exists.
inline std::optional<TwoColoring> two_coloring(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  TwoColoring out;
  for (std::size_t start = 0; start < g.n(); start++) {
    if (color[start] != -1) {
      continue;
    }
    std::vector<std::size_t> side[2];
    color[start] = 0;
    side[0].push_back(start);
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          side[color[u]].push_back(u);
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
    int into_v1;
    if (side[0].size() != side[1].size()) {
      into_v1 = side[0].size() < side[1].size() ? 0 : 1;
    } else {
      into_v1 = std::lexicographical_compare(side[0].begin(), side[0].end(), side[1].begin(),
                                             side[1].end())
                    ? 0
                    : 1;
    }
    out.v1.insert(out.v1.end(), side[into_v1].begin(), side[into_v1].end());
    out.v2.insert(out.v2.end(), side[1 - into_v1].begin(), side[1 - into_v1].end());
  }
  std::sort(out.v1.begin(), out.v1.end());
  std::sort(out.v2.begin(), out.v2.end());
  return out;
}

struct GHomogeneousForm {
  SpinFlipGroup group;
  std::vector<std::size_t> hadamard_set;  // = V2
};

/// Converts a 2-colored graph state to its spin-flip-group form: Hadamards
/// on V2 turn generator i (i in V1) into the flip on the closed neighborhood
/// of i, and the V2 generators into pure phase flips.
inline GHomogeneousForm to_ghomogeneous(const Graph& g, const TwoColoring& c) {
  std::vector<int> color(g.n(), -1);
  for (std::size_t v : c.v1) {
    color[v] = 1;
  }
  for (std::size_t v : c.v2) {
    if (color[v] != -1) {
      throw std::invalid_argument("coloring classes overlap");
    }
    color[v] = 2;
  }
  for (std::size_t v = 0; v < g.n(); v++) {
    if (color[v] == -1) {
      throw std::invalid_argument("coloring does not cover all vertices");
    }
  }
  for (const auto& [u, v] : g.edges()) {
    if (color[u] == color[v]) {
      throw std::invalid_argument("coloring is not proper for this graph");
    }
  }
  BitMatrix rows(0, g.n(), 2);
  for (std::size_t v : c.v1) {
    BitVec closed(g.n());
    closed.set(v, true);
    for (std::size_t u : g.neighbors(v)) {
      closed.set(u, true);
    }
    rows.append_row(closed);
  }
  SpinFlipGroup group = rows.rows() == 0 ? SpinFlipGroup::trivial(g.n())
                                         : SpinFlipGroup::from_generators(rows);
  return {std::move(group), c.v2};
}

struct GraphEntropyReport {
  EntropyReport report;
  std::size_t v1_size = 0;      // entropy <= |V1|
  std::size_t half_floor = 0;   // |V1| <= floor(n/2)
};

/// Entropy of the graph state across the partition, computed through the
/// spin-flip form. Valid because the converting unitary is a product of
/// single-site Hadamards and so never crosses the cut. Non-bipartite graphs
/// are rejected.
inline GraphEntropyReport graph_entropy(const Graph& g, const Partition& p) {
  std::optional<TwoColoring> coloring = two_coloring(g);
  if (!coloring) {
    throw std::invalid_argument("graph is not 2-colorable; the conversion does not apply");
  }
  GHomogeneousForm form = to_ghomogeneous(g, *coloring);
  GraphEntropyReport out;
  out.report = homogeneous_entropy(form.group, p);
  out.v1_size = coloring->v1.size();
  out.half_floor = g.n() / 2;
  return out;
}

}  // namespace gstate
