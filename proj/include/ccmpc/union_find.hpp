#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ccmpc/graph.hpp"

namespace ccmpc {

// Disjoint sets with union by rank and path compression (path halving).
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<VertexId>(i);
  }

  std::size_t size() const { return parent_.size(); }

  VertexId find(VertexId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false when already joined.
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  // rep[v] = minimum member of v's set.
  ComponentAssignment assignment();

 private:
  std::vector<VertexId> parent_;
  std::vector<unsigned char> rank_;
};

// Consumes `edges` exactly once; memory is O(n). Throws std::out_of_range on
// an id >= n.
template <typename EdgeRange>
ComponentAssignment union_find_components(EdgeRange&& edges, std::size_t n) {
  UnionFind uf(n);
  for (const EdgeRecord& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::out_of_range("edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ") outside [0, " +
                              std::to_string(n) + ")");
    }
    uf.unite(e.u, e.v);
  }
  return uf.assignment();
}

inline ComponentAssignment union_find_components(const Graph& g) {
  return union_find_components(g.edges(), g.num_vertices());
}

}  // namespace ccmpc
