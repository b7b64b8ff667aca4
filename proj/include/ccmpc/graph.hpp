#pragma once

#include <cstdint>
#include <iterator>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace ccmpc {

// Dense in-graph vertex index. External ids are 64-bit and live in an IdTable.
using VertexId = std::uint32_t;
using ExternalId = std::uint64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Undirected edge, canonically stored with u < v.
struct EdgeRecord {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
  friend auto operator<=>(const EdgeRecord&, const EdgeRecord&) = default;
};

// Immutable undirected simple graph in CSR form. Adjacency lists are sorted,
// symmetric, free of self-loops and duplicates.
class Graph {
 public:
  Graph() : offsets_{0} {}

  // Normalizes an arbitrary edge list over [0, n): drops self-loops,
  // symmetrizes and dedups. Throws std::out_of_range on ids >= n.
  static Graph FromEdges(std::size_t n, std::span<const EdgeRecord> edges);
  static Graph FromEdges(std::size_t n,
                         std::span<const std::pair<VertexId, VertexId>> edges);

  // Adopts an already-normalized CSR. Validates the invariants.
  static Graph FromCsr(std::vector<std::uint64_t> offsets,
                       std::vector<VertexId> adjacency);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return adjacency_.size() / 2; }
  std::size_t degree(VertexId v) const {
    return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }
  bool has_edge(VertexId u, VertexId v) const;

  const std::vector<std::uint64_t>& offsets() const { return offsets_; }
  const std::vector<VertexId>& adjacency() const { return adjacency_; }

  // Canonical (u < v) edges in lexicographic order.
  class EdgeIterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = EdgeRecord;
    using difference_type = std::ptrdiff_t;

    EdgeIterator() = default;
    EdgeIterator(const Graph* g, VertexId u, std::uint64_t pos)
        : g_(g), u_(u), pos_(pos) {
      Settle();
    }
    EdgeRecord operator*() const { return {u_, g_->adjacency_[pos_]}; }
    EdgeIterator& operator++() {
      ++pos_;
      Settle();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const EdgeIterator& a, const EdgeIterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    void Settle();
    const Graph* g_ = nullptr;
    VertexId u_ = 0;
    std::uint64_t pos_ = 0;
  };

  struct EdgeRange {
    const Graph* g;
    EdgeIterator begin() const { return {g, 0, 0}; }
    EdgeIterator end() const {
      return {g, static_cast<VertexId>(g->num_vertices()),
              g->adjacency_.size()};
    }
  };
  EdgeRange edges() const& { return {this}; }
  EdgeRange edges() const&& = delete;  // would dangle
  std::vector<EdgeRecord> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static Graph Adopt(std::vector<std::uint64_t> offsets,
                     std::vector<VertexId> adjacency);

  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> adjacency_;
};

// Dense -> external id table. Dense ids are assigned in increasing external
// order, so the minimum dense id of a set is also its minimum external id.
struct IdTable {
  std::vector<ExternalId> external;

  static IdTable Identity(std::size_t n);
  std::size_t size() const { return external.size(); }
};

// Component representative per vertex: rep[v] is the vertex of minimum
// external id in v's component.
struct ComponentAssignment {
  std::vector<VertexId> rep;

  std::size_t size() const { return rep.size(); }
  std::size_t num_components() const;
  friend bool operator==(const ComponentAssignment&,
                         const ComponentAssignment&) = default;
};

// True iff both assignments induce the same partition. Throws
// std::invalid_argument when the universes differ.
bool partition_equal(const ComponentAssignment& a, const ComponentAssignment& b);

// Rebuilds a canonical assignment (representative = min id) from any labeling
// whose equal values mark equal components.
template <typename Label>
ComponentAssignment canonical_assignment(std::span<const Label> labels);

}  // namespace ccmpc

#include "ccmpc/graph_inl.hpp"
