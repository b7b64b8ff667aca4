#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccmpc/graph.hpp"

namespace ccmpc {

// label[v] names the representative v is merged into. Every label group must
// lie inside one connected component for contraction to preserve components.
struct LabelMap {
  std::vector<VertexId> label;

  std::size_t size() const { return label.size(); }
  static LabelMap Identity(std::size_t n);
  friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

struct ContractionOutcome {
  Graph contracted;
  std::vector<VertexId> mapping;            // old node -> new node
  std::vector<std::uint64_t> cluster_size;  // previous-level nodes per new node
  std::vector<std::uint64_t> cluster_weight;  // original vertices per new node
  std::uint64_t cross_edges = 0;  // old edges with distinct endpoint labels
};

// Merges vertices with equal labels. New node ids follow the increasing order
// of the label values. `weights` gives each old node's original-vertex count
// (all ones when empty). Throws std::invalid_argument for a label map of the
// wrong size or a label outside [0, n).
ContractionOutcome contract_by_labels(const Graph& g, const LabelMap& labels,
                                      std::span<const std::uint64_t> weights = {});

struct PruneResult {
  Graph graph;                      // minimum degree >= 1
  std::vector<VertexId> mapping;    // old -> new, kNoVertex for removed nodes
  std::vector<VertexId> finalized;  // removed (isolated) old nodes
};

PruneResult prune_isolated(const Graph& g);
inline PruneResult prune_isolated(const ContractionOutcome& o) {
  return prune_isolated(o.contracted);
}

// A node that left the computation early as its own component root.
struct PrunedRecord {
  std::uint32_t level = 0;
  VertexId node = 0;
};

// Level i holds level_sizes[i] nodes; steps[i] maps level i into level i + 1
// (kNoVertex for pruned nodes). Nodes of the last level are roots.
struct PhaseChain {
  std::vector<std::size_t> level_sizes;
  std::vector<std::vector<VertexId>> steps;
  std::vector<PrunedRecord> pruned;

  explicit PhaseChain(std::size_t n0 = 0) : level_sizes{n0} {}
  std::uint32_t last_level() const {
    return static_cast<std::uint32_t>(level_sizes.size() - 1);
  }
  // Appends a step from the current last level to a new level of `next_size`.
  void push(std::vector<VertexId> step, std::size_t next_size);
  void prune(VertexId node) { pruned.push_back({last_level(), node}); }
};

// Resolves every level-0 vertex to its root; representative = minimum level-0
// id per root. Throws ConsistencyError on a dangling or out-of-range image.
ComponentAssignment compose_mappings(const PhaseChain& chain);

}  // namespace ccmpc
