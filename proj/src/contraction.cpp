#include "ccmpc/contraction.hpp"

#include <stdexcept>
#include <string>

#include "ccmpc/errors.hpp"

namespace ccmpc {

LabelMap LabelMap::Identity(std::size_t n) {
  LabelMap l;
  l.label.resize(n);
  for (std::size_t v = 0; v < n; ++v) l.label[v] = static_cast<VertexId>(v);
  return l;
}

ContractionOutcome contract_by_labels(const Graph& g, const LabelMap& labels,
                                      std::span<const std::uint64_t> weights) {
  const std::size_t n = g.num_vertices();
  if (labels.size() != n) {
    throw std::invalid_argument("label map covers " +
                                std::to_string(labels.size()) +
                                " vertices, graph has " + std::to_string(n));
  }
  if (!weights.empty() && weights.size() != n) {
    throw std::invalid_argument("weight vector size mismatch");
  }

  // Dense renumbering of the distinct labels in increasing order.
  std::vector<VertexId> new_id(n, kNoVertex);
  for (std::size_t v = 0; v < n; ++v) {
    const VertexId l = labels.label[v];
    if (l >= n) {
      throw std::invalid_argument("label " + std::to_string(l) + " of vertex " +
                                  std::to_string(v) + " is not a vertex");
    }
    new_id[l] = 0;
  }
  VertexId next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (new_id[x] != kNoVertex) new_id[x] = next++;
  }

  ContractionOutcome out;
  out.mapping.resize(n);
  out.cluster_size.assign(next, 0);
  out.cluster_weight.assign(next, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const VertexId c = new_id[labels.label[v]];
    out.mapping[v] = c;
    out.cluster_size[c] += 1;
    out.cluster_weight[c] += weights.empty() ? 1 : weights[v];
  }
  new_id.clear();
  new_id.shrink_to_fit();

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeRecord e : g.edges()) {
    const VertexId a = out.mapping[e.u], b = out.mapping[e.v];
    if (a != b) edges.emplace_back(a, b);
  }
  out.cross_edges = edges.size();
  out.contracted = Graph::FromEdges(next, edges);
  return out;
}

PruneResult prune_isolated(const Graph& g) {
  const std::size_t n = g.num_vertices();
  PruneResult out;
  out.mapping.assign(n, kNoVertex);
  VertexId next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(static_cast<VertexId>(v)) == 0) {
      out.finalized.push_back(static_cast<VertexId>(v));
    } else {
      out.mapping[v] = next++;
    }
  }
  if (out.finalized.empty()) {
    out.graph = g;
    return out;
  }
  std::vector<std::uint64_t> offsets;
  std::vector<VertexId> adjacency;
  offsets.reserve(next + 1);
  adjacency.reserve(g.adjacency().size());
  offsets.push_back(0);
  for (std::size_t v = 0; v < n; ++v) {
    if (out.mapping[v] == kNoVertex) continue;
    // Renumbering is monotone, so lists stay sorted.
    for (VertexId u : g.neighbors(static_cast<VertexId>(v))) {
      adjacency.push_back(out.mapping[u]);
    }
    offsets.push_back(adjacency.size());
  }
  out.graph = Graph::FromCsr(std::move(offsets), std::move(adjacency));
  return out;
}

void PhaseChain::push(std::vector<VertexId> step, std::size_t next_size) {
  if (step.size() != level_sizes.back()) {
    throw ConsistencyError("step covers " + std::to_string(step.size()) +
                           " nodes, level has " +
                           std::to_string(level_sizes.back()));
  }
  steps.push_back(std::move(step));
  level_sizes.push_back(next_size);
}

ComponentAssignment compose_mappings(const PhaseChain& chain) {
  const std::size_t levels = chain.level_sizes.size();
  if (chain.steps.size() + 1 != levels) {
    throw ConsistencyError("chain has mismatched steps and levels");
  }
  std::vector<std::vector<bool>> is_pruned(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    is_pruned[i].assign(chain.level_sizes[i], false);
  }
  for (const PrunedRecord& r : chain.pruned) {
    if (r.level >= levels || r.node >= chain.level_sizes[r.level]) {
      throw ConsistencyError("pruned record outside its level");
    }
    is_pruned[r.level][r.node] = true;
  }

  std::uint64_t next_root = 0;
  std::vector<std::uint64_t> root(chain.level_sizes.back());
  for (auto& r : root) r = next_root++;
  for (std::size_t i = levels - 1; i-- > 0;) {
    const auto& step = chain.steps[i];
    std::vector<std::uint64_t> cur(step.size());
    for (std::size_t v = 0; v < step.size(); ++v) {
      if (is_pruned[i][v]) {
        cur[v] = next_root++;
      } else if (step[v] == kNoVertex || step[v] >= root.size()) {
        throw ConsistencyError("node " + std::to_string(v) + " at level " +
                               std::to_string(i) + " has no resolution path");
      } else {
        cur[v] = root[step[v]];
      }
    }
    root = std::move(cur);
  }
  return canonical_assignment<std::uint64_t>(root);
}

}  // namespace ccmpc
