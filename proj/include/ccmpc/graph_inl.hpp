#pragma once

#include <unordered_map>

namespace ccmpc {

inline void Graph::EdgeIterator::Settle() {
  const auto& off = g_->offsets_;
  const auto& adj = g_->adjacency_;
  const std::size_t n = g_->num_vertices();
  while (pos_ < adj.size()) {
    while (u_ < n && pos_ >= off[u_ + 1]) ++u_;
    if (adj[pos_] > u_) return;
    ++pos_;
  }
}

template <typename Label>
ComponentAssignment canonical_assignment(std::span<const Label> labels) {
  ComponentAssignment out;
  out.rep.resize(labels.size());
  std::unordered_map<Label, VertexId> first;
  first.reserve(labels.size());
  // Scanning in increasing id order makes the first hit the minimum.
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = first.try_emplace(labels[v], static_cast<VertexId>(v));
    out.rep[v] = it->second;
  }
  return out;
}

}  // namespace ccmpc
