#include "ccmpc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ccmpc {
namespace {

struct Csr {
  std::vector<std::uint64_t> offsets;
  std::vector<VertexId> adjacency;
};

template <typename EdgeFn>
Csr BuildCsr(std::size_t n, std::size_t count, EdgeFn edge_at) {
  if (n >= static_cast<std::size_t>(kNoVertex)) {
    throw std::length_error("graph exceeds 32-bit vertex range");
  }
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (std::size_t i = 0; i < count; ++i) {
    auto [u, v] = edge_at(i);
    if (u >= n || v >= n) {
      throw std::out_of_range("edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") outside [0, " +
                              std::to_string(n) + ")");
    }
    if (u == v) continue;
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];

  std::vector<VertexId> adjacency(offsets[n]);
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t i = 0; i < count; ++i) {
    auto [u, v] = edge_at(i);
    if (u == v) continue;
    adjacency[cursor[u]++] = static_cast<VertexId>(v);
    adjacency[cursor[v]++] = static_cast<VertexId>(u);
  }
  cursor.clear();
  cursor.shrink_to_fit();

  // Sort + dedup each list, compacting in place.
  std::uint64_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    const std::uint64_t start = write;
    for (auto it = first; it != last; ++it) adjacency[write++] = *it;
    offsets[v] = start;
  }
  offsets[n] = write;
  adjacency.resize(write);
  adjacency.shrink_to_fit();
  return {std::move(offsets), std::move(adjacency)};
}

}  // namespace

Graph Graph::FromEdges(std::size_t n, std::span<const EdgeRecord> edges) {
  Csr csr = BuildCsr(n, edges.size(), [&](std::size_t i) {
    return std::pair<std::uint64_t, std::uint64_t>{edges[i].u, edges[i].v};
  });
  return Adopt(std::move(csr.offsets), std::move(csr.adjacency));
}

Graph Graph::FromEdges(std::size_t n,
                       std::span<const std::pair<VertexId, VertexId>> edges) {
  Csr csr = BuildCsr(n, edges.size(), [&](std::size_t i) {
    return std::pair<std::uint64_t, std::uint64_t>{edges[i].first,
                                                   edges[i].second};
  });
  return Adopt(std::move(csr.offsets), std::move(csr.adjacency));
}

Graph Graph::Adopt(std::vector<std::uint64_t> offsets,
                   std::vector<VertexId> adjacency) {
  Graph g;
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(adjacency);
  return g;
}

Graph Graph::FromCsr(std::vector<std::uint64_t> offsets,
                     std::vector<VertexId> adjacency) {
  if (offsets.empty() || offsets.front() != 0 ||
      offsets.back() != adjacency.size()) {
    throw std::invalid_argument("malformed CSR offsets");
  }
  Graph g;
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(adjacency);
  const std::size_t n = g.num_vertices();
  if (n > static_cast<std::size_t>(kNoVertex)) {
    throw std::length_error("graph exceeds 32-bit vertex range");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.offsets_[v] > g.offsets_[v + 1]) {
      throw std::invalid_argument("CSR offsets not monotone");
    }
    auto nb = g.neighbors(static_cast<VertexId>(v));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n || nb[i] == v || (i > 0 && nb[i - 1] >= nb[i])) {
        throw std::invalid_argument("adjacency of " + std::to_string(v) +
                                    " is not a sorted simple list");
      }
    }
  }
  // Symmetry: every (u, v) has a matching (v, u).
  for (std::size_t v = 0; v < n; ++v) {
    for (VertexId u : g.neighbors(static_cast<VertexId>(v))) {
      auto nb = g.neighbors(u);
      if (!std::binary_search(nb.begin(), nb.end(), static_cast<VertexId>(v))) {
        throw std::invalid_argument("adjacency is not symmetric");
      }
    }
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<EdgeRecord> Graph::edge_list() const {
  std::vector<EdgeRecord> out;
  out.reserve(num_edges());
  for (EdgeRecord e : edges()) out.push_back(e);
  return out;
}

IdTable IdTable::Identity(std::size_t n) {
  IdTable t;
  t.external.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.external[i] = i;
  return t;
}

std::size_t ComponentAssignment::num_components() const {
  std::size_t count = 0;
  for (std::size_t v = 0; v < rep.size(); ++v) count += (rep[v] == v);
  return count;
}

bool partition_equal(const ComponentAssignment& a,
                     const ComponentAssignment& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("assignments cover different vertex universes");
  }
  const std::size_t n = a.size();
  // a-label -> b-label and back must both be functions.
  std::vector<VertexId> a_to_b(n, kNoVertex), b_to_a(n, kNoVertex);
  for (std::size_t v = 0; v < n; ++v) {
    const VertexId la = a.rep[v], lb = b.rep[v];
    if (la >= n || lb >= n) {
      throw std::invalid_argument("representative outside vertex universe");
    }
    if (a_to_b[la] == kNoVertex) a_to_b[la] = lb;
    if (b_to_a[lb] == kNoVertex) b_to_a[lb] = la;
    if (a_to_b[la] != lb || b_to_a[lb] != la) return false;
  }
  return true;
}

}  // namespace ccmpc
