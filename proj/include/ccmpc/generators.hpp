#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccmpc/graph.hpp"

namespace ccmpc {

enum class Family {
  kGnp,
  kGnpPlus,
  kPath,
  kCycle,
  kStar,
  kComplete,
  kBinaryTree,
  kCaterpillar,
  kDisjointUnion,
};

std::string_view family_name(Family f);
Family parse_family(std::string_view name);  // ConfigError on unknown

struct GenSpec {
  Family family = Family::kPath;
  std::size_t n = 0;
  double p = 0.0;                       // gnp, gnp_plus
  std::vector<EdgeRecord> extra_edges;  // gnp_plus
  std::size_t legs = 1;                 // caterpillar: leaves per spine vertex
  std::vector<GenSpec> parts;           // disjoint_union, ids laid out in order
  std::uint64_t seed = 0;
  // Relabel vertices by a seeded random permutation after generation.
  bool permute = false;

  void validate() const;
};

// Deterministic in spec (including seed).
Graph generate(const GenSpec& spec);

// Sparse G(n, p) by geometric skipping over absent pairs.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

// Exact maximum eccentricity, taken per component and maximized.
std::uint32_t diameter(const Graph& g);

// Max eccentricity seen over `sweeps` BFS runs, each started from the
// farthest vertex of the previous one. Never exceeds diameter(g).
std::uint32_t diameter_lower_bound(const Graph& g, std::size_t sweeps = 4,
                                   VertexId start = 0);

// Hop distances from source; kNoVertex for unreachable vertices.
std::vector<VertexId> bfs_distances(const Graph& g, VertexId source);

}  // namespace ccmpc
