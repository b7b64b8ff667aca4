#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "ccmpc/algorithms.hpp"
#include "ccmpc/contraction.hpp"
#include "ccmpc/priority.hpp"
#include "ccmpc/union_find.hpp"
#include "support/oracles.hpp"

namespace ccmpc {
namespace {

using testing::EdgeList;

Graph Path(std::size_t n) {
  EdgeList e;
  for (VertexId v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph::FromEdges(n, e);
}

TEST(Priority, EmptyAndDeterministic) {
  EXPECT_EQ(sample_priorities(1, 0, 0).size(), 0u);
  PriorityMap a = sample_priorities(9, 3, 100);
  PriorityMap b = sample_priorities(9, 3, 100);
  EXPECT_EQ(a.hashes(), b.hashes());
  EXPECT_EQ(a.hash(17), priority_hash(9, 3, 17));
  PriorityMap c = sample_priorities(9, 4, 100);
  EXPECT_NE(a.hashes(), c.hashes());
}

TEST(Priority, MillionDistinctOrderKeys) {
  PriorityMap p = sample_priorities(123, 0, 1'000'000);
  std::vector<std::pair<std::uint64_t, VertexId>> keys;
  keys.reserve(p.size());
  for (VertexId v = 0; v < p.size(); ++v) keys.emplace_back(p.hash(v), v);
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
}

TEST(Priority, TieBreakById) {
  PriorityMap p = PriorityMap::FromHashes({5, 5, 1});
  EXPECT_TRUE(p.less(0, 1));
  EXPECT_FALSE(p.less(1, 0));
  EXPECT_EQ(p.min(0, 2), 2u);
}

TEST(Priority, FixedHashValues) {
  // Pinned so that a change of hash function is caught.
  EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(priority_hash(0, 0, 0), mix64(mix64(mix64(0))));
}

TEST(Contract, IdentityLabelsReproduceGraph) {
  Graph g = testing::naive_gnp(30, 0.2, 4);
  ContractionOutcome o = contract_by_labels(g, LabelMap::Identity(30));
  EXPECT_EQ(o.contracted, g);
  std::vector<VertexId> id(30);
  std::iota(id.begin(), id.end(), VertexId{0});
  EXPECT_EQ(o.mapping, id);
  for (auto s : o.cluster_size) EXPECT_EQ(s, 1u);
}

TEST(Contract, FivePathWithTwoHopLabels) {
  ContractionOutcome o = contract_by_labels(Path(5), LabelMap{{0, 0, 0, 1, 2}});
  EXPECT_EQ(o.contracted.num_vertices(), 3u);
  EXPECT_EQ(o.contracted.num_edges(), 2u);
  EXPECT_EQ(o.mapping, (std::vector<VertexId>{0, 0, 0, 1, 2}));
  EXPECT_EQ(o.cluster_size, (std::vector<std::uint64_t>{3, 1, 1}));
}

TEST(Contract, TriangleCollapses) {
  Graph tri = Graph::FromEdges(3, EdgeList{{0, 1}, {1, 2}, {0, 2}});
  ContractionOutcome o = contract_by_labels(tri, LabelMap{{1, 1, 1}});
  EXPECT_EQ(o.contracted.num_vertices(), 1u);
  EXPECT_EQ(o.contracted.num_edges(), 0u);
  EXPECT_EQ(o.cross_edges, 0u);
}

TEST(Contract, WeightsAggregate) {
  std::vector<std::uint64_t> w{2, 3, 4, 5};
  ContractionOutcome o =
      contract_by_labels(Path(4), LabelMap{{1, 1, 3, 3}}, w);
  EXPECT_EQ(o.cluster_weight, (std::vector<std::uint64_t>{5, 9}));
  EXPECT_EQ(o.cluster_size, (std::vector<std::uint64_t>{2, 2}));
}

TEST(Contract, RejectsBadLabels) {
  EXPECT_THROW(contract_by_labels(Path(3), LabelMap{{0, 7, 0}}),
               std::invalid_argument);
  EXPECT_THROW(contract_by_labels(Path(3), LabelMap{{0, 0}}),
               std::invalid_argument);
}

// Random labels that stay inside components, merging non-adjacent vertices too.
LabelMap RandomComponentLabels(const Graph& g, std::mt19937_64& rng) {
  auto comp = testing::bfs_components(g);
  std::vector<std::vector<VertexId>> members(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) members[comp[v]].push_back(v);
  LabelMap l = LabelMap::Identity(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& m = members[comp[v]];
    l.label[v] = m[rng() % m.size()];
  }
  return l;
}

void ExpectPreservesComponents(const Graph& g, const LabelMap& l) {
  ContractionOutcome o = contract_by_labels(g, l);
  auto inner = testing::bfs_components(o.contracted);
  std::vector<VertexId> composed(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) composed[v] = inner[o.mapping[v]];
  ASSERT_TRUE(testing::same_partition(
      canonical_assignment<VertexId>(composed).rep, testing::bfs_components(g)));
  std::uint64_t total = 0;
  for (auto s : o.cluster_size) total += s;
  EXPECT_EQ(total, g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      ASSERT_EQ(o.mapping[u] == o.mapping[v], l.label[u] == l.label[v]);
    }
  }
}

TEST(Contract, PreservesComponentsExhaustive) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint32_t pairs = testing::pair_count(n);
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      Graph g = testing::graph_from_mask(n, mask);
      ExpectPreservesComponents(g, RandomComponentLabels(g, rng));
    }
  }
}

TEST(Contract, PreservesComponentsRandom) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    Graph g = testing::naive_gnp(60, 1.5 / 60, t);
    ExpectPreservesComponents(g, RandomComponentLabels(g, rng));
  }
}

TEST(Compose, EmptyChainIsIdentity) {
  PhaseChain chain(4);
  EXPECT_EQ(compose_mappings(chain).rep, (std::vector<VertexId>{0, 1, 2, 3}));
}

TEST(Compose, Transitivity) {
  // a,b,c = 0,1,2; x,y = 0,1; z = 0.
  PhaseChain chain(3);
  chain.push({0, 0, 1}, 2);
  chain.push({0, 0}, 1);
  EXPECT_EQ(compose_mappings(chain).rep, (std::vector<VertexId>{0, 0, 0}));
}

TEST(Compose, PrunedNodesAreRoots) {
  PhaseChain chain(4);
  chain.push({0, 0, 1, 2}, 3);
  chain.prune(2);
  chain.push({0, 0, kNoVertex}, 2);
  EXPECT_EQ(compose_mappings(chain).rep, (std::vector<VertexId>{0, 0, 0, 3}));
}

TEST(Compose, DanglingImageIsConsistencyError) {
  PhaseChain chain(2);
  chain.push({0, kNoVertex}, 1);  // vertex 1 vanishes without a prune record
  EXPECT_THROW(compose_mappings(chain), ConsistencyError);
}

TEST(Compose, AlgorithmChainsMatchUnionFind) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = testing::naive_gnp(200, 1.2 / 200, seed);
    RunResult r = run_local_contraction(g, testing::no_finalize(seed));
    EXPECT_EQ(r.assignment, union_find_components(g));
  }
}

TEST(Prune, EdgelessGraph) {
  PruneResult p = prune_isolated(Graph::FromEdges(3, EdgeList{}));
  EXPECT_EQ(p.graph.num_vertices(), 0u);
  EXPECT_EQ(p.finalized, (std::vector<VertexId>{0, 1, 2}));
}

TEST(Prune, PathPlusIsolated) {
  Graph g = Graph::FromEdges(4, EdgeList{{0, 2}, {2, 3}});
  PruneResult p = prune_isolated(g);
  EXPECT_EQ(p.graph.num_vertices(), 3u);
  EXPECT_EQ(p.graph.num_edges(), 2u);
  EXPECT_EQ(p.finalized, (std::vector<VertexId>{1}));
  EXPECT_EQ(p.mapping, (std::vector<VertexId>{0, kNoVertex, 1, 2}));
}

TEST(Prune, AfterOneLocalPhaseCountsDegreeZero) {
  Graph g = testing::naive_gnp(1000, 0.5 / 1000, 8);
  ContractionOutcome o = contract_by_labels(
      g, local_contraction_labels(g, sample_priorities(8, 0, 1000)));
  std::size_t zero = 0;
  for (VertexId v = 0; v < o.contracted.num_vertices(); ++v) {
    zero += o.contracted.degree(v) == 0;
  }
  PruneResult p = prune_isolated(o);
  EXPECT_EQ(p.finalized.size(), zero);
  for (VertexId v = 0; v < p.graph.num_vertices(); ++v) {
    EXPECT_GE(p.graph.degree(v), 1u);
  }
}

TEST(Chain, FinalizedPlusFinalNodesEqualN) {
  Graph g = testing::naive_gnp(500, 1.0 / 500, 3);
  RunResult r = run_local_contraction(g, testing::no_finalize(3));
  std::uint64_t finalized = 0;
  for (const auto& e : r.phases) finalized += e.finalized_nodes;
  // Isolated input vertices are pruned before phase 0.
  std::size_t iso = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) iso += g.degree(v) == 0;
  EXPECT_EQ(finalized + iso, r.assignment.num_components());
}

}  // namespace
}  // namespace ccmpc
