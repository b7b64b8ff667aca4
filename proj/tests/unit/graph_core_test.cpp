#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ccmpc/edge_list_io.hpp"
#include "ccmpc/errors.hpp"
#include "ccmpc/graph.hpp"
#include "ccmpc/union_find.hpp"
#include "support/oracles.hpp"

namespace ccmpc {
namespace {

using testing::EdgeList;

void ExpectNormalized(const Graph& g) {
  std::size_t total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    total += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      EXPECT_NE(nb[i], v);
      if (i > 0) EXPECT_LT(nb[i - 1], nb[i]);
      EXPECT_TRUE(g.has_edge(nb[i], v));
    }
  }
  EXPECT_EQ(total, 2 * g.num_edges());
}

TEST(Graph, NormalizesSelfLoopsAndDuplicates) {
  EdgeList e{{0, 0}, {0, 1}, {1, 0}, {0, 1}, {2, 1}};
  Graph g = Graph::FromEdges(3, e);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  ExpectNormalized(g);
  std::vector<EdgeRecord> expect{{0, 1}, {1, 2}};
  EXPECT_EQ(g.edge_list(), expect);
}

TEST(Graph, EmptyAndIsolated) {
  Graph empty;
  EXPECT_EQ(empty.num_vertices(), 0u);
  EXPECT_EQ(empty.num_edges(), 0u);
  Graph iso = Graph::FromEdges(4, EdgeList{});
  EXPECT_EQ(iso.num_vertices(), 4u);
  EXPECT_EQ(iso.degree(3), 0u);
  EXPECT_TRUE(iso.edge_list().empty());
}

TEST(Graph, RejectsOutOfRangeIds) {
  EdgeList e{{0, 3}};
  EXPECT_THROW(Graph::FromEdges(3, e), std::out_of_range);
}

TEST(Graph, FromCsrValidates) {
  // Path 0-1-2.
  Graph ok = Graph::FromCsr({0, 1, 3, 4}, {1, 0, 2, 1});
  EXPECT_EQ(ok.num_edges(), 2u);
  EXPECT_THROW(Graph::FromCsr({0, 1, 2}, {1, 1}), std::invalid_argument);  // asym
  EXPECT_THROW(Graph::FromCsr({0, 1, 2}, {0, 0}), std::invalid_argument);  // loop
  EXPECT_THROW(Graph::FromCsr({0, 2, 4}, {1, 1, 0, 0}),
               std::invalid_argument);  // duplicate
}

TEST(Graph, RandomNormalizationInvariants) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 60;
    EdgeList e;
    for (int k = 0; k < 200; ++k) {
      e.emplace_back(rng() % n, rng() % n);
    }
    Graph g = Graph::FromEdges(n, e);
    ExpectNormalized(g);
    for (auto [u, v] : e) {
      if (u != v) EXPECT_TRUE(g.has_edge(u, v));
    }
  }
}

TEST(EdgeListIo, LoadsMinimalPath) {
  std::istringstream in("1 2\n2 3\n");
  LoadedGraph lg = load_edge_list(in);
  EXPECT_EQ(lg.graph.num_vertices(), 3u);
  EXPECT_EQ(lg.graph.num_edges(), 2u);
  EXPECT_EQ(lg.ids.external, (std::vector<ExternalId>{1, 2, 3}));
  EXPECT_TRUE(lg.graph.has_edge(0, 1));
  EXPECT_TRUE(lg.graph.has_edge(1, 2));
}

TEST(EdgeListIo, DropsSelfLoopAndDuplicate) {
  std::istringstream in("7 7\n7 9\n9 7\n");
  LoadedGraph lg = load_edge_list(in);
  EXPECT_EQ(lg.graph.num_vertices(), 2u);
  EXPECT_EQ(lg.graph.num_edges(), 1u);
}

TEST(EdgeListIo, CommentsWhitespaceAndEmptyInput) {
  std::istringstream in("# header\n\n  10\t20  \n# x\n20   30\r\n");
  LoadedGraph lg = load_edge_list(in);
  EXPECT_EQ(lg.graph.num_vertices(), 3u);
  EXPECT_EQ(lg.graph.num_edges(), 2u);
  std::istringstream none("");
  LoadedGraph e = load_edge_list(none);
  EXPECT_EQ(e.graph.num_vertices(), 0u);
  EXPECT_EQ(e.graph.num_edges(), 0u);
}

TEST(EdgeListIo, MalformedLineReportsLineNumber) {
  for (const char* text : {"1 2\n3\n", "1 2\n3 x\n", "1 2\n3 4 5\n", "1 2\n-3 4\n"}) {
    std::istringstream in(text);
    try {
      load_edge_list(in);
      FAIL() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 2u) << text;
    }
  }
}

TEST(EdgeListIo, WriteThenLoadIsIdentity) {
  Graph g = testing::naive_gnp(40, 0.1, 3);
  // Isolated vertices are not representable; compare serialized forms.
  std::ostringstream out;
  IdTable ids;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) ids.external.push_back(100 + 3 * v);
  write_edge_list(out, g, ids);
  std::istringstream in(out.str());
  LoadedGraph lg = load_edge_list(in);
  std::ostringstream again;
  write_edge_list(again, lg.graph, lg.ids);
  EXPECT_EQ(out.str(), again.str());
}

TEST(EdgeListIo, AssignmentTsvSortedByExternalId) {
  std::istringstream in("5 3\n9 8\n");
  LoadedGraph lg = load_edge_list(in);
  ComponentAssignment a = union_find_components(lg.graph);
  std::ostringstream out;
  write_assignment_tsv(out, a, lg.ids);
  EXPECT_EQ(out.str(), "3\t3\n5\t3\n8\t8\n9\t8\n");
  std::istringstream back(out.str());
  auto m = read_assignment_tsv(back);
  EXPECT_EQ(m.at(5), 3u);
  EXPECT_EQ(m.at(9), 8u);
}

TEST(UnionFind, Examples) {
  // Path 1-2-3, dense 0-1-2.
  Graph path = Graph::FromEdges(3, EdgeList{{0, 1}, {1, 2}});
  EXPECT_EQ(union_find_components(path).rep, (std::vector<VertexId>{0, 0, 0}));
  Graph two = Graph::FromEdges(4, EdgeList{{0, 1}, {2, 3}});
  EXPECT_EQ(union_find_components(two).rep, (std::vector<VertexId>{0, 0, 2, 2}));
}

TEST(UnionFind, RangeError) {
  std::vector<EdgeRecord> e{{0, 5}};
  EXPECT_THROW(union_find_components(e, 3), std::out_of_range);
}

TEST(UnionFind, ExhaustiveSmallGraphsMatchBfs) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::uint32_t pairs = n >= 2 ? testing::pair_count(n) : 0;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      Graph g = testing::graph_from_mask(n, mask);
      ASSERT_EQ(union_find_components(g).rep, testing::bfs_components(g))
          << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(UnionFind, RandomGraphsMatchBfs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = testing::naive_gnp(500, 2.0 / 500, seed);
    ASSERT_EQ(union_find_components(g).rep, testing::bfs_components(g));
  }
}

TEST(Partition, Examples) {
  ComponentAssignment a{{0, 0}}, b{{1, 1}};
  EXPECT_TRUE(partition_equal(a, a));
  EXPECT_TRUE(partition_equal(a, b));
  ComponentAssignment c{{0, 0, 2}}, d{{0, 1, 2}};
  EXPECT_FALSE(partition_equal(c, d));
  EXPECT_FALSE(partition_equal(d, c));
  EXPECT_THROW(partition_equal(a, c), std::invalid_argument);
}

TEST(Partition, CanonicalAssignmentUsesMinimumId) {
  std::vector<int> labels{7, 3, 7, 3, 9};
  ComponentAssignment a = canonical_assignment<int>(labels);
  EXPECT_EQ(a.rep, (std::vector<VertexId>{0, 1, 0, 1, 4}));
  EXPECT_EQ(a.num_components(), 3u);
}

}  // namespace
}  // namespace ccmpc
