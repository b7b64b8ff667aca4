#include <gtest/gtest.h>

#include <cmath>

#include <sstream>

#include "ccmpc/bench.hpp"
#include "ccmpc/errors.hpp"
#include "support/oracles.hpp"

namespace ccmpc {
namespace {

std::vector<std::string> Lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

ExperimentSpec PathSpec() {
  ExperimentSpec spec;
  spec.algorithm = Algorithm::kLocal;
  GenSpec g;
  g.family = Family::kPath;
  g.n = 5;
  spec.gen = g;
  spec.seeds = {1};
  spec.config.finalize_threshold = 0;
  spec.config.priority_source = [](std::uint32_t, std::size_t n) {
    return PriorityMap::Identity(n);
  };
  return spec;
}

TEST(Experiment, FivePathRowsAndSummary) {
  ExperimentOutcome o = run_experiment(PathSpec());
  std::ostringstream csv;
  write_stats_csv(csv, o);
  auto lines = Lines(csv.str());
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], kStatsCsvHeader);
  EXPECT_EQ(lines[1].rfind("local,5,4,1,0,5,4,", 0), 0u) << lines[1];
  EXPECT_EQ(lines[2].rfind("local,5,4,1,1,3,2,", 0), 0u) << lines[2];
  EXPECT_EQ(lines[3].rfind("local,5,4,median,2,", 0), 0u) << lines[3];
  EXPECT_TRUE(o.all_verified());
}

TEST(Experiment, IdenticalSpecGivesIdenticalCsv) {
  ExperimentSpec spec = PathSpec();
  spec.config.priority_source = nullptr;
  spec.gen->family = Family::kGnp;
  spec.gen->n = 3000;
  spec.gen->p = 0.002;
  spec.seeds = {5, 1, 3};
  spec.vary_graph_seed = true;
  std::ostringstream a, b;
  write_stats_csv(a, run_experiment(spec));
  write_stats_csv(b, run_experiment(spec));
  EXPECT_EQ(a.str(), b.str());
  // Rows are ordered by seed regardless of the spec's seed order.
  auto lines = Lines(a.str());
  EXPECT_EQ(lines[1].find(",1,0,"), lines[1].find(",1,"));
}

TEST(Experiment, MedianOverSeeds) {
  EXPECT_EQ(median_of(std::vector<int>{5, 1, 3}), 3);
  EXPECT_EQ(median_of(std::vector<int>{4, 1, 3, 2, 9}), 3);
}

TEST(Experiment, AbortIsRecordedAsFailedRow) {
  ExperimentSpec spec = PathSpec();
  spec.gen->n = 500;
  spec.config.priority_source = nullptr;
  spec.config.max_phases = 1;
  ExperimentOutcome o = run_experiment(spec);
  EXPECT_TRUE(o.any_aborted());
  std::ostringstream csv;
  write_stats_csv(csv, o);
  EXPECT_NE(csv.str().find(",aborted,"), std::string::npos);
}

TEST(Verify, CorrectAndCorrupted) {
  Graph g = testing::naive_gnp(300, 1.5 / 300, 2);
  RunResult r = run_local_contraction(g, testing::no_finalize(2));
  EXPECT_TRUE(verify(r, g).ok);
  // Split every component by relabeling all vertices as singletons.
  ComponentAssignment bad = r.assignment;
  for (VertexId v = 0; v < bad.size(); ++v) bad.rep[v] = v;
  VerifyReport rep = verify(bad, g);
  EXPECT_FALSE(rep.ok);
  EXPECT_GT(rep.mismatched_vertices, 0u);
  EXPECT_LE(rep.witnesses.size(), 10u);
  EXPECT_FALSE(rep.witnesses.empty());
}

TEST(Verify, ExhaustiveSmallGraphsAllPass) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << testing::pair_count(n)); ++mask) {
      Graph g = testing::graph_from_mask(n, mask);
      RunResult r = run_algorithm(Algorithm::kLocal, g, testing::no_finalize(mask));
      ASSERT_TRUE(verify(r, g).ok);
    }
  }
}

TEST(Verify, TsvMapWithMissingVertex) {
  std::istringstream in("1 2\n3 4\n");
  LoadedGraph lg = load_edge_list(in);
  std::unordered_map<ExternalId, ExternalId> m{{1, 1}, {2, 1}, {3, 3}, {4, 3}};
  EXPECT_TRUE(verify(m, lg.graph, lg.ids).ok);
  m.erase(4);
  EXPECT_FALSE(verify(m, lg.graph, lg.ids).ok);
  m[4] = 1;
  EXPECT_FALSE(verify(m, lg.graph, lg.ids).ok);
}

TEST(EdgeDecay, GeometricFixtureAndSinglePhase) {
  RunResult r;
  for (std::uint64_t m : {1000, 100, 10}) {
    PhaseLedgerEntry e;
    e.edges_in = m;
    r.phases.push_back(e);
  }
  EXPECT_EQ(edge_decay_report(r), (std::vector<double>{10.0, 10.0}));
  r.phases.resize(1);
  EXPECT_TRUE(edge_decay_report(r).empty());
}

TEST(SpecJson, ParsesListAndRejectsUnknownKeys) {
  auto specs = parse_experiment_specs(R"([
    {"algorithm": "tree-dht", "gen": {"family": "gnp", "n": 100, "p_ln_factor": 3},
     "seeds": [1, 2, 3], "finalize_threshold": 0, "strict_space": true,
     "machines": 4},
    {"algorithm": "local", "input": "x.txt"}
  ])");
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(specs[0].algorithm, Algorithm::kTreeDht);
  EXPECT_NEAR(specs[0].gen->p, 3 * std::log(100.0) / 100, 1e-12);
  EXPECT_EQ(specs[0].machines, 4u);
  EXPECT_EQ(specs[1].input_path, "x.txt");
  EXPECT_THROW(parse_experiment_specs(R"({"algorithm": "local", "gen": {"family": "path"}, "sedes": [1]})"),
               ConfigError);
  EXPECT_THROW(parse_experiment_specs(R"({"algorithm": "local"})"), ConfigError);
  EXPECT_THROW(parse_experiment_specs("not json"), ConfigError);
  EXPECT_THROW(parse_experiment_specs(R"({"algorithm": "local", "gen": {"family": "path"}, "seeds": []})"),
               ConfigError);
}

}  // namespace
}  // namespace ccmpc
