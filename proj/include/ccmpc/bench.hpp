#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccmpc/algorithms.hpp"
#include "ccmpc/edge_list_io.hpp"
#include "ccmpc/generators.hpp"

namespace ccmpc {

struct ExperimentSpec {
  Algorithm algorithm = Algorithm::kLocal;
  AlgoConfig config;
  // Exactly one graph source.
  std::optional<GenSpec> gen;
  std::optional<std::string> input_path;
  // When set, each run samples its graph with the run seed instead of
  // gen->seed.
  bool vary_graph_seed = false;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::string stats_csv;                  // empty: not written
  std::optional<std::string> assignment_tsv;
  bool strict_space = false;
  std::size_t machines = 1;

  void validate() const;  // ConfigError
};

// Accepts one object or an array of objects.
std::vector<ExperimentSpec> parse_experiment_specs(const std::string& json);
std::vector<ExperimentSpec> load_experiment_specs(const std::string& path);
GenSpec parse_gen_spec(const std::string& json);

struct VerifyReport {
  bool ok = false;
  std::size_t mismatched_vertices = 0;
  std::vector<VertexId> witnesses;  // at most 10
  std::string message;
};

VerifyReport verify(const ComponentAssignment& a, const Graph& g);
VerifyReport verify(const RunResult& run, const Graph& g);
// Checks a TSV-derived map (external -> representative) against g.
VerifyReport verify(const std::unordered_map<ExternalId, ExternalId>& labels,
                    const Graph& g, const IdTable& ids);

// edges_in of phase i divided by edges_in of phase i+1.
std::vector<double> edge_decay_report(const RunResult& run);

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::uint64_t n0 = 0, m0 = 0;
  RunResult result;  // the partial ledger when aborted
  bool aborted = false;
  std::string error;
  VerifyReport verification;
};

struct ExperimentOutcome {
  ExperimentSpec spec;
  std::vector<SeedOutcome> runs;  // ascending seed order
  bool all_verified() const;
  bool any_aborted() const;
};

// Runs and verifies every seed; aborts and budget violations are captured.
ExperimentOutcome run_experiment(const ExperimentSpec& spec);

// Loads or generates the graph for one seed.
LoadedGraph materialize_graph(const ExperimentSpec& spec, std::uint64_t seed);

// Header, one row per (seed, phase), a failed row per aborted seed, then the
// summary row (seed "median") with the median phase count over seeds.
void write_stats_csv(std::ostream& out, const ExperimentOutcome& outcome);

extern const char* const kStatsCsvHeader;

template <typename T>
T median_of(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  if (k == 0) return T{};
  if (k % 2 == 1) return values[k / 2];
  return (values[k / 2 - 1] + values[k / 2]) / 2;
}

}  // namespace ccmpc
