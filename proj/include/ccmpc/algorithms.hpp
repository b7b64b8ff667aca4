#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccmpc/contraction.hpp"
#include "ccmpc/errors.hpp"
#include "ccmpc/graph.hpp"
#include "ccmpc/mpc_sim.hpp"
#include "ccmpc/priority.hpp"

namespace ccmpc {

enum class Algorithm {
  kLocal,
  kLocalMergeToLarge,
  kTreePointerJumping,
  kTreeDht,
  kHashMin,
  kHashToMin,
  kCracker,
};

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kLocal,     Algorithm::kLocalMergeToLarge,
    Algorithm::kTreePointerJumping, Algorithm::kTreeDht,
    Algorithm::kHashMin,   Algorithm::kHashToMin,
    Algorithm::kCracker,
};

// CLI spelling: local, local+mtl, tree-pj, tree-dht, hashmin, hash2min, cracker.
std::string_view algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);  // throws ConfigError

struct AlgoConfig {
  std::uint64_t global_seed = 0;
  // Remaining graph is solved on one machine once its edge count is at most
  // this; 0 disables finalization.
  std::uint64_t finalize_threshold = 1'000'000;
  bool merge_to_large_enabled = false;
  // Initial alpha in original-vertex units; default max(2, ceil(4 ln n)).
  std::optional<std::uint64_t> alpha0;
  double alpha_growth = 2.0;
  // Default 4 log2(n) + 16 (n + 1 for Hash-Min, whose rounds track diameter).
  std::optional<std::uint32_t> max_phases;
  // Draw a fresh ordering every phase; false reuses phase 0's hash function.
  bool resample_priorities = true;
  // Hash-to-Min per-round record cap; default 64 * max(m, n).
  std::optional<std::uint64_t> hash_to_min_message_cap;
  CostModel cost;
  // Overrides sampling: returns the ordering for (phase, node count).
  std::function<PriorityMap(std::uint32_t, std::size_t)> priority_source;

  void validate() const;
};

enum class PhaseKind { kContraction, kFinalize, kPropagation };

struct PhaseLedgerEntry {
  std::uint32_t phase_index = 0;
  PhaseKind kind = PhaseKind::kContraction;
  std::uint64_t nodes_in = 0;
  std::uint64_t edges_in = 0;
  std::uint64_t rounds_used = 0;
  std::uint64_t messages_sent = 0;
  std::uint64_t dht_puts = 0;
  std::uint64_t dht_gets = 0;
  // Diagnostics.
  std::uint64_t nodes_out = 0;       // non-isolated nodes after the phase
  std::uint64_t edges_out = 0;
  std::uint64_t finalized_nodes = 0;  // isolated nodes pruned by the phase
  std::uint64_t max_chase_depth = 0;  // TreeContraction: max_v d(v)
  std::uint32_t pointer_jumping_steps = 0;
  std::uint64_t mtl_threshold = 0;
  std::uint64_t large_nodes = 0;
};

struct RunResult {
  Algorithm algorithm = Algorithm::kLocal;
  ComponentAssignment assignment;
  std::vector<PhaseLedgerEntry> phases;
  RoundLedger ledger;
  bool converged = false;

  std::size_t phase_count() const { return phases.size(); }
};

// Run stopped early (phase cap or message cap). partial() holds the ledger so
// far; its assignment is empty.
class AbortError : public Error {
 public:
  AbortError(const std::string& what, RunResult partial)
      : Error(what), partial_(std::move(partial)) {}
  const RunResult& partial() const { return partial_; }

 private:
  RunResult partial_;
};

// ---- per-phase building blocks ----

// l(v) = minimum-priority vertex of N(N(v)) with closed neighborhoods,
// computed as two rounds of neighborhood minima.
LabelMap local_contraction_labels(const Graph& g, const PriorityMap& rho);

// Large node: cluster_weight >= alpha. Its priority is the alpha-th largest
// previous-phase hash among its members (the smallest member hash when it has
// fewer than alpha members). Every node takes the highest-priority large node
// within distance 2 (itself included; ties to the smaller id), else itself.
LabelMap merge_to_large_labels(const ContractionOutcome& o,
                               const PriorityMap& rho_prev,
                               std::uint64_t alpha);

// f[v] = minimum-priority proper neighbor; kNoVertex for isolated vertices.
struct FunctionalGraph {
  std::vector<VertexId> f;
  std::size_t size() const { return f.size(); }
};

FunctionalGraph tree_functional_graph(const Graph& g, const PriorityMap& rho);

struct PointerJumpingResult {
  LabelMap labels;
  std::uint32_t squarings = 0;  // compositions until g_{i+1} == g_i
};

// Labels each vertex with the smaller-priority member of the 2-cycle its
// trajectory enters. Equal labels <=> same weakly connected component of H.
PointerJumpingResult functional_wcc_pointer_jumping(const FunctionalGraph& f,
                                                    const PriorityMap& rho);

struct DhtChaseResult {
  LabelMap labels;
  std::vector<std::uint32_t> depth;  // d(v); 0 for isolated vertices
  std::uint64_t max_depth = 0;
  std::uint64_t gets = 0;
};

// Loads f into `dht` (one round of puts), then chases every trajectory with
// gets until x_{i+2} == x_i. Throws ConsistencyError if a chase exceeds n
// steps.
DhtChaseResult functional_wcc_dht(const FunctionalGraph& f,
                                  const PriorityMap& rho, DhtHandle& dht);

// Union-find over the edge stream. Throws ConfigError when the graph has more
// than `threshold` edges.
ComponentAssignment finalize_small_graph(const Graph& g,
                                         std::uint64_t threshold);

// ---- full runs ----

RunResult run_local_contraction(const Graph& g, const AlgoConfig& cfg);
enum class TreeVariant { kPointerJumping, kDht };
RunResult run_tree_contraction(const Graph& g, const AlgoConfig& cfg,
                               TreeVariant variant);
RunResult run_hash_min(const Graph& g, const AlgoConfig& cfg);
RunResult run_hash_to_min(const Graph& g, const AlgoConfig& cfg);
RunResult run_cracker(const Graph& g, const AlgoConfig& cfg);

RunResult run_algorithm(Algorithm a, const Graph& g, AlgoConfig cfg);

// alpha schedule for LocalContraction + MergeToLarge.
std::uint64_t initial_alpha(std::size_t n);
std::uint64_t mtl_threshold(std::uint64_t alpha);
std::uint64_t next_alpha(std::uint64_t alpha, double growth,
                         std::size_t next_nodes);

}  // namespace ccmpc
