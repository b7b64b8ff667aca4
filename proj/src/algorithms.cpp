#include "ccmpc/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <string>

#include "ccmpc/union_find.hpp"

namespace ccmpc {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kLocal: return "local";
    case Algorithm::kLocalMergeToLarge: return "local+mtl";
    case Algorithm::kTreePointerJumping: return "tree-pj";
    case Algorithm::kTreeDht: return "tree-dht";
    case Algorithm::kHashMin: return "hashmin";
    case Algorithm::kHashToMin: return "hash2min";
    case Algorithm::kCracker: return "cracker";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (algorithm_name(a) == name) return a;
  }
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

void AlgoConfig::validate() const {
  if (alpha0 && *alpha0 < 2) throw ConfigError("alpha0 must be at least 2");
  if (!(alpha_growth >= 1.0)) throw ConfigError("alpha_growth must be >= 1");
  if (max_phases && *max_phases < 1) throw ConfigError("max_phases must be >= 1");
  cost.validate();
}

std::uint64_t initial_alpha(std::size_t n) {
  if (n < 2) return 2;
  const double a = std::ceil(4.0 * std::log(static_cast<double>(n)));
  return std::max<std::uint64_t>(2, static_cast<std::uint64_t>(a));
}

std::uint64_t mtl_threshold(std::uint64_t alpha) {
  return std::max<std::uint64_t>(2, (alpha + 3) / 4);
}

std::uint64_t next_alpha(std::uint64_t alpha, double growth,
                         std::size_t next_nodes) {
  const double grown = std::pow(static_cast<double>(alpha), growth);
  const double guard = std::ceil(std::cbrt(static_cast<double>(next_nodes)));
  const double a = std::min(grown, guard);
  return std::max<std::uint64_t>(2, static_cast<std::uint64_t>(a));
}

namespace {

std::uint32_t DefaultMaxPhases(std::size_t n) {
  const double lg = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
  return static_cast<std::uint32_t>(4.0 * std::ceil(lg)) + 16;
}

// Closed-neighborhood minimum of `value` under rho.
std::vector<VertexId> NeighborhoodMin(const Graph& g, const PriorityMap& rho,
                                      const std::vector<VertexId>& value) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    VertexId best = value[v];
    for (VertexId u : g.neighbors(static_cast<VertexId>(v))) {
      best = rho.min(best, value[u]);
    }
    out[v] = best;
  }
  return out;
}

// Every vertex sends one record to each neighbor, keyed by the receiver.
void RouteNeighborExchange(Pass& pass, const Graph& g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    pass.route(v, g.degree(static_cast<VertexId>(v)));
  }
}

void RouteVertexTable(Pass& pass, std::size_t n) {
  for (std::size_t v = 0; v < n; ++v) pass.route(v, 1);
}

// Two contraction rounds: each canonical edge travels to its second endpoint
// to pick up that label, then surviving inter-cluster edges are shuffled by
// their new source for deduplication.
void ChargeContraction(RoundLedger& ledger, const CostModel& model,
                       const Graph& g, const std::vector<VertexId>& mapping) {
  Pass relabel(model, "contract.relabel");
  Pass dedup(model, "contract.dedup");
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(static_cast<VertexId>(v));
    std::uint64_t lower = 0;
    for (VertexId u : nb) {
      if (u < v) {
        ++lower;
        const VertexId a = mapping[u], b = mapping[v];
        if (a != b) dedup.route(std::min(a, b), 1);
      }
    }
    relabel.route(v, lower);
  }
  ledger.charge(relabel);
  for (std::uint32_t i = 2; i < model.rounds_per_contraction; ++i) {
    ledger.charge(Pass(model, "contract.extra"));
  }
  ledger.charge(dedup);
}

struct Totals {
  LedgerTotals t;
  explicit Totals(const RoundLedger& l) : t(l.totals()) {}
};

void FillCost(PhaseLedgerEntry& e, const RoundLedger& ledger,
              const Totals& before) {
  const LedgerTotals& now = ledger.totals();
  e.rounds_used = now.rounds - before.t.rounds;
  e.messages_sent = now.records_sent - before.t.records_sent;
  e.dht_puts = now.dht_puts - before.t.dht_puts;
  e.dht_gets = now.dht_gets - before.t.dht_gets;
}

// State shared by the contraction algorithms (LocalContraction, MergeToLarge,
// TreeContraction, Cracker).
struct ContractionRun {
  const AlgoConfig& cfg;
  RunResult result;
  PhaseChain chain;
  Graph current;
  std::vector<std::uint64_t> weights;  // original vertices per current node

  ContractionRun(const Graph& g, const AlgoConfig& c, Algorithm a)
      : cfg(c), chain(g.num_vertices()) {
      cfg.validate();
      result.algorithm = a;
      result.ledger = RoundLedger(
          cfg.cost.strict,
          cfg.cost.strict
              ? cfg.cost.resolved_budget(g.num_vertices(), g.num_edges())
              : 0,
          cfg.cost.machines);
      weights.assign(g.num_vertices(), 1);
      current = AdoptPruned(g, nullptr);
  }

  PriorityMap Priorities(std::uint32_t phase) const {
    const std::size_t n = current.num_vertices();
    if (cfg.priority_source) {
      PriorityMap p = cfg.priority_source(phase, n);
      if (p.size() != n) {
        throw ConfigError("priority source returned " +
                          std::to_string(p.size()) + " entries for " +
                          std::to_string(n) + " nodes");
      }
      return p;
    }
    return PriorityMap::Sample(cfg.global_seed,
                               cfg.resample_priorities ? phase : 0, n);
  }

  // Appends a contraction step and moves to its output.
  void Push(ContractionOutcome o) {
    chain.push(std::move(o.mapping), o.contracted.num_vertices());
    weights = std::move(o.cluster_weight);
    current = std::move(o.contracted);
  }

  // Drops isolated nodes of g as finalized roots and returns the survivor.
  Graph AdoptPruned(const Graph& g, PhaseLedgerEntry* entry) {
    PruneResult p = prune_isolated(g);
    for (VertexId v : p.finalized) chain.prune(v);
    std::vector<std::uint64_t> w(p.graph.num_vertices());
    for (std::size_t v = 0; v < p.mapping.size(); ++v) {
      if (p.mapping[v] != kNoVertex) w[p.mapping[v]] = weights[v];
    }
    weights = std::move(w);
    if (entry) entry->finalized_nodes = p.finalized.size();
    chain.push(std::move(p.mapping), p.graph.num_vertices());
    return std::move(p.graph);
  }

  // Runs phases until no edges remain or the finalization threshold is hit.
  template <typename PhaseFn>
  RunResult Run(PhaseFn&& phase_fn) {
    const std::uint32_t max_phases =
        cfg.max_phases.value_or(DefaultMaxPhases(chain.level_sizes.front()));
    std::uint32_t phase = 0;
    while (current.num_edges() > 0) {
      const Totals before(result.ledger);
      PhaseLedgerEntry e;
      e.phase_index = phase;
      e.nodes_in = current.num_vertices();
      e.edges_in = current.num_edges();

      if (cfg.finalize_threshold > 0 &&
          current.num_edges() <= cfg.finalize_threshold) {
        Finalize(e, before);
        break;
      }
      if (phase >= max_phases) {
        result.converged = false;
        throw AbortError(std::string(algorithm_name(result.algorithm)) +
                             ": no convergence after " +
                             std::to_string(max_phases) + " phases",
                         std::move(result));
      }
      phase_fn(phase, e);
      current = AdoptPruned(current, &e);
      e.nodes_out = current.num_vertices();
      e.edges_out = current.num_edges();
      FillCost(e, result.ledger, before);
      result.phases.push_back(e);
      ++phase;
    }
    result.assignment = compose_mappings(chain);
    result.converged = true;
    return std::move(result);
  }

  void Finalize(PhaseLedgerEntry& e, const Totals& before) {
    e.kind = PhaseKind::kFinalize;
    ComponentAssignment a =
        finalize_small_graph(current, cfg.finalize_threshold);
    Pass pass(cfg.cost, "finalize");
    // The whole edge list goes to a single machine.
    pass.route(0, current.num_edges());
    result.ledger.charge(pass);
    std::vector<VertexId> root_index(current.num_vertices(), kNoVertex);
    std::vector<VertexId> step(current.num_vertices());
    VertexId roots = 0;
    for (std::size_t v = 0; v < step.size(); ++v) {
      if (a.rep[v] == v) root_index[v] = roots++;
    }
    for (std::size_t v = 0; v < step.size(); ++v) step[v] = root_index[a.rep[v]];
    chain.push(std::move(step), roots);
    e.nodes_out = 0;
    e.edges_out = 0;
    FillCost(e, result.ledger, before);
    result.phases.push_back(e);
    current = Graph();
  }
};

LabelMap CrackerLabels(const Graph& rewired, const PriorityMap& rho) {
  LabelMap l = LabelMap::Identity(rewired.num_vertices());
  l.label = NeighborhoodMin(rewired, rho, l.label);
  return l;
}

}  // namespace

LabelMap local_contraction_labels(const Graph& g, const PriorityMap& rho) {
  LabelMap l = LabelMap::Identity(g.num_vertices());
  const std::vector<VertexId> first = NeighborhoodMin(g, rho, l.label);
  l.label = NeighborhoodMin(g, rho, first);
  return l;
}

LabelMap merge_to_large_labels(const ContractionOutcome& o,
                               const PriorityMap& rho_prev,
                               std::uint64_t alpha) {
  if (alpha < 2) throw ConfigError("MergeToLarge alpha must be at least 2");
  const Graph& h = o.contracted;
  const std::size_t n = h.num_vertices();
  if (o.mapping.size() != rho_prev.size()) {
    throw std::invalid_argument("previous-phase priorities do not match mapping");
  }

  std::vector<bool> large(n, false);
  std::size_t any_large = 0;
  for (std::size_t x = 0; x < n; ++x) {
    large[x] = o.cluster_weight[x] >= alpha;
    any_large += large[x];
  }
  LabelMap out = LabelMap::Identity(n);
  if (any_large == 0) return out;

  // k-th largest member hash via bounded min-heaps, k = min(alpha, size).
  using MinHeap = std::priority_queue<std::uint64_t, std::vector<std::uint64_t>,
                                      std::greater<>>;
  std::vector<MinHeap> top(n);
  for (std::size_t v = 0; v < o.mapping.size(); ++v) {
    const VertexId x = o.mapping[v];
    if (!large[x]) continue;
    MinHeap& heap = top[x];
    heap.push(rho_prev.hash(static_cast<VertexId>(v)));
    if (heap.size() > alpha) heap.pop();
  }
  std::vector<std::uint64_t> priority(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (large[x]) priority[x] = top[x].top();
  }
  top.clear();

  // Higher priority wins; ties go to the smaller id.
  auto better = [&](VertexId a, VertexId b) {
    if (b == kNoVertex) return a != kNoVertex;
    if (a == kNoVertex) return false;
    return priority[a] > priority[b] || (priority[a] == priority[b] && a < b);
  };
  auto closed_best = [&](const std::vector<VertexId>& value) {
    std::vector<VertexId> res(n);
    for (std::size_t v = 0; v < n; ++v) {
      VertexId best = value[v];
      for (VertexId u : h.neighbors(static_cast<VertexId>(v))) {
        if (better(value[u], best)) best = value[u];
      }
      res[v] = best;
    }
    return res;
  };
  std::vector<VertexId> seed(n, kNoVertex);
  for (std::size_t x = 0; x < n; ++x) {
    if (large[x]) seed[x] = static_cast<VertexId>(x);
  }
  const std::vector<VertexId> two_hop = closed_best(closed_best(seed));
  for (std::size_t v = 0; v < n; ++v) {
    if (two_hop[v] != kNoVertex) out.label[v] = two_hop[v];
  }
  return out;
}

FunctionalGraph tree_functional_graph(const Graph& g, const PriorityMap& rho) {
  FunctionalGraph fg;
  fg.f.assign(g.num_vertices(), kNoVertex);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(static_cast<VertexId>(v));
    if (nb.empty()) continue;
    VertexId best = nb[0];
    for (VertexId u : nb.subspan(1)) best = rho.min(best, u);
    fg.f[v] = best;
  }
  return fg;
}

namespace {

LabelMap PairLabels(const FunctionalGraph& f, const PriorityMap& rho,
                    const std::vector<VertexId>& on_cycle) {
  LabelMap l = LabelMap::Identity(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f.f[v] == kNoVertex) continue;
    const VertexId a = on_cycle[v];
    l.label[v] = rho.min(a, f.f[a]);
  }
  return l;
}

}  // namespace

PointerJumpingResult functional_wcc_pointer_jumping(const FunctionalGraph& f,
                                                    const PriorityMap& rho) {
  const std::size_t n = f.size();
  std::vector<VertexId> g(n);
  for (std::size_t v = 0; v < n; ++v) {
    g[v] = f.f[v] == kNoVertex ? static_cast<VertexId>(v) : f.f[v];
  }
  PointerJumpingResult out;
  std::vector<VertexId> next(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) next[v] = g[g[v]];
    ++out.squarings;
    if (next == g) break;
    std::swap(g, next);
    if (out.squarings > 64) {
      throw ConsistencyError("pointer jumping did not stabilize");
    }
  }
  out.labels = PairLabels(f, rho, g);
  return out;
}

DhtChaseResult functional_wcc_dht(const FunctionalGraph& f,
                                  const PriorityMap& rho, DhtHandle& dht) {
  const std::size_t n = f.size();
  dht.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (f.f[v] != kNoVertex) dht.put(v, f.f[v]);
  }
  dht.advance_round();

  const std::uint64_t gets_before = dht.total_gets();
  DhtChaseResult out;
  out.depth.assign(n, 0);
  std::vector<VertexId> on_cycle(n, kNoVertex);
  for (std::size_t v = 0; v < n; ++v) {
    if (f.f[v] == kNoVertex) continue;
    // x0 = v, x1 = f(v) is local; each later step is one get.
    VertexId x0 = static_cast<VertexId>(v), x1 = f.f[v];
    std::uint32_t i = 0;
    while (true) {
      auto x2 = dht.get(x1);
      if (!x2) throw ConsistencyError("dangling pointer in functional graph");
      if (*x2 == x0) break;
      x0 = x1;
      x1 = static_cast<VertexId>(*x2);
      if (++i > n) {
        throw ConsistencyError("trajectory of " + std::to_string(v) +
                               " did not enter a 2-cycle within n steps");
      }
    }
    out.depth[v] = i;
    out.max_depth = std::max<std::uint64_t>(out.max_depth, i);
    on_cycle[v] = x0;
  }
  out.gets = dht.total_gets() - gets_before;
  dht.advance_round();
  out.labels = PairLabels(f, rho, on_cycle);
  return out;
}

ComponentAssignment finalize_small_graph(const Graph& g,
                                         std::uint64_t threshold) {
  if (g.num_edges() > threshold) {
    throw ConfigError("finalization refused: " + std::to_string(g.num_edges()) +
                      " edges exceed threshold " + std::to_string(threshold));
  }
  return union_find_components(g);
}

RunResult run_local_contraction(const Graph& g, const AlgoConfig& cfg) {
  ContractionRun run(g, cfg,
                     cfg.merge_to_large_enabled ? Algorithm::kLocalMergeToLarge
                                                : Algorithm::kLocal);
  std::uint64_t alpha = cfg.alpha0.value_or(initial_alpha(g.num_vertices()));
  const CostModel& cost = cfg.cost;
  RoundLedger& ledger = run.result.ledger;

  return run.Run([&](std::uint32_t phase, PhaseLedgerEntry& e) {
    const PriorityMap rho = run.Priorities(phase);
    LabelMap labels = local_contraction_labels(run.current, rho);
    {
      // Round 1: each vertex computes its closed-neighborhood minimum from
      // the shared hash and sends it to every neighbor.
      Pass exchange(cost, "lc.label.exchange");
      RouteNeighborExchange(exchange, run.current);
      ledger.charge(exchange);
      // Round 2: label table, keyed by vertex, for the contraction join.
      Pass table(cost, "lc.label.table");
      RouteVertexTable(table, run.current.num_vertices());
      ledger.charge(table);
      for (std::uint32_t i = 2; i < cost.rounds_per_lc_label; ++i) {
        ledger.charge(Pass(cost, "lc.label.extra"));
      }
    }
    ContractionOutcome o = contract_by_labels(run.current, labels, run.weights);
    ChargeContraction(ledger, cost, run.current, o.mapping);
    if (!cfg.merge_to_large_enabled) {
      run.Push(std::move(o));
      return;
    }

    // MergeToLarge on the freshly contracted graph, using this phase's hashes.
    const std::uint64_t threshold = mtl_threshold(alpha);
    e.mtl_threshold = threshold;
    for (std::uint64_t w : o.cluster_weight) e.large_nodes += (w >= threshold);
    LabelMap mtl = merge_to_large_labels(o, rho, threshold);
    const Graph& h = o.contracted;
    {
      // Each member forwards its hash to its cluster for the top-k summary.
      Pass detect(cost, "mtl.detect");
      for (VertexId x : o.mapping) detect.route(x, 1);
      ledger.charge(detect);
      for (std::uint32_t i = 1; i < cost.rounds_per_mtl_detect; ++i) {
        ledger.charge(Pass(cost, "mtl.detect.extra"));
      }
      Pass exchange(cost, "mtl.select.exchange");
      RouteNeighborExchange(exchange, h);
      ledger.charge(exchange);
      Pass table(cost, "mtl.select.table");
      RouteVertexTable(table, h.num_vertices());
      ledger.charge(table);
      for (std::uint32_t i = 2; i < cost.rounds_per_mtl_select; ++i) {
        ledger.charge(Pass(cost, "mtl.select.extra"));
      }
    }
    ContractionOutcome merged = contract_by_labels(h, mtl, o.cluster_weight);
    ChargeContraction(ledger, cost, h, merged.mapping);
    run.Push(std::move(o));
    run.Push(std::move(merged));
    std::size_t survivors = 0;
    for (std::size_t v = 0; v < run.current.num_vertices(); ++v) {
      survivors += run.current.degree(static_cast<VertexId>(v)) > 0;
    }
    alpha = next_alpha(alpha, cfg.alpha_growth, survivors);
  });
}

RunResult run_tree_contraction(const Graph& g, const AlgoConfig& cfg,
                               TreeVariant variant) {
  ContractionRun run(g, cfg,
                     variant == TreeVariant::kDht ? Algorithm::kTreeDht
                                                  : Algorithm::kTreePointerJumping);
  const CostModel& cost = cfg.cost;
  RoundLedger& ledger = run.result.ledger;

  return run.Run([&](std::uint32_t phase, PhaseLedgerEntry& e) {
    const PriorityMap rho = run.Priorities(phase);
    const std::size_t n = run.current.num_vertices();
    FunctionalGraph f = tree_functional_graph(run.current, rho);
    LabelMap labels;
    if (variant == TreeVariant::kPointerJumping) {
      // f is computed locally from the shared hash and written as a table.
      Pass table(cost, "tree.f.table");
      RouteVertexTable(table, n);
      ledger.charge(table);
      PointerJumpingResult pj = functional_wcc_pointer_jumping(f, rho);
      // Each squaring: a request to g(v) and a reply back to v.
      for (std::uint32_t i = 0; i < pj.squarings; ++i) {
        Pass jump(cost, "tree.pj.square");
        for (std::size_t v = 0; v < n; ++v) jump.route(v, 2);
        ledger.charge(jump);
      }
      e.pointer_jumping_steps = pj.squarings;
      labels = std::move(pj.labels);
    } else {
      DhtHandle dht;
      DhtChaseResult chase = functional_wcc_dht(f, rho, dht);
      Pass put(cost, "tree.dht.put");
      put.add_dht(dht.total_puts(), 0);
      for (std::size_t v = 0; v < n; ++v) put.route(v, 1);
      ledger.charge(put);
      Pass get(cost, "tree.dht.chase");
      get.add_dht(0, chase.gets);
      ledger.charge(get);
      e.max_chase_depth = chase.max_depth;
      labels = std::move(chase.labels);
    }
    ContractionOutcome o = contract_by_labels(run.current, labels, run.weights);
    ChargeContraction(ledger, cost, run.current, o.mapping);
    run.Push(std::move(o));
  });
}

RunResult run_cracker(const Graph& g, const AlgoConfig& cfg) {
  ContractionRun run(g, cfg, Algorithm::kCracker);
  const CostModel& cost = cfg.cost;
  RoundLedger& ledger = run.result.ledger;

  return run.Run([&](std::uint32_t phase, PhaseLedgerEntry&) {
    const PriorityMap rho = run.Priorities(phase);
    const Graph& cur = run.current;
    const std::size_t n = cur.num_vertices();
    const std::vector<VertexId> local_min =
        NeighborhoodMin(cur, rho, LabelMap::Identity(n).label);

    // Rewire: v links its neighborhood minimum to every member of N(v).
    Pass rewire(cost, "cracker.rewire");
    std::vector<std::pair<VertexId, VertexId>> rewired_edges;
    rewired_edges.reserve(2 * cur.num_edges());
    for (std::size_t v = 0; v < n; ++v) {
      const VertexId m = local_min[v];
      auto link = [&](VertexId u) {
        if (u == m) return;
        rewired_edges.emplace_back(m, u);
        rewire.route(std::min(m, u), 1);
      };
      link(static_cast<VertexId>(v));
      for (VertexId u : cur.neighbors(static_cast<VertexId>(v))) link(u);
    }
    ledger.charge(rewire);
    Graph rewired = Graph::FromEdges(n, rewired_edges);
    rewired_edges.clear();
    rewired_edges.shrink_to_fit();

    LabelMap labels = CrackerLabels(rewired, rho);
    Pass table(cost, "cracker.label.table");
    RouteVertexTable(table, n);
    ledger.charge(table);

    ContractionOutcome o = contract_by_labels(rewired, labels, run.weights);
    ChargeContraction(ledger, cost, rewired, o.mapping);
    run.Push(std::move(o));
  });
}

namespace {

// Single step from level 0 to the distinct labels, all of which are roots.
ComponentAssignment AssignmentFromLabels(const std::vector<VertexId>& label) {
  const std::size_t n = label.size();
  PhaseChain chain(n);
  std::vector<VertexId> index(n, kNoVertex);
  VertexId k = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (index[label[v]] == kNoVertex) index[label[v]] = k++;
  }
  std::vector<VertexId> step(n);
  for (std::size_t v = 0; v < n; ++v) step[v] = index[label[v]];
  chain.push(std::move(step), k);
  return compose_mappings(chain);
}

RoundLedger MakeLedger(const AlgoConfig& cfg, const Graph& g) {
  return RoundLedger(cfg.cost.strict,
                     cfg.cost.strict
                         ? cfg.cost.resolved_budget(g.num_vertices(),
                                                    g.num_edges())
                         : 0,
                     cfg.cost.machines);
}

}  // namespace

RunResult run_hash_min(const Graph& g, const AlgoConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  RunResult result;
  result.algorithm = Algorithm::kHashMin;
  result.ledger = MakeLedger(cfg, g);
  const std::uint32_t max_phases =
      cfg.max_phases.value_or(static_cast<std::uint32_t>(
          std::min<std::size_t>(n + 1, 0xffffffffu)));

  // Labels start as the vertex's own id (dense order = external order).
  std::vector<VertexId> label = LabelMap::Identity(n).label;
  std::vector<VertexId> next = label;
  std::vector<VertexId> active(n);
  for (std::size_t v = 0; v < n; ++v) active[v] = static_cast<VertexId>(v);
  std::vector<char> queued(n, 0);
  std::vector<VertexId> changed;

  // Only vertices whose label changed last round have anything new to send.
  std::uint32_t round = 0;
  while (true) {
    const Totals before(result.ledger);
    Pass pass(cfg.cost, "hashmin.round");
    changed.clear();
    for (VertexId v : active) {
      for (VertexId u : g.neighbors(v)) {
        pass.route(u, 1);
        if (label[v] < next[u]) {
          if (!queued[u]) {
            queued[u] = 1;
            changed.push_back(u);
          }
          next[u] = label[v];
        }
      }
    }
    result.ledger.charge(pass);
    if (changed.empty()) break;  // fixpoint detection round
    if (round >= max_phases) {
      throw AbortError("hashmin: no convergence after " +
                           std::to_string(max_phases) + " rounds",
                       std::move(result));
    }
    for (VertexId u : changed) {
      label[u] = next[u];
      queued[u] = 0;
    }
    std::sort(changed.begin(), changed.end());
    active = changed;
    PhaseLedgerEntry e;
    e.phase_index = round;
    e.kind = PhaseKind::kPropagation;
    e.nodes_in = n;
    e.edges_in = g.num_edges();
    e.nodes_out = changed.size();
    FillCost(e, result.ledger, before);
    result.phases.push_back(e);
    ++round;
  }
  result.assignment = AssignmentFromLabels(label);
  result.converged = true;
  return result;
}

RunResult run_hash_to_min(const Graph& g, const AlgoConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  RunResult result;
  result.algorithm = Algorithm::kHashToMin;
  result.ledger = MakeLedger(cfg, g);
  const std::uint32_t max_phases = cfg.max_phases.value_or(DefaultMaxPhases(n));
  const std::uint64_t cap = cfg.hash_to_min_message_cap.value_or(
      64 * std::max<std::uint64_t>(g.num_edges(), n));

  // C(v) = N(v) with v included, kept sorted; min(C(v)) = C(v).front().
  std::vector<std::vector<VertexId>> cluster(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto nb = g.neighbors(static_cast<VertexId>(v));
    auto& c = cluster[v];
    c.reserve(nb.size() + 1);
    c.assign(nb.begin(), nb.end());
    c.insert(std::lower_bound(c.begin(), c.end(), static_cast<VertexId>(v)),
             static_cast<VertexId>(v));
  }

  std::vector<std::vector<VertexId>> incoming(n);
  std::uint32_t round = 0;
  while (true) {
    const Totals before(result.ledger);
    Pass pass(cfg.cost, "hash2min.round");
    for (std::size_t v = 0; v < n; ++v) {
      const auto& c = cluster[v];
      const VertexId m = c.front();
      pass.route(m, c.size());
      incoming[m].insert(incoming[m].end(), c.begin(), c.end());
      for (VertexId u : c) {
        pass.route(u, 1);
        incoming[u].push_back(m);
      }
    }
    if (pass.records() > cap) {
      result.ledger.charge(pass);
      throw AbortError("hash2min: round " + std::to_string(round) + " sends " +
                           std::to_string(pass.records()) +
                           " records, cap " + std::to_string(cap),
                       std::move(result));
    }
    result.ledger.charge(pass);
    bool changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      auto& in = incoming[v];
      std::sort(in.begin(), in.end());
      in.erase(std::unique(in.begin(), in.end()), in.end());
      if (in != cluster[v]) {
        changed = true;
        cluster[v].swap(in);
      }
      in.clear();
    }
    if (!changed) break;
    if (round >= max_phases) {
      throw AbortError("hash2min: no convergence after " +
                           std::to_string(max_phases) + " rounds",
                       std::move(result));
    }
    PhaseLedgerEntry e;
    e.phase_index = round;
    e.kind = PhaseKind::kPropagation;
    e.nodes_in = n;
    e.edges_in = g.num_edges();
    FillCost(e, result.ledger, before);
    result.phases.push_back(e);
    ++round;
  }
  std::vector<VertexId> label(n);
  for (std::size_t v = 0; v < n; ++v) label[v] = cluster[v].front();
  result.assignment = AssignmentFromLabels(label);
  result.converged = true;
  return result;
}

RunResult run_algorithm(Algorithm a, const Graph& g, AlgoConfig cfg) {
  switch (a) {
    case Algorithm::kLocal:
      cfg.merge_to_large_enabled = false;
      return run_local_contraction(g, cfg);
    case Algorithm::kLocalMergeToLarge:
      cfg.merge_to_large_enabled = true;
      return run_local_contraction(g, cfg);
    case Algorithm::kTreePointerJumping:
      return run_tree_contraction(g, cfg, TreeVariant::kPointerJumping);
    case Algorithm::kTreeDht:
      return run_tree_contraction(g, cfg, TreeVariant::kDht);
    case Algorithm::kHashMin: return run_hash_min(g, cfg);
    case Algorithm::kHashToMin: return run_hash_to_min(g, cfg);
    case Algorithm::kCracker: return run_cracker(g, cfg);
  }
  throw ConfigError("unknown algorithm");
}

}  // namespace ccmpc
