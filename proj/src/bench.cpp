#include "ccmpc/bench.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "ccmpc/union_find.hpp"

namespace ccmpc {

using nlohmann::json;

const char* const kStatsCsvHeader =
    "algorithm,n0,m0,seed,phase,nodes_in,edges_in,rounds,messages,dht_puts,"
    "dht_gets";

namespace {

void CheckKeys(const json& j, std::initializer_list<std::string_view> allowed,
               std::string_view where) {
  if (!j.is_object()) {
    throw ConfigError(std::string(where) + ": expected a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
    }
  }
}

template <typename T>
T Get(const json& j, const char* key, std::string_view where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string(where) + "." + key + ": " + e.what());
  }
}

GenSpec GenFromJson(const json& j) {
  CheckKeys(j,
            {"family", "n", "p", "p_ln_factor", "seed", "legs", "permute",
             "extra_edges", "parts"},
            "gen");
  GenSpec s;
  s.family = parse_family(Get<std::string>(j, "family", "gen"));
  if (j.contains("n")) s.n = Get<std::size_t>(j, "n", "gen");
  if (j.contains("p") && j.contains("p_ln_factor")) {
    throw ConfigError("gen: give either p or p_ln_factor");
  }
  if (j.contains("p")) s.p = Get<double>(j, "p", "gen");
  if (j.contains("p_ln_factor")) {
    // p = c ln(n) / n
    const double c = Get<double>(j, "p_ln_factor", "gen");
    s.p = s.n > 1 ? std::min(1.0, c * std::log(double(s.n)) / double(s.n)) : 0.0;
  }
  if (j.contains("seed")) s.seed = Get<std::uint64_t>(j, "seed", "gen");
  if (j.contains("legs")) s.legs = Get<std::size_t>(j, "legs", "gen");
  if (j.contains("permute")) s.permute = Get<bool>(j, "permute", "gen");
  if (j.contains("extra_edges")) {
    for (const auto& e : j.at("extra_edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw ConfigError("gen.extra_edges: expected [u, v] pairs");
      }
      s.extra_edges.push_back(
          {e[0].get<VertexId>(), e[1].get<VertexId>()});
    }
  }
  if (j.contains("parts")) {
    for (const auto& part : j.at("parts")) s.parts.push_back(GenFromJson(part));
  }
  s.validate();
  return s;
}

ExperimentSpec SpecFromJson(const json& j) {
  const char* where = "experiment";
  CheckKeys(j,
            {"algorithm", "gen", "input", "seeds", "vary_graph_seed",
             "stats_csv", "assignment_out", "strict_space", "machines",
             "finalize_threshold", "max_phases", "merge_to_large", "alpha0",
             "alpha_growth", "resample_priorities", "hash_to_min_message_cap",
             "budget_factor", "receive_budget"},
            where);
  ExperimentSpec s;
  s.algorithm = parse_algorithm(Get<std::string>(j, "algorithm", where));
  if (j.contains("gen")) s.gen = GenFromJson(j.at("gen"));
  if (j.contains("input")) s.input_path = Get<std::string>(j, "input", where);
  if (j.contains("seeds")) {
    s.seeds = Get<std::vector<std::uint64_t>>(j, "seeds", where);
  }
  if (j.contains("vary_graph_seed")) {
    s.vary_graph_seed = Get<bool>(j, "vary_graph_seed", where);
  }
  if (j.contains("stats_csv")) s.stats_csv = Get<std::string>(j, "stats_csv", where);
  if (j.contains("assignment_out")) {
    s.assignment_tsv = Get<std::string>(j, "assignment_out", where);
  }
  if (j.contains("strict_space")) s.strict_space = Get<bool>(j, "strict_space", where);
  if (j.contains("machines")) s.machines = Get<std::size_t>(j, "machines", where);
  AlgoConfig& c = s.config;
  if (j.contains("finalize_threshold")) {
    c.finalize_threshold = Get<std::uint64_t>(j, "finalize_threshold", where);
  }
  if (j.contains("max_phases")) {
    c.max_phases = Get<std::uint32_t>(j, "max_phases", where);
  }
  if (j.contains("merge_to_large")) {
    c.merge_to_large_enabled = Get<bool>(j, "merge_to_large", where);
  }
  if (j.contains("alpha0")) c.alpha0 = Get<std::uint64_t>(j, "alpha0", where);
  if (j.contains("alpha_growth")) {
    c.alpha_growth = Get<double>(j, "alpha_growth", where);
  }
  if (j.contains("resample_priorities")) {
    c.resample_priorities = Get<bool>(j, "resample_priorities", where);
  }
  if (j.contains("hash_to_min_message_cap")) {
    c.hash_to_min_message_cap =
        Get<std::uint64_t>(j, "hash_to_min_message_cap", where);
  }
  if (j.contains("budget_factor")) {
    c.cost.budget_factor = Get<double>(j, "budget_factor", where);
  }
  if (j.contains("receive_budget")) {
    c.cost.per_machine_receive_budget =
        Get<std::uint64_t>(j, "receive_budget", where);
  }
  s.validate();
  return s;
}

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

// Vertices whose label relation disagrees with the oracle partition.
VerifyReport Compare(const std::vector<std::uint64_t>& label,
                     const std::vector<bool>& missing,
                     const ComponentAssignment& oracle) {
  VerifyReport r;
  std::unordered_map<std::uint64_t, VertexId> label_owner;  // label -> oracle rep
  std::unordered_map<VertexId, std::uint64_t> class_label;  // oracle rep -> label
  for (std::size_t v = 0; v < label.size(); ++v) {
    bool bad = !missing.empty() && missing[v];
    if (!bad) {
      const VertexId rep = oracle.rep[v];
      auto [it, fresh] = class_label.try_emplace(rep, label[v]);
      auto [jt, fresh2] = label_owner.try_emplace(label[v], rep);
      bad = it->second != label[v] || jt->second != rep;
    }
    if (bad) {
      ++r.mismatched_vertices;
      if (r.witnesses.size() < 10) r.witnesses.push_back(static_cast<VertexId>(v));
    }
  }
  r.ok = r.mismatched_vertices == 0;
  r.message = r.ok ? "partition matches union-find"
                   : std::to_string(r.mismatched_vertices) +
                         " vertices disagree with union-find";
  return r;
}

std::string AssignmentPath(const ExperimentSpec& spec, std::uint64_t seed) {
  if (spec.seeds.size() == 1) return *spec.assignment_tsv;
  return *spec.assignment_tsv + "." + std::to_string(seed);
}

}  // namespace

void ExperimentSpec::validate() const {
  if (gen.has_value() == input_path.has_value()) {
    throw ConfigError("experiment needs exactly one of gen or input");
  }
  if (seeds.empty()) throw ConfigError("experiment needs at least one seed");
  if (machines < 1) throw ConfigError("machines must be at least 1");
  config.validate();
}

GenSpec parse_gen_spec(const std::string& text) {
  return GenFromJson(ParseJson(text));
}

std::vector<ExperimentSpec> parse_experiment_specs(const std::string& text) {
  const json j = ParseJson(text);
  std::vector<ExperimentSpec> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(SpecFromJson(item));
  } else {
    out.push_back(SpecFromJson(j));
  }
  return out;
}

std::vector<ExperimentSpec> load_experiment_specs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open spec file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_experiment_specs(buf.str());
}

VerifyReport verify(const ComponentAssignment& a, const Graph& g) {
  const ComponentAssignment oracle = union_find_components(g);
  if (a.rep.size() != g.num_vertices()) {
    VerifyReport r;
    r.message = "assignment covers " + std::to_string(a.rep.size()) +
                " vertices, graph has " + std::to_string(g.num_vertices());
    return r;
  }
  return Compare(std::vector<std::uint64_t>(a.rep.begin(), a.rep.end()), {},
                 oracle);
}

VerifyReport verify(const RunResult& run, const Graph& g) {
  return verify(run.assignment, g);
}

VerifyReport verify(const std::unordered_map<ExternalId, ExternalId>& labels,
                    const Graph& g, const IdTable& ids) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> label(n, 0);
  std::vector<bool> missing(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = labels.find(ids.external[v]);
    if (it == labels.end()) {
      missing[v] = true;
    } else {
      label[v] = it->second;
    }
  }
  return Compare(label, missing, union_find_components(g));
}

std::vector<double> edge_decay_report(const RunResult& run) {
  std::vector<double> ratios;
  for (std::size_t i = 0; i + 1 < run.phases.size(); ++i) {
    ratios.push_back(static_cast<double>(run.phases[i].edges_in) /
                     static_cast<double>(run.phases[i + 1].edges_in));
  }
  return ratios;
}

bool ExperimentOutcome::all_verified() const {
  return std::all_of(runs.begin(), runs.end(), [](const SeedOutcome& r) {
    return !r.aborted && r.verification.ok;
  });
}

bool ExperimentOutcome::any_aborted() const {
  return std::any_of(runs.begin(), runs.end(),
                     [](const SeedOutcome& r) { return r.aborted; });
}

LoadedGraph materialize_graph(const ExperimentSpec& spec, std::uint64_t seed) {
  if (spec.input_path) return load_edge_list_file(*spec.input_path);
  GenSpec g = *spec.gen;
  if (spec.vary_graph_seed) g.seed = seed;
  LoadedGraph out;
  out.graph = generate(g);
  out.ids = IdTable::Identity(out.graph.num_vertices());
  return out;
}

ExperimentOutcome run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  ExperimentOutcome outcome;
  outcome.spec = spec;
  std::vector<std::uint64_t> seeds = spec.seeds;
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  std::optional<LoadedGraph> shared;
  for (std::uint64_t seed : seeds) {
    const bool fresh = !shared || (spec.gen && spec.vary_graph_seed);
    if (fresh) shared = materialize_graph(spec, seed);
    const LoadedGraph& lg = *shared;
    SeedOutcome so;
    so.seed = seed;
    so.n0 = lg.graph.num_vertices();
    so.m0 = lg.graph.num_edges();
    AlgoConfig cfg = spec.config;
    cfg.global_seed = seed;
    if (spec.strict_space) {
      cfg.cost.strict = true;
      cfg.cost.machines = spec.machines;
    }
    try {
      so.result = run_algorithm(spec.algorithm, lg.graph, cfg);
      so.verification = verify(so.result, lg.graph);
      if (spec.assignment_tsv) {
        std::ofstream out(AssignmentPath(spec, seed));
        if (!out) throw ConfigError("cannot write " + AssignmentPath(spec, seed));
        write_assignment_tsv(out, so.result.assignment, lg.ids);
      }
    } catch (const AbortError& e) {
      so.aborted = true;
      so.error = e.what();
      so.result = e.partial();
    } catch (const SpaceViolation& e) {
      so.aborted = true;
      so.error = e.what();
      so.result.algorithm = spec.algorithm;
    }
    outcome.runs.push_back(std::move(so));
  }
  return outcome;
}

void write_stats_csv(std::ostream& out, const ExperimentOutcome& outcome) {
  const std::string algo(algorithm_name(outcome.spec.algorithm));
  out << kStatsCsvHeader << '\n';
  std::vector<std::uint64_t> n0s, m0s, phases, rounds, messages, puts, gets;
  for (const SeedOutcome& r : outcome.runs) {
    const std::string prefix = algo + ',' + std::to_string(r.n0) + ',' +
                               std::to_string(r.m0) + ',' +
                               std::to_string(r.seed) + ',';
    for (const PhaseLedgerEntry& e : r.result.phases) {
      out << prefix << e.phase_index << ',' << e.nodes_in << ',' << e.edges_in
          << ',' << e.rounds_used << ',' << e.messages_sent << ','
          << e.dht_puts << ',' << e.dht_gets << '\n';
    }
    const LedgerTotals& t = r.result.ledger.totals();
    if (r.aborted) {
      out << prefix << "aborted," << r.n0 << ',' << r.m0 << ',' << t.rounds
          << ',' << t.records_sent << ',' << t.dht_puts << ',' << t.dht_gets
          << '\n';
      continue;
    }
    n0s.push_back(r.n0);
    m0s.push_back(r.m0);
    phases.push_back(r.result.phase_count());
    rounds.push_back(t.rounds);
    messages.push_back(t.records_sent);
    puts.push_back(t.dht_puts);
    gets.push_back(t.dht_gets);
  }
  if (phases.empty()) return;
  // nodes_in/edges_in of the summary row hold the input size medians.
  out << algo << ',' << median_of(n0s) << ',' << median_of(m0s) << ",median,"
      << median_of(phases) << ',' << median_of(n0s) << ',' << median_of(m0s)
      << ',' << median_of(rounds) << ',' << median_of(messages) << ','
      << median_of(puts) << ',' << median_of(gets) << '\n';
}

}  // namespace ccmpc
