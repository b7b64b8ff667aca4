// Command-line front end: gen, run, bench, verify.
#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ccmpc/bench.hpp"

namespace {

using namespace ccmpc;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitAbort = 2;
constexpr int kExitUsage = 3;

std::string ReadFileOrInline(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw ConfigError("cannot open " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int Report(const ExperimentOutcome& o, std::ostream& log) {
  int code = kExitOk;
  for (const SeedOutcome& r : o.runs) {
    if (r.aborted) {
      log << algorithm_name(o.spec.algorithm) << " seed " << r.seed
          << ": aborted: " << r.error << '\n';
      code = kExitAbort;
    } else if (!r.verification.ok) {
      log << algorithm_name(o.spec.algorithm) << " seed " << r.seed << ": "
          << r.verification.message << '\n';
      if (code == kExitOk) code = kExitVerify;
    }
  }
  return code;
}

void WriteCsv(const ExperimentOutcome& o) {
  if (o.spec.stats_csv.empty()) return;
  std::ofstream out(o.spec.stats_csv);
  if (!out) throw ConfigError("cannot write " + o.spec.stats_csv);
  write_stats_csv(out, o);
}

int Gen(const std::string& family, std::size_t n, std::optional<double> p,
        std::optional<double> p_ln, std::uint64_t seed, std::size_t legs,
        bool permute, const std::string& out_path) {
  GenSpec s;
  s.family = parse_family(family);
  s.n = n;
  if (p && p_ln) throw ConfigError("give either --p or --p-ln-factor");
  if (p) s.p = *p;
  if (p_ln && n > 1) {
    s.p = std::min(1.0, *p_ln * std::log(double(n)) / double(n));
  }
  s.seed = seed;
  s.legs = legs;
  s.permute = permute;
  const Graph g = generate(s);
  const IdTable ids = IdTable::Identity(g.num_vertices());
  if (out_path.empty() || out_path == "-") {
    write_edge_list(std::cout, g, ids);
  } else {
    std::ofstream out(out_path);
    if (!out) throw ConfigError("cannot write " + out_path);
    write_edge_list(out, g, ids);
  }
  return kExitOk;
}

int Verify(const std::string& input, const std::string& assignment) {
  const LoadedGraph lg = load_edge_list_file(input);
  std::ifstream in(assignment);
  if (!in) throw ConfigError("cannot open " + assignment);
  const auto labels = read_assignment_tsv(in);
  const VerifyReport r = verify(labels, lg.graph, lg.ids);
  std::cout << (r.ok ? "OK " : "MISMATCH ") << r.message << '\n';
  for (VertexId w : r.witnesses) {
    std::cout << "  vertex " << lg.ids.external[w] << '\n';
  }
  return r.ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected components on a simulated MPC substrate"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  std::string family, gen_out;
  std::size_t gen_n = 0, legs = 1;
  std::optional<double> gen_p, gen_p_ln;
  std::uint64_t gen_seed = 0;
  bool permute = false;
  gen->add_option("--family", family, "gnp, gnp_plus, path, cycle, star, "
                                      "complete, binary_tree, caterpillar")
      ->required();
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--p", gen_p, "Edge probability");
  gen->add_option("--p-ln-factor", gen_p_ln, "Set p = c ln(n) / n");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--legs", legs, "Caterpillar leaves per spine vertex");
  gen->add_flag("--permute", permute, "Randomly relabel vertices");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // run
  auto* run = app.add_subcommand("run", "Run one algorithm on one graph");
  std::string algo, input, gen_spec, stats_csv, assignment_out;
  std::uint64_t seed = 1;
  bool strict = false;
  std::size_t machines = 1;
  std::optional<std::uint64_t> finalize_threshold, alpha0;
  std::optional<std::uint32_t> max_phases;
  run->add_option("--algo", algo,
                  "local, local+mtl, tree-pj, tree-dht, hashmin, hash2min, "
                  "cracker")
      ->required();
  auto* in_opt = run->add_option("--input", input, "Edge list file");
  auto* gs_opt = run->add_option("--gen-spec", gen_spec,
                                 "Generator spec: JSON file or inline JSON");
  in_opt->excludes(gs_opt);
  run->add_option("--seed", seed, "Algorithm seed");
  run->add_option("--stats-csv", stats_csv);
  run->add_option("--assignment-out", assignment_out);
  run->add_flag("--strict-space", strict, "Enforce per-machine receive budget");
  run->add_option("--machines", machines)->check(CLI::PositiveNumber);
  run->add_option("--finalize-threshold", finalize_threshold);
  run->add_option("--max-phases", max_phases);
  run->add_option("--alpha0", alpha0);

  // bench
  auto* bench = app.add_subcommand("bench", "Run a JSON list of experiments");
  std::string spec_file;
  bench->add_option("--spec-file", spec_file)->required();

  // verify
  auto* ver = app.add_subcommand("verify", "Check an assignment TSV");
  std::string v_input, v_assignment;
  ver->add_option("--input", v_input)->required();
  ver->add_option("--assignment", v_assignment)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      return Gen(family, gen_n, gen_p, gen_p_ln, gen_seed, legs, permute,
                 gen_out);
    }
    if (*ver) return Verify(v_input, v_assignment);
    if (*run) {
      if (input.empty() == gen_spec.empty()) {
        throw ConfigError("run needs exactly one of --input or --gen-spec");
      }
      ExperimentSpec spec;
      spec.algorithm = parse_algorithm(algo);
      if (!input.empty()) {
        spec.input_path = input;
      } else {
        spec.gen = parse_gen_spec(ReadFileOrInline(gen_spec));
      }
      spec.seeds = {seed};
      spec.stats_csv = stats_csv;
      if (!assignment_out.empty()) spec.assignment_tsv = assignment_out;
      spec.strict_space = strict;
      spec.machines = machines;
      if (finalize_threshold) spec.config.finalize_threshold = *finalize_threshold;
      if (max_phases) spec.config.max_phases = *max_phases;
      spec.config.alpha0 = alpha0;
      const ExperimentOutcome o = run_experiment(spec);
      WriteCsv(o);
      return Report(o, std::cerr);
    }
    if (*bench) {
      int code = kExitOk;
      for (const ExperimentSpec& spec : load_experiment_specs(spec_file)) {
        const ExperimentOutcome o = run_experiment(spec);
        WriteCsv(o);
        std::vector<std::size_t> phases;
        for (const SeedOutcome& r : o.runs) {
          if (!r.aborted) phases.push_back(r.result.phase_count());
        }
        std::cout << algorithm_name(spec.algorithm) << ": "
                  << o.runs.size() << " seeds, median phases "
                  << median_of(phases)
                  << (o.all_verified() ? ", verified" : ", FAILED") << '\n';
        code = std::max(code, Report(o, std::cerr));
      }
      return code;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SpaceViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAbort;
  }
  return kExitUsage;
}
