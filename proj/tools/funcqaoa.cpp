// Copyright 2026 The funcqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: gen, scan, optimize, bounds, dump-circuit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "funcqaoa/cli.hpp"
#include "funcqaoa/estimators.hpp"
#include "funcqaoa/parallel.hpp"

using namespace fq;

namespace {

struct InstanceArgs {
  std::string problem;
  int n = 0;
  int k = 3;
  int subsets = 0;
  int constraints = 1;
  std::string seeds = "1";
  std::string instance_file;

  void add(CLI::App* app, bool n_required = true) {
    app->add_option("--problem", problem, "maxkcut | tsp | setcover | ilp")->required();
    auto* o = app->add_option("--n", n, "nodes, cities, universe size or variables");
    if (n_required) o->required();
    app->add_option("--k", k, "colours for maxkcut")->capture_default_str();
    app->add_option("--seeds", seeds, "seed, list a,b,c or range a:b")->capture_default_str();
  }

  Instance instance() const {
    if (!instance_file.empty()) {
      std::ifstream in(instance_file);
      if (!in) throw UsageError("cannot read " + instance_file);
      std::stringstream ss;
      ss << in.rdbuf();
      return instance_from_json(ss.str());
    }
    return make_instance(parse_problem(problem), n, k, parse_seed_list(seeds).front());
  }
};

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FUNC-QAOA resource and optimisation toolkit"};
  app.require_subcommand(1);
  app.footer("Worker threads: FUNCQAOA_WORKERS (default: hardware concurrency).\n"
             "Exit codes: 0 ok, 1 domain error, 2 usage error.");

  // gen
  auto* gen = app.add_subcommand("gen", "write a seeded random instance as JSON");
  InstanceArgs gen_args;
  std::string gen_out;
  gen_args.add(gen);
  gen->add_option("--subsets", gen_args.subsets, "setcover family size (default n+1)");
  gen->add_option("--constraints", gen_args.constraints, "ilp constraint count")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // scan
  auto* scan = app.add_subcommand("scan", "resource table of preparation plus one level");
  std::string scan_problem, scan_variants, scan_n, scan_k = "3", scan_coupling = "all-to-all,lnn",
                                                   scan_out;
  std::uint64_t scan_seed = 1;
  scan->add_option("--problem", scan_problem)->required();
  scan->add_option("--variant", scan_variants, "comma list (default all)");
  scan->add_option("--n", scan_n, "size, list or range a:b[:step]")->required();
  scan->add_option("--k-range", scan_k, "colours for maxkcut, list or range")
      ->capture_default_str();
  scan->add_option("--coupling", scan_coupling, "all-to-all, lnn or both")->capture_default_str();
  scan->add_option("--seeds", scan_seed, "instance seed")->capture_default_str();
  scan->add_option("--out", scan_out, "CSV file (default stdout)");
  scan->footer(std::string("CSV columns: ") + kScanHeader +
               "\nK is empty for problems other than maxkcut.");

  // optimize
  auto* opt = app.add_subcommand("optimize", "layer-wise QAOA optimisation campaign");
  std::string opt_problem, opt_variants, opt_n, opt_seeds = "1", opt_out = "traces",
                                                opt_best = "energy";
  int opt_k = 3, opt_instances = -1;
  OptimizerConfig cfg;
  opt->add_option("--problem", opt_problem)->required();
  opt->add_option("--variant", opt_variants, "comma list (default all)");
  opt->add_option("--n", opt_n, "size, list or range")->required();
  opt->add_option("--k", opt_k, "colours for maxkcut")->capture_default_str();
  opt->add_option("--seeds", opt_seeds, "instance seeds; a single seed starts --instances seeds")
      ->capture_default_str();
  opt->add_option("--instances", opt_instances, "instance count (default 50 from one seed)");
  opt->add_option("--max-p", cfg.max_p, "deepest level")->capture_default_str();
  opt->add_option("--restarts", cfg.restarts, "restarts per level")->capture_default_str();
  opt->add_option("--tol", cfg.x_tol, "x, g and f tolerance")->capture_default_str();
  opt->add_option("--opt-seed", cfg.seed, "offset added to each instance seed")
      ->capture_default_str();
  opt->add_option("--best", opt_best, "energy | per-metric summary selection")
      ->capture_default_str();
  opt->add_option("--out", opt_out, "output directory")->capture_default_str();
  opt->footer(std::string("Per trace: <problem>_<variant>_n<N>_s<seed>.json and .csv with "
                          "columns level,energy,p_feasible,p_optimal,rescaled_energy.\n"
                          "summary.csv columns: ") +
              kSummaryHeader);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form estimators");
  bounds->require_subcommand(1);
  auto* shots = bounds->add_subcommand("shots", "Hoeffding and Pauli-l1 sample budgets");
  double delta = 0, eps = 0, pfail = 0.05;
  std::string weights;
  shots->add_option("--delta", delta, "energy span")->required();
  shots->add_option("--eps", eps, "additive precision")->required();
  shots->add_option("--p", pfail, "failure probability")->capture_default_str();
  shots->add_option("--weights", weights, "comma list of Pauli weights");
  auto* lnn = bounds->add_subcommand("lnn", "radius-based LNN depth lower bound");
  std::string graph;
  InstanceArgs lnn_args;
  std::string lnn_variant;
  lnn->add_option("--graph", graph, "complete:N | path:N | cycle:N | star:N");
  lnn->add_option("--problem", lnn_args.problem);
  lnn->add_option("--variant", lnn_variant, "QUBO-type variant (x, xy, gm, mtz, slack-qubo)");
  lnn->add_option("--n", lnn_args.n);
  lnn->add_option("--k", lnn_args.k);
  lnn->add_option("--seeds", lnn_args.seeds);
  auto* span = bounds->add_subcommand("span", "analytic and exact energy span");
  InstanceArgs span_args;
  std::string span_variant;
  span_args.add(span);
  span->add_option("--variant", span_variant)->required();

  // dump-circuit
  auto* dump = app.add_subcommand("dump-circuit", "write a circuit in text form");
  InstanceArgs dump_args;
  std::string dump_variant, dump_coupling = "all-to-all", dump_out;
  int dump_p = 1;
  bool logical = false;
  dump_args.add(dump);
  dump->add_option("--variant", dump_variant)->required();
  dump->add_option("--coupling", dump_coupling)->capture_default_str();
  dump->add_option("--max-p", dump_p, "levels")->capture_default_str();
  dump->add_flag("--logical", logical, "macro gates before lowering and routing");
  dump->add_option("--out", dump_out, "file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      const auto seed = parse_seed_list(gen_args.seeds).front();
      GenerateSpec g{gen_args.problem, gen_args.n, gen_args.k, gen_args.subsets,
                     gen_args.constraints, seed};
      parse_problem(gen_args.problem);
      write_out(gen_out, instance_to_json(generate_instance(g), seed) + "\n");
    } else if (*scan) {
      ScanSpec s;
      s.problem = parse_problem(scan_problem);
      s.variants = parse_variants(s.problem, scan_variants);
      s.ns = parse_int_list(scan_n);
      s.ks = parse_int_list(scan_k);
      s.couplings = parse_couplings(scan_coupling);
      s.seed = scan_seed;
      if (scan_out.empty() || scan_out == "-") {
        cmd_scan(s, std::cout);
      } else {
        std::ofstream f(scan_out);
        if (!f) throw UsageError("cannot write " + scan_out);
        cmd_scan(s, f);
      }
    } else if (*opt) {
      CampaignSpec c;
      c.problem = parse_problem(opt_problem);
      c.variants = parse_variants(c.problem, opt_variants);
      c.ns = parse_int_list(opt_n);
      c.K = opt_k;
      c.seeds = parse_seed_list(opt_seeds);
      if (c.seeds.size() == 1) {
        const int count = opt_instances < 0 ? 50 : opt_instances;
        const auto base = c.seeds.front();
        c.seeds.clear();
        for (int i = 0; i < count; ++i) c.seeds.push_back(base + static_cast<std::uint64_t>(i));
      } else if (opt_instances >= 0) {
        c.seeds.resize(std::min(c.seeds.size(), static_cast<std::size_t>(opt_instances)));
      }
      cfg.g_tol = cfg.f_tol = cfg.x_tol;
      c.opt = cfg;
      c.out_dir = opt_out;
      if (opt_best != "energy" && opt_best != "per-metric")
        throw UsageError("--best must be energy or per-metric");
      c.per_metric_best = opt_best == "per-metric";
      try {
        c.opt.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto r = cmd_optimize(c);
      std::cerr << r.trace_files.size() << " traces written to " << c.out_dir << '\n';
      for (const auto& e : r.errors) std::cerr << "error: " << e << '\n';
      if (!r.errors.empty()) return 1;
    } else if (*shots) {
      std::optional<std::vector<double>> w;
      if (!weights.empty()) {
        w.emplace();
        for (const auto& s : split_list(weights)) {
          try {
            w->push_back(std::stod(s));
          } catch (const std::logic_error&) {
            throw UsageError("bad weight: " + s);
          }
        }
      }
      std::cout << cmd_bounds_shots(delta, eps, pfail, w).dump() << '\n';
    } else if (*lnn) {
      InteractionGraph g;
      if (!graph.empty()) {
        try {
          g = parse_graph(graph);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      } else {
        if (lnn_args.problem.empty() || lnn_variant.empty() || lnn_args.n <= 0)
          throw UsageError("bounds lnn needs --graph or --problem, --variant and --n");
        const auto p = parse_problem(lnn_args.problem);
        g = interaction_graph(build_ansatz(parse_variants(p, lnn_variant).front(),
                                           lnn_args.instance()));
      }
      std::cout << cmd_bounds_lnn(g).dump() << '\n';
    } else if (*span) {
      const auto p = parse_problem(span_args.problem);
      const auto a = build_ansatz(parse_variants(p, span_variant).front(), span_args.instance());
      nlohmann::json j = {{"variant", a.id.str()}, {"span_bound", span_bound(a)}};
      if (a.state_qubits <= kExactSpanMaxQubits) {
        j["exact_span"] = exact_span(a);
        j["exact_feasible_span"] = exact_span(a, true);
      }
      std::cout << j.dump() << '\n';
    } else if (*dump) {
      const auto p = parse_problem(dump_args.problem);
      const auto a = build_ansatz(parse_variants(p, dump_variant).front(), dump_args.instance());
      const auto c = parse_couplings(dump_coupling);
      if (c.size() != 1) throw UsageError("dump-circuit takes one coupling");
      std::ostringstream os;
      write_text(os, logical ? qaoa_circuit(a, dump_p) : lowered_circuit(a, c.front(), dump_p));
      write_out(dump_out, os.str());
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
