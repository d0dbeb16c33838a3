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

#include "funcqaoa/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <array>
#include <map>
#include <set>
#include <tuple>
#include <ostream>
#include <sstream>

#include "funcqaoa/parallel.hpp"
#include "funcqaoa/simulate.hpp"

namespace fq {

namespace {

long long to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw UsageError("not an integer: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("not an integer: " + s);
  }
}

}  // namespace

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) {
    std::vector<long long> parts;
    std::stringstream ss(item);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(to_int(p));
    if (parts.size() == 1) {
      out.push_back(static_cast<int>(parts[0]));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const long long step = parts.size() == 3 ? parts[2] : 1;
      if (step < 1 || parts[1] < parts[0]) throw UsageError("bad range: " + item);
      for (long long v = parts[0]; v <= parts[1]; v += step) out.push_back(static_cast<int>(v));
    } else {
      throw UsageError("bad range: " + item);
    }
  }
  if (out.empty()) throw UsageError("empty list: " + s);
  return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  for (int v : parse_int_list(s)) {
    if (v < 0) throw UsageError("seeds must be non-negative");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

ProblemKind parse_problem(const std::string& s) {
  for (auto k : {ProblemKind::MaxKCut, ProblemKind::Tsp, ProblemKind::SetCover, ProblemKind::Ilp})
    if (s == problem_name(k)) return k;
  throw UsageError("unknown problem: " + s);
}

std::vector<VariantId> parse_variants(ProblemKind p, const std::string& list) {
  if (list.empty() || list == "all") return variants_for(p);
  std::vector<VariantId> out;
  for (const auto& item : split_list(list)) {
    const std::string full =
        item.find(':') == std::string::npos ? std::string(problem_name(p)) + ":" + item : item;
    const VariantId v = VariantId::parse(full);
    if (v.problem != p) throw DomainError("variant " + full + " does not match the problem");
    out.push_back(v);
  }
  return out;
}

std::vector<Coupling> parse_couplings(const std::string& list) {
  std::vector<Coupling> out;
  for (const auto& item : split_list(list)) {
    const auto c = coupling_from_name(item);
    if (!c) throw UsageError("unknown coupling: " + item);
    out.push_back(*c);
  }
  if (out.empty()) throw UsageError("no coupling given");
  return out;
}

Instance make_instance(ProblemKind p, int n, int K, std::uint64_t seed) {
  switch (p) {
    case ProblemKind::MaxKCut: return generate_instance({"maxkcut", n, K, 0, 1, seed});
    case ProblemKind::Tsp: return generate_instance({"tsp", n, 3, 0, 1, seed});
    case ProblemKind::SetCover: return generate_instance({"setcover", n, 3, 0, 1, seed});
    case ProblemKind::Ilp: return generate_instance({"ilp", n, 3, 0, 1, seed});
  }
  throw DomainError("unknown problem");
}

const char* const kScanHeader =
    "problem,variant,n,K,coupling,qubits,gates,two_qubit_gates,param_gates,depth,"
    "span_bound,eff_space_bits";

void cmd_scan(const ScanSpec& spec, std::ostream& out, int workers) {
  struct Job {
    VariantId v;
    int n, K;
    Coupling c;
  };
  std::vector<Job> jobs;
  const bool colours = spec.problem == ProblemKind::MaxKCut;
  for (const auto& v : spec.variants)
    for (int n : spec.ns)
      for (int K : colours ? spec.ks : std::vector<int>{0})
        for (Coupling c : spec.couplings) jobs.push_back({v, n, K, c});

  out << kScanHeader << '\n';
  if (workers <= 0) workers = worker_count();
  // Batches keep memory flat while the collector writes rows in job order.
  const std::size_t batch = static_cast<std::size_t>(workers);
  for (std::size_t lo = 0; lo < jobs.size(); lo += batch) {
    const std::size_t hi = std::min(jobs.size(), lo + batch);
    std::vector<std::string> rows(hi - lo);
    parallel_for(
        hi - lo,
        [&](std::size_t i) {
          const Job& j = jobs[lo + i];
          const auto a = build_ansatz(j.v, make_instance(spec.problem, j.n, j.K, spec.seed));
          const Tabulation t = tabulate(a, j.c);
          std::ostringstream os;
          os << std::setprecision(10) << problem_name(spec.problem) << ',' << j.v.str() << ','
             << j.n << ',';
          if (colours) os << j.K;
          os << ',' << coupling_name(j.c) << ',' << t.report.qubits << ',' << t.report.total_gates
             << ',' << t.report.two_qubit_gates << ',' << t.report.param_gates << ','
             << t.report.depth << ',' << t.span_bound << ',' << t.eff_space_bits;
          rows[i] = os.str();
        },
        workers);
    for (const auto& r : rows) out << r << '\n';
    out.flush();
  }
}

const char* const kSummaryHeader =
    "variant,n,level,instances,energy_mean,energy_std,p_feasible_mean,p_feasible_std,"
    "p_optimal_mean,p_optimal_std,rescaled_energy_mean,rescaled_energy_std";

namespace {

struct Moments {
  std::vector<double> xs;

  double mean() const {
    double s = 0.0;
    for (double x : xs) s += x;
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
  }
  double stddev() const {
    if (xs.size() < 2) return 0.0;
    const double m = mean();
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
  }
};

EvalMetrics level_metrics(const LevelRecord& l, bool per_metric) {
  if (!per_metric) return l.metrics;
  EvalMetrics e = l.metrics;
  for (const auto& r : l.runs) {
    e.energy = std::min(e.energy, r.metrics.energy);
    e.p_feasible = std::max(e.p_feasible, r.metrics.p_feasible);
    e.p_optimal = std::max(e.p_optimal, r.metrics.p_optimal);
    e.rescaled_energy = std::min(e.rescaled_energy, r.metrics.rescaled_energy);
  }
  return e;
}

std::string encoding_tag(const VariantId& v) {
  const std::string s = v.str();
  return s.substr(s.find(':') + 1);
}

}  // namespace

CampaignResult cmd_optimize(const CampaignSpec& spec, int workers) {
  spec.opt.validate();
  namespace fs = std::filesystem;
  fs::create_directories(spec.out_dir);

  struct Job {
    VariantId v;
    int n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& v : spec.variants)
    for (int n : spec.ns)
      for (auto s : spec.seeds) jobs.push_back({v, n, s});

  std::vector<std::optional<Trace>> traces(jobs.size());
  std::vector<std::string> errs(jobs.size());
  OptimizerConfig inner = spec.opt;
  inner.workers = 1;
  parallel_for(
      jobs.size(),
      [&](std::size_t i) {
        const Job& j = jobs[i];
        try {
          const auto a = build_ansatz(j.v, make_instance(spec.problem, j.n, spec.K, j.seed));
          if (!a.optimizable) throw DomainError("variant is tabulation-only");
          if (!a.restricted_basis && a.state_qubits > kCampaignMaxQubits)
            throw DomainError(std::to_string(a.state_qubits) +
                              " state qubits exceed the simulator cap of " +
                              std::to_string(kCampaignMaxQubits));
          const SemanticModel m = prepare_semantic(a);
          if (m.dim() > (Index{1} << kCampaignMaxQubits))
            throw DomainError("restricted basis exceeds the simulator cap");
          OptimizerConfig c = inner;
          c.seed = spec.opt.seed + j.seed;
          traces[i] = optimize_layerwise(m, c, j.v.str());
        } catch (const std::exception& e) {
          errs[i] = j.v.str() + " n=" + std::to_string(j.n) + ": " + e.what();
        }
      },
      workers);

  CampaignResult res;
  // Per (variant, n, level): metrics across instances.
  std::map<std::tuple<std::string, int, int>, std::array<Moments, 4>> agg;
  std::vector<std::tuple<std::string, int>> order;
  std::set<std::string> reported;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job& j = jobs[i];
    if (!traces[i]) {
      // One message per variant and size is enough.
      const std::string key = j.v.str() + "/" + std::to_string(j.n);
      if (reported.insert(key).second) res.errors.push_back(errs[i]);
      continue;
    }
    const std::string stem = (fs::path(spec.out_dir) /
                              (std::string(problem_name(spec.problem)) + "_" + encoding_tag(j.v) +
                               "_n" + std::to_string(j.n) + "_s" + std::to_string(j.seed)))
                                 .string();
    std::ofstream(stem + ".json") << trace_to_json(*traces[i]).dump(1) << '\n';
    std::ofstream(stem + ".csv") << trace_csv(*traces[i]);
    res.trace_files.push_back(stem + ".json");
    if (std::find(order.begin(), order.end(), std::tuple{j.v.str(), j.n}) == order.end())
      order.emplace_back(j.v.str(), j.n);
    for (const auto& l : traces[i]->levels) {
      const EvalMetrics e = level_metrics(l, spec.per_metric_best);
      auto& m = agg[{j.v.str(), j.n, l.p}];
      m[0].xs.push_back(e.energy);
      m[1].xs.push_back(e.p_feasible);
      m[2].xs.push_back(e.p_optimal);
      m[3].xs.push_back(e.rescaled_energy);
    }
  }

  std::ofstream sum(fs::path(spec.out_dir) / "summary.csv");
  sum << kSummaryHeader << '\n' << std::setprecision(10);
  for (const auto& [v, n] : order)
    for (int p = 1; p <= spec.opt.max_p; ++p) {
      const auto it = agg.find({v, n, p});
      if (it == agg.end()) continue;
      sum << v << ',' << n << ',' << p << ',' << it->second[0].xs.size();
      for (const auto& m : it->second) sum << ',' << m.mean() << ',' << m.stddev();
      sum << '\n';
    }
  return res;
}

nlohmann::json cmd_bounds_shots(double delta, double eps, double p,
                                const std::optional<std::vector<double>>& weights) {
  nlohmann::json j = {{"delta", delta},
                      {"epsilon", eps},
                      {"p", p},
                      {"M_hoeffding", hoeffding_shots(delta, eps, p)},
                      {"M_pauli", nullptr}};
  if (weights) j["M_pauli"] = pauli_l1_shots(*weights, eps);
  return j;
}

nlohmann::json cmd_bounds_lnn(const InteractionGraph& g) {
  return {{"vertices", g.n},
          {"edges", g.edges.size()},
          {"radius", g.n > 1 ? g.radius() : 0},
          {"bound", lnn_lower_bound(g)}};
}

}  // namespace fq
