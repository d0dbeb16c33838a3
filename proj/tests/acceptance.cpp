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

// Acceptance run: one PASS/FAIL line per criterion. `--freeze` rewrites the
// optimisation regression baseline instead of comparing against it.

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <algorithm>
#include <sstream>
#include <string>

#include "funcqaoa/ansatz.hpp"
#include "funcqaoa/estimators.hpp"
#include "funcqaoa/gadgets.hpp"
#include "funcqaoa/optimize.hpp"
#include "funcqaoa/simulate.hpp"
#include "funcqaoa/statevector.hpp"
#include "test_util.hpp"

#ifndef FUNCQAOA_DATA_DIR
#define FUNCQAOA_DATA_DIR "tests/data"
#endif

using namespace fq;

namespace {

bool g_freeze = false;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && out_.pass) out_.detail = what;
    out_.pass = out_.pass && ok;
  }
  void note(const std::string& s) {
    if (out_.pass) out_.detail = s;
  }
  const Outcome& outcome() const { return out_; }

 private:
  Outcome out_;
};

std::vector<int> range(int lo, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + i;
  return v;
}

std::string fmt(double v, int prec = 6) {
  std::ostringstream os;
  os << std::setprecision(prec) << v;
  return os.str();
}

// ---------------------------------------------------------------------------

Outcome c1_state_prep() {
  Check ck;
  const Circuit c = uniform_range_prep({"r", range(0, 4)}, 14, 4);
  std::vector<double> ry;
  for (const auto& g : c.gates())
    if (g.kind == GateKind::RY || g.kind == GateKind::CRY) ry.push_back(g.angle.coeff);
  ck.expect(ry.size() >= 2, "fewer than two Y rotations");
  if (ry.size() >= 2) {
    ck.expect(std::abs(ry[0] - 1.427) < 1e-3, "first angle " + fmt(ry[0]));
    ck.expect(std::abs(ry[1] - 1.231) < 1e-3, "second angle " + fmt(ry[1]));
  }
  const Circuit d = decompose(c, Coupling::AllToAll);
  const StateVector out = simulate_circuit<double>(d, basis_state(d.num_lines(), 0));
  // Lowered Toffolis carry a global phase; align on |0>.
  const std::complex<double> g = std::abs(out(0)) > 0 ? std::conj(out(0)) / std::abs(out(0)) : 1.0;
  double err = 0.0;
  for (Eigen::Index x = 0; x < out.size(); ++x) {
    const Index v = register_value(static_cast<Index>(x), range(0, 4));
    const bool clean = (static_cast<Index>(x) >> 4) == 0;
    const double want = clean && v < 14 ? 1 / std::sqrt(14.0) : 0.0;
    err = std::max(err, std::abs(g * out(x) - std::complex<double>(want, 0.0)));
  }
  ck.expect(err < 1e-10, "amplitude error " + fmt(err));
  if (ry.size() >= 2)
    ck.note("angles " + fmt(ry[0], 4) + ", " + fmt(ry[1], 4) + "; amplitude error " + fmt(err, 2));
  return ck.outcome();
}

Outcome c2_swap_networks() {
  Check ck;
  int checked = 0;
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 8; ++m) {
      const Circuit c = register_swap({"a", range(0, n)}, {"b", range(n, m)});
      ck.expect(measure(c, Coupling::LNN).two_qubit_gates == 3LL * n * m,
                "register_swap count at " + std::to_string(n) + "," + std::to_string(m));
      if (n + m > 10) continue;
      for (Index a = 0; a < (Index{1} << n); ++a)
        for (Index b = 0; b < (Index{1} << m); ++b) {
          const Index in = with_register(with_register(0, range(0, n), a), range(n, m), b);
          const long long got = testing::classical_output(testing::run_basis(c, in));
          const Index want = with_register(with_register(0, range(0, m), b), range(m, n), a);
          ck.expect(got == static_cast<long long>(want), "register_swap permutation");
          ++checked;
        }
    }
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int m = 1; m <= 3; ++m) {
        std::vector<RegisterSpan> a, b;
        for (int i = 0; i < n; ++i) a.push_back({"a", range(i * k, k)});
        for (int i = 0; i < n; ++i) b.push_back({"b", range(n * k + i * m, m)});
        const Circuit c = interlace(a, b);
        ck.expect(measure(c, Coupling::LNN).two_qubit_gates == 3LL * k * m * n * (n - 1) / 2,
                  "interlace count");
        const int total = n * (k + m);
        if (total > 10) continue;
        for (Index in = 0; in < (Index{1} << total); ++in) {
          const long long got = testing::classical_output(testing::run_basis(c, in));
          Index want = 0;
          for (int i = 0; i < n; ++i) {
            want = with_register(want, range(i * (k + m), k), register_value(in, a[static_cast<std::size_t>(i)].lines));
            want = with_register(want, range(i * (k + m) + k, m), register_value(in, b[static_cast<std::size_t>(i)].lines));
          }
          ck.expect(got == static_cast<long long>(want), "interlace permutation");
          ++checked;
        }
      }
  ck.note(std::to_string(checked) + " basis inputs simulated");
  return ck.outcome();
}

// Decomposed phase separator on every feasible basis state.
double phase_error(const VariantAnsatz& a, double gamma, int& states, int& lines) {
  Circuit c = a.plan->layout().clone_layout();
  a.plan->phase(c, Angle::param(gamma_ref(1)));
  const Circuit d = decompose(c, Coupling::AllToAll);
  lines = d.num_lines();
  const ParamValues pv{{gamma}, {0.0}};
  std::complex<double> ref;
  bool first = true;
  double err = 0.0;
  for (Index x = 0; x < (Index{1} << a.state_qubits); ++x) {
    if (!a.feasible(x)) continue;
    const StateVector out = simulate_circuit<double>(d, basis_state(d.num_lines(), x), pv);
    // All mass must stay on x with every ancilla back at zero.
    const std::complex<double> amp = out(static_cast<Eigen::Index>(x));
    const std::complex<double> rel = amp * std::polar(1.0, gamma * a.cost(x));
    if (first) ref = rel;
    first = false;
    err = std::max(err, std::abs(rel - ref));
    ++states;
  }
  return err;
}

Outcome c3_circuit_semantics() {
  Check ck;
  std::string det;
  const std::pair<std::string, Instance> cases[] = {
      {"tsp:func-gm", generate_instance({"tsp", 3, 3, 0, 1, 1})},
      {"tsp:func-com", generate_instance({"tsp", 3, 3, 0, 1, 2})},
      {"maxkcut:func", generate_instance({"maxkcut", 3, 3, 0, 1, 1})},
  };
  for (const auto& [v, inst] : cases) {
    const auto a = build_ansatz(VariantId::parse(v), inst);
    int states = 0, lines = 0;
    const double err = phase_error(a, 0.61, states, lines);
    ck.expect(err < 1e-8, v + " phase error " + fmt(err));
    det += v + " " + std::to_string(states) + " states on " + std::to_string(lines) +
           " lines, err " + fmt(err, 2) + "; ";
  }
  ck.note(det);
  return ck.outcome();
}

Outcome c4_parity_oracle() {
  Check ck;
  long long cases = 0;
  for (int n : {3, 4}) {
    // Four-bit registers: every (2^w)^n pattern of the encoding and more.
    const std::uint64_t base = 16;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= base;
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n));
    for (std::uint64_t x = 0; x < total; ++x) {
      std::uint64_t v = x;
      for (int i = 0; i < n; ++i, v /= base) a[static_cast<std::size_t>(i)] = v % base;
      ck.expect(parity_accepts(a, n) == is_permutation(a, n), "parity and permutation disagree");
      // Independent oracle: sorted values are exactly 0..n-1.
      auto s = a;
      std::sort(s.begin(), s.end());
      bool perm = true;
      for (int i = 0; i < n; ++i) perm = perm && s[static_cast<std::size_t>(i)] == static_cast<std::uint64_t>(i);
      ck.expect(perm == is_permutation(a, n), "is_permutation wrong");
      ++cases;
    }
  }
  ck.note(std::to_string(cases) + " assignments (4096 + 65536)");
  return ck.outcome();
}

Outcome c5_resource_scaling() {
  Check ck;
  const int n = 128;
  std::vector<double> ratio;
  std::string cross;
  std::ostringstream det;
  for (int K : {4, 8, 16, 32, 64}) {
    const auto inst = std::get<MaxKCutInstance>(generate_instance({"maxkcut", n, K, 0, 1, 1}));
    const auto func = tabulate(build_ansatz(VariantId::parse("maxkcut:func"), inst), Coupling::AllToAll);
    const auto x = tabulate(build_ansatz(VariantId::parse("maxkcut:x"), inst), Coupling::AllToAll);
    const int m = ceil_log2(static_cast<std::uint64_t>(K));
    const long long anc = 1 + (m >= 3 ? m - 1 : 0);
    ck.expect(func.report.qubits == static_cast<long long>(n) * m + anc,
              "FUNC qubits at K=" + std::to_string(K));
    // The ancilla count must not grow with n.
    const auto small = std::get<MaxKCutInstance>(generate_instance({"maxkcut", 16, K, 0, 1, 1}));
    const auto fs = tabulate(build_ansatz(VariantId::parse("maxkcut:func"), small), Coupling::AllToAll);
    ck.expect(fs.report.qubits - 16LL * m == anc, "ancilla count depends on n");
    ratio.push_back(static_cast<double>(func.report.total_gates) / (double(n) * n * std::log2(double(K))));
    if (func.report.total_gates < x.report.total_gates && cross.empty()) cross = std::to_string(K);
    const long long closed = xqaoa_closed_form_gates(inst);
    ck.expect(x.report.total_gates == closed, "X-QAOA closed form at K=" + std::to_string(K));
    // Theta(n^2 K): the count over n^2 K stays within fixed bounds.
    const double xr = static_cast<double>(x.report.total_gates) / (double(n) * n * K);
    ck.expect(xr > 1.0 && xr < 3.0, "X-QAOA gates / n^2 K = " + fmt(xr));
    det << "K=" << K << ": func " << func.report.total_gates << " x " << x.report.total_gates << "; ";
  }
  const double spread = *std::max_element(ratio.begin(), ratio.end()) /
                        *std::min_element(ratio.begin(), ratio.end());
  ck.expect(spread < 3.0, "FUNC gates/(n^2 log K) spread " + fmt(spread));
  ck.expect(!cross.empty(), "FUNC never below X-QAOA");
  ck.note(det.str() + "spread " + fmt(spread, 3) + ", first crossover K=" + cross);
  return ck.outcome();
}

Outcome c6_feasibility() {
  Check ck;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  double worst = 0.0, leak = 0.0;
  for (int n = 3; n <= 5; ++n) {
    const auto inst = generate_instance({"tsp", n, 3, 0, 1, static_cast<std::uint64_t>(n)});
    const auto gm = prepare_semantic(build_ansatz(VariantId::parse("tsp:gm"), inst));
    const auto fa = build_ansatz(VariantId::parse("tsp:func-com"), inst);
    const auto fm = prepare_semantic(fa);
    for (int k = 0; k < 100; ++k) {
      const int p = 1 + k % 3;
      std::vector<double> g(static_cast<std::size_t>(p)), b(static_cast<std::size_t>(p));
      for (auto& v : g) v = u(rng);
      for (auto& v : b) v = u(rng);
      worst = std::max(worst, std::abs(1.0 - evaluate(gm, run_qaoa(gm, g, b)).p_feasible));
      const StateVector psi = run_qaoa(fm, g, b);
      double mass = 0.0;
      for (Index x = 0; x < fm.dim(); ++x) {
        bool bad = false;
        for (const auto& r : fa.registers)
          bad = bad || register_value(fm.basis_index(x), r.lines) >= static_cast<Index>(n);
        if (bad) mass += std::norm(psi(static_cast<Eigen::Index>(x)));
      }
      leak = std::max(leak, mass);
    }
  }
  ck.expect(worst < 1e-12, "GM p_feasible deviates by " + fmt(worst));
  ck.expect(leak < 1e-12, "per-register Grover leaks " + fmt(leak));
  ck.note("max |1 - p_feasible| " + fmt(worst, 2) + ", max leaked mass " + fmt(leak, 2));
  return ck.outcome();
}

struct C7Row {
  std::uint64_t seed;
  double e1, e6, r1, r6, o1, o6;
};

Outcome c7_optimisation() {
  Check ck;
  std::vector<C7Row> rows;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const auto inst = generate_instance({"tsp", 4, 3, 0, 1, s});
    const auto a = build_ansatz(VariantId::parse("tsp:func-gm"), inst);
    const auto m = prepare_semantic(a);
    OptimizerConfig cfg;
    cfg.max_p = 6;
    cfg.seed = 1 + s;
    const Trace t = optimize_layerwise(m, cfg, "tsp:func-gm");
    const auto& l1 = t.levels.front();
    const auto& l6 = t.levels.back();
    rows.push_back({s, l1.energy, l6.energy, l1.metrics.rescaled_energy, l6.metrics.rescaled_energy,
                    l1.metrics.p_optimal, l6.metrics.p_optimal});
  }
  const std::string path = std::string(FUNCQAOA_DATA_DIR) + "/func_gm_tsp4_baseline.json";
  if (g_freeze) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
      j.push_back({{"seed", r.seed}, {"energy_p1", r.e1}, {"energy_p6", r.e6},
                   {"rescaled_p1", r.r1}, {"rescaled_p6", r.r6},
                   {"p_optimal_p1", r.o1}, {"p_optimal_p6", r.o6}});
    std::ofstream(path) << j.dump(1) << '\n';
  } else {
    std::ifstream in(path);
    ck.expect(static_cast<bool>(in), "missing baseline " + path);
    if (in) {
      const auto j = nlohmann::json::parse(in);
      ck.expect(j.size() == rows.size(), "baseline size");
      for (std::size_t i = 0; i < std::min(j.size(), rows.size()); ++i) {
        const auto& b = j[i];
        const auto& r = rows[i];
        const double d = std::max({std::abs(b["energy_p1"].get<double>() - r.e1),
                                   std::abs(b["energy_p6"].get<double>() - r.e6),
                                   std::abs(b["rescaled_p6"].get<double>() - r.r6),
                                   std::abs(b["p_optimal_p6"].get<double>() - r.o6)});
        ck.expect(d < 1e-6, "drift from baseline on seed " + std::to_string(r.seed));
      }
    }
  }
  int improved = 0;
  double o1 = 0.0, o6 = 0.0;
  std::string worse;
  for (const auto& r : rows) {
    if (r.r6 < r.r1) ++improved;
    else worse += " " + std::to_string(r.seed) + "(" + fmt(r.r1, 4) + "->" + fmt(r.r6, 4) + ")";
    o1 += r.o1 / 10;
    o6 += r.o6 / 10;
  }
  ck.expect(improved == 10, "rescaled energy not lower at p=6 on seeds" + worse);
  ck.expect(o6 > o1, "mean p_optimal " + fmt(o1) + " -> " + fmt(o6));
  ck.note("rescaled energy lower on " + std::to_string(improved) + "/10, mean p_optimal " +
          fmt(o1, 4) + " -> " + fmt(o6, 4));
  if (!ck.outcome().pass) {
    // Keep the p_optimal figure visible next to the failing part.
    Outcome o = ck.outcome();
    o.detail += "; mean p_optimal " + fmt(o1, 4) + " -> " + fmt(o6, 4);
    return o;
  }
  return ck.outcome();
}

Outcome c8_shot_budgets() {
  Check ck;
  std::mt19937_64 rng(8);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 10;
    std::vector<double> d(std::size_t{1} << n);
    for (auto& v : d) v = nd(rng) * (1 + k % 7);
    double l1 = 0.0;
    for (double w : pauli_z_weights(d)) l1 += std::abs(w);
    ck.expect(diagonal_span(d) <= 2 * l1 + 1e-12, "span above 2 l1");
  }
  std::set<std::uint64_t> hoeff, pauli;
  for (int n = 2; n <= 10; ++n) {
    std::vector<double> d(std::size_t{1} << n, 0.0);
    d[0] = 1.0;
    hoeff.insert(hoeffding_shots(diagonal_span(d), 0.1, 0.05));
    pauli.insert(pauli_l1_shots(pauli_z_weights(d), 0.1));
  }
  ck.expect(hoeff.size() == 1, "Hoeffding budget changes with n");
  ck.note("Hoeffding budget " + std::to_string(*hoeff.begin()) + " for n=2..10; normalised l1 budget " +
          std::to_string(*pauli.begin()));
  return ck.outcome();
}

Outcome c9_lnn_bound() {
  Check ck;
  int circuits = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int K : {3, 4}) {
      const auto a = build_ansatz(VariantId::parse("maxkcut:x"),
                                  generate_instance({"maxkcut", n, K, 0, 1, 3}));
      const double lb = lnn_lower_bound(interaction_graph(a));
      const auto depth = tabulate(a, Coupling::LNN).report.depth;
      ck.expect(static_cast<double>(depth) >= lb, "maxkcut depth below bound");
      ++circuits;
    }
    if (n >= 3) {
      const auto a = build_ansatz(VariantId::parse("tsp:x"), generate_instance({"tsp", n, 3, 0, 1, 3}));
      const double lb = lnn_lower_bound(interaction_graph(a));
      const auto depth = tabulate(a, Coupling::LNN).report.depth;
      ck.expect(static_cast<double>(depth) >= lb, "tsp depth below bound");
      ++circuits;
    }
  }
  double lo = 1e9, hi = 0.0;
  for (int n = 4; n <= 8; ++n) {
    const auto g = interaction_graph(
        build_ansatz(VariantId::parse("tsp:x"), generate_instance({"tsp", n, 3, 0, 1, 1})));
    const double r = lnn_lower_bound(g) / (double(n) * n);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  ck.expect(lo > 0.2 && hi < 0.25, "TSP bound / n^2 outside [0.2, 0.25]");
  ck.note(std::to_string(circuits) + " LNN circuits above bound; TSP bound/n^2 in [" + fmt(lo, 3) +
          ", " + fmt(hi, 3) + "]");
  return ck.outcome();
}

Outcome c10_fuchs_fixing() {
  Check ck;
  std::string det;
  for (int K = 3; K <= 16; ++K) {
    const int m = ceil_log2(static_cast<std::uint64_t>(K));
    const long long r = (1LL << m) - (K - 1);
    const long long want = r * (r - 1);  // 2 C(r, 2)
    const auto a = build_ansatz(VariantId::parse("maxkcut:fuchs"),
                                generate_instance({"maxkcut", 2, K, 0, 1, 1}));
    Circuit c = a.plan->layout().clone_layout();
    a.plan->phase(c, Angle::param(gamma_ref(1)));
    long long fixing = 0;
    for (const auto& g : c.gates()) fixing += g.kind == GateKind::CRZ;
    ck.expect(fixing == want, "K=" + std::to_string(K) + " emits " + std::to_string(fixing));
    if ((K & (K - 1)) == 0) ck.expect(fixing == 0, "power of two with fixing");
    if (K == 5) det = "K=5: " + std::to_string(fixing);
  }
  ck.note(det + "; zero at K=4,8,16");
  return ck.outcome();
}

Outcome c11_set_cover() {
  Check ck;
  const SetCoverInstance inst{3, {{0}, {1, 2}, {1}, {0, 2}}};
  const auto a = build_ansatz(VariantId::parse("setcover:func-or"), inst);
  Circuit c = a.plan->layout().clone_layout();
  a.plan->phase(c, Angle::param(gamma_ref(1)));
  const Circuit d = decompose(c, Coupling::AllToAll);
  const double gamma = 0.29;
  const ParamValues pv{{gamma}, {0.0}};
  std::complex<double> ref0;
  double err = 0.0;
  for (Index x = 0; x < 16; ++x) {
    std::vector<int> sel;
    for (int i = 0; i < 4; ++i) sel.push_back(static_cast<int>((x >> i) & 1));
    const auto sc = setcover_penalty(inst, sel);
    const StateVector out = simulate_circuit<double>(d, basis_state(d.num_lines(), x), pv);
    // Remove the objective phase; what remains is the penalty phase.
    const std::complex<double> pen =
        out(static_cast<Eigen::Index>(x)) * std::polar(1.0, gamma * sc.cost);
    if (x == 0) ref0 = pen * std::polar(1.0, gamma * a.penalty * sc.uncovered);
    const std::complex<double> want = ref0 * std::polar(1.0, -gamma * a.penalty * sc.uncovered);
    err = std::max(err, std::abs(pen - want));
  }
  ck.expect(err < 1e-9, "penalty phase error " + fmt(err));
  ck.note("16 selections, A=" + fmt(a.penalty) + ", max error " + fmt(err, 2));
  return ck.outcome();
}

Outcome c12_accumulator() {
  Check ck;
  long long cases = 0;
  auto run = [&](const std::vector<long long>& coef, long long b) {
    const int n = static_cast<int>(coef.size());
    const int w = accumulator_width(coef, b);
    const RegisterSpan acc{"acc", range(n, w)};
    const Circuit c = signed_accumulator(coef, b, range(0, n), acc);
    for (Index y = 0; y < (Index{1} << n); ++y) {
      long long xi = b, lhs = 0;
      for (int i = 0; i < n; ++i)
        if ((y >> i) & 1) xi -= coef[static_cast<std::size_t>(i)], lhs += coef[static_cast<std::size_t>(i)];
      const Index out = testing::monomial_run(c, y, {}).first;
      const Index raw = register_value(out, acc.lines);
      const long long got = raw >= (Index{1} << (w - 1)) ? static_cast<long long>(raw) - (1LL << w)
                                                         : static_cast<long long>(raw);
      ck.expect((out & ((Index{1} << n) - 1)) == y, "inputs disturbed");
      ck.expect(got == xi, "accumulator value");
      ck.expect((((out >> acc.lines[0]) & 1) == 1) == (lhs > b), "sign bit vs violation");
      ++cases;
    }
  };
  // Every coefficient choice for one and two variables.
  for (long long b = -15; b <= 15; ++b)
    for (long long a0 = -15; a0 <= 15; ++a0) {
      run({a0}, b);
      for (long long a1 = -15; a1 <= 15; a1 += 2) run({a0, a1}, b);
    }
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long long> u(-15, 15);
  for (int n = 3; n <= 6; ++n)
    for (int t = 0; t < 300; ++t) {
      std::vector<long long> coef(static_cast<std::size_t>(n));
      for (auto& v : coef) v = u(rng);
      run(coef, u(rng));
    }
  ck.note(std::to_string(cases) + " (coefficients, assignment) cases");
  return ck.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--freeze") g_freeze = true;
  const std::pair<const char*, std::function<Outcome()>> crit[] = {
      {"state-prep angles K=14", c1_state_prep},
      {"swap-network exact counts", c2_swap_networks},
      {"circuit/semantic phase equivalence", c3_circuit_semantics},
      {"permutation parity oracle", c4_parity_oracle},
      {"resource scaling n=128", c5_resource_scaling},
      {"feasibility invariants", c6_feasibility},
      {"desk-scale optimisation trend", c7_optimisation},
      {"shot-budget relations", c8_shot_budgets},
      {"LNN lower bound consistency", c9_lnn_bound},
      {"Fuchs fixing-phase count", c10_fuchs_fixing},
      {"set-cover penalty gadget", c11_set_cover},
      {"ILP signed accumulator", c12_accumulator},
  };
  int failed = 0, idx = 0;
  for (const auto& [name, fn] : crit) {
    ++idx;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << idx << ": " << name << " ["
              << std::fixed << std::setprecision(2) << secs << " s] " << std::defaultfloat
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
