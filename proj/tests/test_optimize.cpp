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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <fstream>
#include <random>

#include "funcqaoa/optimize.hpp"

namespace fq {
namespace {

TspInstance tsp(int n, std::uint64_t seed) {
  return std::get<TspInstance>(generate_instance({"tsp", n, 3, 0, 1, seed}));
}

SemanticModel model(const std::string& v, const Instance& inst) {
  return prepare_semantic(build_ansatz(VariantId::parse(v), inst));
}

OptimizerConfig small_cfg(int max_p) {
  OptimizerConfig c;
  c.max_p = max_p;
  c.seed = 7;
  return c;
}

TEST(OptimizeTest, RejectsNonPositiveTolerance) {
  OptimizerConfig c;
  c.g_tol = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(OptimizeTest, ZeroLevelsGiveEmptyTrace) {
  const auto m = model("tsp:func-gm", tsp(3, 1));
  EXPECT_TRUE(optimize_layerwise(m, small_cfg(0)).levels.empty());
}

TEST(OptimizeTest, UniformFuncTspEnergyIsCostMean) {
  const auto inst = tsp(4, 2);
  const auto a = build_ansatz(VariantId::parse("tsp:func-com"), inst);
  const auto m = prepare_semantic(a);
  // n = 4 uses every pattern of the 8 state lines.
  double mean = 0.0;
  for (Index x = 0; x < 256; ++x) mean += a.cost(x);
  mean /= 256.0;
  EXPECT_NEAR(energy(m, std::vector<double>{}), mean, 1e-9);
  EXPECT_NEAR(energy(m, std::vector<double>{0.0, 0.0, 0.0, 0.0}), mean, 1e-9);
}

TEST(OptimizeTest, FeasibleAnsatzEnergyAboveOptimum) {
  const auto inst = tsp(4, 3);
  const auto m = model("tsp:gm", inst);
  const double opt = brute_force(inst).value;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  for (int k = 0; k < 50; ++k)
    EXPECT_GE(energy(m, std::vector<double>{u(rng), u(rng), u(rng), u(rng)}), opt - 1e-9);
}

TEST(OptimizeTest, ConstantCostHasZeroGradient) {
  TspInstance inst;
  inst.n = 4;
  inst.W = Eigen::MatrixXd::Constant(4, 4, 3.0);
  inst.W.diagonal().setZero();
  const auto m = model("tsp:gm", inst);
  for (double g : gradient(m, std::vector<double>{0.3, 1.1, 2.0, 0.7})) EXPECT_NEAR(g, 0.0, 1e-6);
}

TEST(OptimizeTest, GradientVanishesAtGridMinimum) {
  const auto m = model("tsp:gm", tsp(4, 4));
  const int N = 400;
  const double step = 2 * std::numbers::pi / N;
  std::vector<double> best{0.0, 0.0};
  double fbest = energy(m, best);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const std::vector<double> x{i * step, j * step};
      const double f = energy(m, x);
      if (f < fbest) fbest = f, best = x;
    }
  OptimizerConfig c;
  c.g_tol = 1e-6;
  c.x_tol = c.f_tol = 1e-14;
  const auto r = lbfgs([&](const auto& x) { return energy(m, x); },
                       [&](const auto& x) { return gradient(m, x); }, best, c);
  EXPECT_LE(r.f, fbest + 1e-12);
  EXPECT_LT(std::hypot(gradient(m, r.x)[0], gradient(m, r.x)[1]), 1e-3);
  EXPECT_LT(std::abs(r.x[0] - best[0]), 2 * step);
}

TEST(OptimizeTest, LbfgsSolvesRosenbrock) {
  auto f = [](const std::vector<double>& x) {
    return std::pow(1 - x[0], 2) + 100 * std::pow(x[1] - x[0] * x[0], 2);
  };
  auto g = [](const std::vector<double>& x) {
    return std::vector<double>{-2 * (1 - x[0]) - 400 * x[0] * (x[1] - x[0] * x[0]),
                               200 * (x[1] - x[0] * x[0])};
  };
  OptimizerConfig c;
  c.x_tol = c.f_tol = 1e-14;
  c.g_tol = 1e-8;
  const auto r = lbfgs(f, g, {-1.2, 1.0}, c);
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], 1.0, 1e-5);
}

TEST(OptimizeTest, TraceInvariants) {
  const auto m = model("tsp:func-gm", tsp(3, 5));
  const auto cfg = small_cfg(7);
  const Trace t = optimize_layerwise(m, cfg, "tsp:func-gm");
  ASSERT_EQ(t.levels.size(), 7u);
  const ParamDomain d = param_domain(m);
  EXPECT_DOUBLE_EQ(d.gamma_period, 2 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(d.beta_period, 2 * std::numbers::pi);
  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    const auto& l = t.levels[i];
    EXPECT_EQ(l.p, static_cast<int>(i) + 1);
    ASSERT_EQ(l.gamma.size(), i + 1);
    for (double v : l.gamma) EXPECT_TRUE(v >= 0.0 && v < d.gamma_period);
    for (double v : l.beta) EXPECT_TRUE(v >= 0.0 && v < d.beta_period);
    if (i > 0) EXPECT_LE(l.energy, t.levels[i - 1].energy + cfg.f_tol);
    // Best is the first minimum over restarts.
    for (const auto& r : l.runs) {
      EXPECT_GE(r.energy, l.energy);
      if (r.restart < l.restart) EXPECT_GT(r.energy, l.energy);
      for (double v : {r.metrics.p_feasible, r.metrics.p_optimal, r.metrics.rescaled_energy})
        EXPECT_TRUE(v >= -1e-12 && v <= 1 + 1e-12);
    }
    EXPECT_NEAR(energy(m, [&] {
                  auto x = l.gamma;
                  x.insert(x.end(), l.beta.begin(), l.beta.end());
                  return x;
                }()),
                l.energy, 1e-9);
    const std::string want = i + 1 <= 5 ? "fresh" : "warm";
    EXPECT_EQ(l.runs.front().start, want);
    EXPECT_EQ(l.runs.size(), i == 0 ? 5u : 6u);
  }
}

TEST(OptimizeTest, DeterministicAcrossWorkerCounts) {
  const auto m = model("maxkcut:func", std::get<MaxKCutInstance>(
                                           generate_instance({"maxkcut", 3, 3, 0, 1, 9})));
  auto c = small_cfg(3);
  c.workers = 1;
  const auto a = trace_to_json(optimize_layerwise(m, c)).dump();
  c.workers = 4;
  EXPECT_EQ(a, trace_to_json(optimize_layerwise(m, c)).dump());
  c.seed = 8;
  EXPECT_NE(a, trace_to_json(optimize_layerwise(m, c)).dump());
}

TEST(OptimizeTest, XMixerDomainAndIrrationalCosts) {
  MaxKCutInstance inst;
  inst.n = 3;
  inst.K = 3;
  inst.W = Eigen::MatrixXd::Constant(3, 3, 0.37);
  inst.W.diagonal().setZero();
  const auto m = model("maxkcut:x", inst);
  const ParamDomain d = param_domain(m);
  EXPECT_EQ(d.gamma_period, 0.0);
  EXPECT_DOUBLE_EQ(d.beta_period, std::numbers::pi);
  const auto xy = param_domain(model("maxkcut:xy", inst));
  EXPECT_EQ(xy.beta_period, 0.0);
}

TEST(OptimizeTest, JsonAndCsv) {
  const auto m = model("tsp:func-gm", tsp(3, 6));
  const Trace t = optimize_layerwise(m, small_cfg(2), "tsp:func-gm");
  const Trace back = trace_from_json(nlohmann::json::parse(trace_to_json(t).dump()));
  EXPECT_EQ(trace_to_json(back), trace_to_json(t));
  const std::string csv = trace_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "level,energy,p_feasible,p_optimal,rescaled_energy");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(OptimizeTest, FrozenFuncTspBaseline) {
  std::ifstream in(std::string(FUNCQAOA_DATA_DIR) + "/func_gm_tsp4_baseline.json");
  ASSERT_TRUE(in);
  const auto base = nlohmann::json::parse(in);
  ASSERT_EQ(base.size(), 10u);
  int better = 0;
  for (const auto& r : base)
    better += r["p_optimal_p6"].get<double>() > r["p_optimal_p1"].get<double>();
  EXPECT_GE(better, 8);
  // Replay the first instance and compare with the frozen numbers.
  const auto& r = base[0];
  const auto s = r["seed"].get<std::uint64_t>();
  const auto m = model("tsp:func-gm", tsp(4, s));
  OptimizerConfig c;
  c.max_p = 6;
  c.seed = 1 + s;
  const Trace t = optimize_layerwise(m, c);
  EXPECT_NEAR(t.levels.front().energy, r["energy_p1"].get<double>(), 1e-9);
  EXPECT_NEAR(t.levels.back().energy, r["energy_p6"].get<double>(), 1e-9);
  EXPECT_NEAR(t.levels.back().metrics.p_optimal, r["p_optimal_p6"].get<double>(), 1e-9);
}

}  // namespace
}  // namespace fq
