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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "funcqaoa/simulate.hpp"

namespace fq {

struct OptimizerConfig {
  int restarts = 5;
  double x_tol = 1e-5;
  double g_tol = 1e-5;
  double f_tol = 1e-5;
  int max_p = 6;
  std::uint64_t seed = 1;
  /** Levels up to this one start fresh; later ones warm start. */
  int fresh_levels = 5;
  double fd_step = 1e-6;
  int max_iter = 1000;
  int memory = 10;
  /** 0 means worker_count(). */
  int workers = 0;

  void validate() const;
};

/**
 * Periods of the angle coordinates; 0 means the coordinate is not periodic
 * and is left unwrapped. `*_init` is the interval random starts draw from.
 */
struct ParamDomain {
  double gamma_period = 0.0;
  double beta_period = 0.0;
  double gamma_init = 0.0;
  double beta_init = 0.0;
};

ParamDomain param_domain(const SemanticModel& m);

/** Params are laid out as gamma_0..gamma_{p-1}, beta_0..beta_{p-1}. */
double energy(const SemanticModel& m, const std::vector<double>& params);

std::vector<double> gradient(const SemanticModel& m,
                             const std::vector<double>& params, double h = 1e-6);

struct MinimizeResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  std::string stop;
};

using Objective = std::function<double(const std::vector<double>&)>;
using GradientFn = std::function<std::vector<double>(const std::vector<double>&)>;
using WrapFn = std::function<void(std::vector<double>&)>;

/** L-BFGS with a strong-Wolfe line search; `wrap` runs after every step. */
MinimizeResult lbfgs(const Objective& f, const GradientFn& g, std::vector<double> x0,
                     const OptimizerConfig& cfg, const WrapFn& wrap = {});

struct RestartRecord {
  int restart = 0;
  double energy = 0.0;
  EvalMetrics metrics;
  int iterations = 0;
  /** "fresh", "warm" or "pad". */
  std::string start;
};

struct LevelRecord {
  int p = 0;
  std::vector<double> gamma;
  std::vector<double> beta;
  double energy = 0.0;
  EvalMetrics metrics;
  int restart = 0;
  int iterations = 0;
  std::vector<RestartRecord> runs;
};

struct Trace {
  std::string variant;
  std::vector<LevelRecord> levels;
};

Trace optimize_layerwise(const SemanticModel& m, const OptimizerConfig& cfg,
                         const std::string& variant = "");

nlohmann::json trace_to_json(const Trace& t);
Trace trace_from_json(const nlohmann::json& j);

/** Header plus one row per level: level,energy,p_feasible,p_optimal,rescaled_energy. */
std::string trace_csv(const Trace& t);

}  // namespace fq
