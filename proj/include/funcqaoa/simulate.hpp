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

#include <memory>
#include <vector>

#include "funcqaoa/ansatz.hpp"
#include "funcqaoa/semantic.hpp"
#include "funcqaoa/statevector.hpp"

namespace fq {

/**
 * Tabulated form of a variant for state-vector work: cost and feasibility
 * per basis state, the initial state and the mixer.
 */
struct SemanticModel {
  int num_qubits = 0;
  /** Basis states in simulation order; empty means all 2^num_qubits. */
  std::vector<Index> basis;
  std::vector<double> cost;
  std::vector<char> feasible;
  StateVector initial;
  MixerModel mixer;
  std::shared_ptr<const MixerOp> mixer_op;
  /** Extremes of the cost over feasible basis states. */
  double e_min = 0.0;
  double e_max = 0.0;
  bool any_feasible = false;

  Index dim() const { return static_cast<Index>(cost.size()); }
  Index basis_index(Index i) const { return basis.empty() ? i : basis[i]; }
};

SemanticModel prepare_semantic(const VariantAnsatz& a);

/** gamma[l], beta[l] for layers l = 0 .. p-1. */
StateVector run_qaoa(const SemanticModel& m, const std::vector<double>& gamma,
                     const std::vector<double>& beta);

double energy(const SemanticModel& m, const StateVector& psi);

struct EvalMetrics {
  double energy = 0.0;
  double p_feasible = 0.0;
  double p_optimal = 0.0;
  /** <(H - E_min) / (E_max - E_min)> over the normalised feasible part;
   *  1 when no feasible mass, 0 when the span vanishes. */
  double rescaled_energy = 1.0;
};

EvalMetrics evaluate(const SemanticModel& m, const StateVector& psi);

}  // namespace fq
