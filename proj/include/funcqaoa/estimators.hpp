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
#include <string>
#include <utility>
#include <vector>

#include "funcqaoa/ansatz.hpp"
#include "funcqaoa/qubo.hpp"

namespace fq {

/** ceil(delta^2 ln(2/p) / (2 eps^2)): samples for a single-variable mean. */
std::uint64_t hoeffding_shots(double delta, double eps, double p);

/** ceil(||w||_1^2 / eps^2): samples for term-wise Pauli estimation. */
std::uint64_t pauli_l1_shots(const std::vector<double>& weights, double eps);

/**
 * Coefficients of a diagonal operator on n qubits in the Pauli-Z basis,
 * diag = sum_S w_S Z^S, with w_S = 2^-n sum_x diag(x) (-1)^{|x & S|}.
 */
std::vector<double> pauli_z_weights(const std::vector<double>& diag);

/** max - min of a diagonal. */
double diagonal_span(const std::vector<double>& diag);

/** Analytic energy-span upper bound recorded on the ansatz. */
double span_bound(const VariantAnsatz& a);

/** Exact cost span over reachable basis states (feasible ones only if asked). */
double exact_span(const VariantAnsatz& a, bool feasible_only = false);

constexpr int kExactSpanMaxQubits = 24;

struct InteractionGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const;
  /** Eccentricity minimum by BFS from every vertex; throws if disconnected. */
  int radius() const;
};

InteractionGraph interaction_graph(const Ising& is, double eps = 1e-12);
/** The coupling graph of a QUBO-type ansatz; throws for other variants. */
InteractionGraph interaction_graph(const VariantAnsatz& a);

/** "complete:N", "path:N", "cycle:N" or "star:N". */
InteractionGraph parse_graph(const std::string& spec);

/** Depth lower bound (n - 1) / (2 r) - 1/2 for swap-based LNN circuits. */
double lnn_lower_bound(const InteractionGraph& g);

}  // namespace fq
