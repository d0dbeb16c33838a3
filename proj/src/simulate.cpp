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

#include "funcqaoa/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fq {

SemanticModel prepare_semantic(const VariantAnsatz& a) {
  SemanticModel m;
  m.num_qubits = a.state_qubits;
  if (a.restricted_basis) {
    m.basis = a.basis();
  } else if (a.state_qubits > kMaxSimQubits) {
    throw CircuitError("state qubits exceed simulation cap");
  }
  const Index dim = a.restricted_basis ? static_cast<Index>(m.basis.size())
                                       : Index{1} << a.state_qubits;
  m.cost.resize(dim);
  m.feasible.resize(dim);
  m.initial = StateVector::Zero(static_cast<Eigen::Index>(dim));
  m.e_min = std::numeric_limits<double>::infinity();
  m.e_max = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < dim; ++i) {
    const Index x = m.basis_index(i);
    m.cost[i] = a.cost(x);
    m.feasible[i] = a.feasible(x);
    m.initial(static_cast<Eigen::Index>(i)) = a.initial_amplitude(x);
    if (m.feasible[i]) {
      m.any_feasible = true;
      m.e_min = std::min(m.e_min, m.cost[i]);
      m.e_max = std::max(m.e_max, m.cost[i]);
    }
  }
  m.initial.normalize();
  m.mixer = a.mixer;
  if (m.mixer.kind == MixerKind::GroverGlobal) m.mixer.s = m.initial;
  else if (a.restricted_basis)
    throw CircuitError("restricted basis needs a global Grover mixer");
  m.mixer_op = std::make_shared<MixerOp>(m.mixer, m.num_qubits);
  return m;
}

StateVector run_qaoa(const SemanticModel& m, const std::vector<double>& gamma,
                     const std::vector<double>& beta) {
  if (gamma.size() != beta.size()) throw CircuitError("gamma/beta length mismatch");
  StateVector psi = m.initial;
  for (std::size_t l = 0; l < gamma.size(); ++l) {
    apply_diagonal(psi, m.cost, gamma[l]);
    m.mixer_op->apply(psi, beta[l]);
  }
  return psi;
}

double energy(const SemanticModel& m, const StateVector& psi) {
  double e = 0;
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    e += std::norm(psi(i)) * m.cost[static_cast<std::size_t>(i)];
  return e;
}

EvalMetrics evaluate(const SemanticModel& m, const StateVector& psi) {
  EvalMetrics r;
  double pf = 0, po = 0, acc = 0;
  const double span = m.e_max - m.e_min;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const double p = std::norm(psi(i));
    const auto k = static_cast<std::size_t>(i);
    r.energy += p * m.cost[k];
    if (!m.feasible[k]) continue;
    pf += p;
    if (m.cost[k] <= m.e_min + kTieTol) po += p;
    if (span > kTieTol) acc += p * (m.cost[k] - m.e_min) / span;
  }
  r.p_feasible = std::clamp(pf, 0.0, 1.0);
  r.p_optimal = std::clamp(po, 0.0, 1.0);
  if (pf > 0) r.rescaled_energy = span > kTieTol ? std::clamp(acc / pf, 0.0, 1.0) : 0.0;
  return r;
}

}  // namespace fq
