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

#include <complex>
#include <random>
#include <utility>

#include "funcqaoa/statevector.hpp"

namespace fq::testing {

inline StateVector random_state(int q, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  StateVector v(Eigen::Index{1} << q);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {nd(rng), nd(rng)};
  return v / v.norm();
}

/** Max deviation after rotating `b` onto the phase of `a` at its largest entry. */
inline double phase_aligned_diff(const StateVector& a, const StateVector& b) {
  Eigen::Index k = 0;
  a.cwiseAbs().maxCoeff(&k);
  if (std::abs(b(k)) < 1e-14) return (a - b).cwiseAbs().maxCoeff();
  const std::complex<double> ph = a(k) / b(k) * std::abs(b(k)) / std::abs(a(k));
  return (a - ph * b).cwiseAbs().maxCoeff();
}

/** Basis index -> amplitudes, on a circuit of `lines` lines. */
inline StateVector run_basis(const Circuit& c, Index in,
                             const ParamValues& p = {}) {
  return simulate_circuit<double>(c, basis_state(c.num_lines(), in), p);
}

/** The single index carrying the whole mass, or -1. */
inline long long classical_output(const StateVector& v, double tol = 1e-9) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(std::abs(v(i)) - 1.0) < tol) return i;
  return -1;
}

/**
 * Runs a basis state through a circuit built from gates that map basis
 * states to phased basis states (X, CNOT, MCX, SWAP, RZ, CRZ, MCRZ).
 */
inline std::pair<Index, std::complex<double>> monomial_run(const Circuit& c, Index x,
                                                           const ParamValues& p) {
  std::complex<double> ph = 1.0;
  for (const auto& g : c.gates()) {
    bool ctrl = true;
    for (int i = 0; i < g.num_controls(); ++i) ctrl = ctrl && ((x >> g.qubits[i]) & 1);
    const int t = g.target();
    const bool one = (x >> t) & 1;
    const double th = is_rotation(g.kind) ? p.value(g.angle) : 0.0;
    const auto rz = [&](bool up) { return std::polar(1.0, up ? th / 2 : -th / 2); };
    switch (g.kind) {
      case GateKind::X: x ^= Index{1} << t; break;
      case GateKind::CNOT:
      case GateKind::MCX:
        if (ctrl) x ^= Index{1} << t;
        break;
      case GateKind::SWAP: {
        const Index a = (x >> g.qubits[0]) & 1, b = (x >> g.qubits[1]) & 1;
        if (a != b) x ^= (Index{1} << g.qubits[0]) | (Index{1} << g.qubits[1]);
        break;
      }
      case GateKind::RZ: ph *= rz(one); break;
      case GateKind::CRZ:
        if (ctrl) ph *= rz(one);
        break;
      case GateKind::MCRZ: ph *= rz(ctrl != one); break;
      default: throw CircuitError("gate is not monomial");
    }
  }
  return {x, ph};
}

}  // namespace fq::testing
