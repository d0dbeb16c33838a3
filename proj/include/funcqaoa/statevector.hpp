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

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "funcqaoa/circuit.hpp"

namespace fq {

template <typename Scalar>
using StateVectorT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
using StateVector = StateVectorT<double>;

/** Line q is bit q of the amplitude index. */
constexpr int kMaxSimQubits = 26;

using Index = std::uint64_t;

template <typename Scalar = double>
StateVectorT<Scalar> basis_state(int num_qubits, Index index) {
  if (num_qubits > kMaxSimQubits) throw CircuitError("qubit cap exceeded");
  StateVectorT<Scalar> v = StateVectorT<Scalar>::Zero(Index{1} << num_qubits);
  v(static_cast<Eigen::Index>(index)) = 1;
  return v;
}

/** Register value with lines[0] as the most significant bit. */
inline Index register_value(Index index, const std::vector<int>& lines) {
  Index v = 0;
  for (int l : lines) v = (v << 1) | ((index >> l) & 1);
  return v;
}

inline Index with_register(Index index, const std::vector<int>& lines,
                           Index value) {
  const int w = static_cast<int>(lines.size());
  for (int j = 0; j < w; ++j) {
    const Index bit = (value >> (w - 1 - j)) & 1;
    index = (index & ~(Index{1} << lines[j])) | (bit << lines[j]);
  }
  return index;
}

namespace detail {

template <typename Scalar, typename F>
void for_pairs(StateVectorT<Scalar>& psi, int q, Index ctrl_mask, F f) {
  const Index n = static_cast<Index>(psi.size());
  const Index bit = Index{1} << q;
  for (Index i = 0; i < n; ++i) {
    if (i & bit) continue;
    if ((i & ctrl_mask) != ctrl_mask) continue;
    f(psi(static_cast<Eigen::Index>(i)), psi(static_cast<Eigen::Index>(i | bit)));
  }
}

template <typename Scalar>
void apply_1q(StateVectorT<Scalar>& psi, int q, Index ctrl_mask,
              const Eigen::Matrix<std::complex<Scalar>, 2, 2>& m) {
  for_pairs<Scalar>(psi, q, ctrl_mask, [&](auto& a, auto& b) {
    const auto a0 = a, b0 = b;
    a = m(0, 0) * a0 + m(0, 1) * b0;
    b = m(1, 0) * a0 + m(1, 1) * b0;
  });
}

template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 2> matrix_1q(GateKind k, double theta) {
  using C = std::complex<Scalar>;
  Eigen::Matrix<C, 2, 2> m;
  const Scalar c = std::cos(theta / 2), s = std::sin(theta / 2);
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  switch (k) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::MCX:
      m << C(0), C(1), C(1), C(0);
      break;
    case GateKind::H:
    case GateKind::CH:
      m << C(r), C(r), C(r), C(-r);
      break;
    case GateKind::RY:
    case GateKind::CRY:
      m << C(c), C(-s), C(s), C(c);
      break;
    default:
      m << C(c, -s), C(0), C(0), C(c, s);
      break;
  }
  return m;
}

}  // namespace detail

/** Applies one gate (macro kinds included) to `psi` in place. */
template <typename Scalar>
void apply_gate(StateVectorT<Scalar>& psi, const Gate& g,
                const ParamValues& params) {
  const double theta = is_rotation(g.kind) ? params.value(g.angle) : 0.0;
  Index ctrl = 0;
  for (int i = 0; i < g.num_controls(); ++i) ctrl |= Index{1} << g.qubits[i];
  const int t = g.target();
  switch (g.kind) {
    case GateKind::SWAP: {
      const Index a = Index{1} << g.qubits[0], b = Index{1} << g.qubits[1];
      const Index n = static_cast<Index>(psi.size());
      for (Index i = 0; i < n; ++i)
        if ((i & a) && !(i & b))
          std::swap(psi(static_cast<Eigen::Index>(i)),
                    psi(static_cast<Eigen::Index>((i ^ a) | b)));
      return;
    }
    case GateKind::MCRZ: {
      // RZ(theta) on the target unless every control is set, then RZ(-theta).
      const Index tb = Index{1} << t;
      const std::complex<Scalar> lo(std::cos(theta / 2), -std::sin(theta / 2));
      const Index n = static_cast<Index>(psi.size());
      for (Index i = 0; i < n; ++i) {
        const bool all = (i & ctrl) == ctrl;
        const bool one = (i & tb) != 0;
        psi(static_cast<Eigen::Index>(i)) *= (all != one) ? std::conj(lo) : lo;
      }
      return;
    }
    default:
      detail::apply_1q<Scalar>(psi, t, ctrl,
                               detail::matrix_1q<Scalar>(g.kind, theta));
  }
}

template <typename Scalar = double>
StateVectorT<Scalar> simulate_circuit(const Circuit& c,
                                      const StateVectorT<Scalar>& input,
                                      const ParamValues& params = {}) {
  if (c.num_lines() > kMaxSimQubits) throw CircuitError("qubit cap exceeded");
  if (input.size() != (Eigen::Index{1} << c.num_lines()))
    throw CircuitError("state size does not match circuit lines");
  StateVectorT<Scalar> psi = input;
  for (const auto& g : c.gates()) apply_gate<Scalar>(psi, g, params);
  return psi;
}

/** Embeds a state over the low `q` lines into `total` lines (rest |0>). */
StateVector embed(const StateVector& low, int total);

/** Probability mass outside the zero pattern on `lines`. */
double leakage(const StateVector& psi, const std::vector<int>& lines);

/** Fidelity |<a|b>| for normalised states; insensitive to global phase. */
double overlap_abs(const StateVector& a, const StateVector& b);

}  // namespace fq
