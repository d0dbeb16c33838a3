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

#include "funcqaoa/semantic.hpp"

#include <cmath>
#include <complex>

namespace fq {

const char* mixer_name(MixerKind k) {
  switch (k) {
    case MixerKind::PerQubitX: return "x";
    case MixerKind::GroverGlobal: return "grover";
    case MixerKind::GroverPerRegister: return "grover-per-register";
    case MixerKind::RingXYPerRegister: return "ring-xy";
    case MixerKind::OneHotXY: return "onehot-xy";
  }
  return "?";
}

void apply_diagonal(StateVector& psi, const std::vector<double>& cost,
                    double gamma) {
  if (static_cast<std::size_t>(psi.size()) != cost.size())
    throw CircuitError("diagonal size mismatch");
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    psi(i) *= std::polar(1.0, -gamma * cost[static_cast<std::size_t>(i)]);
}

Eigen::MatrixXd xy_hamiltonian(int k, bool ring) {
  const Index dim = Index{1} << k;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  auto hop = [&](int a, int b) {
    for (Index x = 0; x < dim; ++x)
      if (((x >> a) & 1) != ((x >> b) & 1))
        h(x, x ^ ((Index{1} << a) | (Index{1} << b))) += 1.0;
  };
  if (ring) {
    for (int a = 0; a + 1 < k; ++a) hop(a, a + 1);
    if (k > 2) hop(k - 1, 0);
  } else {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) hop(a, b);
  }
  return h;
}

namespace {

Eigen::MatrixXd cycle_adjacency(Index v) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(v, v);
  if (v == 2) {
    a(0, 1) = a(1, 0) = 1;
  } else if (v > 2) {
    for (Index i = 0; i < v; ++i) {
      a(i, (i + 1) % v) = 1;
      a((i + 1) % v, i) = 1;
    }
  }
  return a;
}

}  // namespace

MixerOp::MixerOp(const MixerModel& model, int num_qubits)
    : m_(model), q_(num_qubits) {
  if (m_.kind != MixerKind::RingXYPerRegister && m_.kind != MixerKind::OneHotXY)
    return;
  for (const auto& lines : m_.registers) {
    Block b;
    b.lines = lines;
    const int w = static_cast<int>(lines.size());
    Eigen::MatrixXd h;
    Index n = 0;
    if (m_.kind == MixerKind::OneHotXY) {
      n = Index{1} << w;
      h = xy_hamiltonian(w, m_.ring);
      // xy_hamiltonian indexes bit i as line i of the block.
      for (Index v = 0; v < n; ++v) {
        Index off = 0;
        for (int i = 0; i < w; ++i)
          if ((v >> i) & 1) off |= Index{1} << lines[i];
        b.offsets.push_back(off);
      }
    } else {
      n = m_.valid;
      h = cycle_adjacency(n);
      for (Index v = 0; v < n; ++v) b.offsets.push_back(with_register(0, lines, v));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    b.vecs = es.eigenvectors();
    b.vals = es.eigenvalues();
    blocks_.push_back(std::move(b));
  }
}

void MixerOp::apply_block(StateVector& psi, const Block& b, double beta) const {
  Index mask = 0;
  for (int l : b.lines) mask |= Index{1} << l;
  const Eigen::Index n = static_cast<Eigen::Index>(b.offsets.size());
  Eigen::VectorXcd phase(n);
  for (Eigen::Index i = 0; i < n; ++i) phase(i) = std::polar(1.0, -beta * b.vals(i));
  const Eigen::MatrixXcd u =
      b.vecs.cast<std::complex<double>>() * phase.asDiagonal() *
      b.vecs.transpose().cast<std::complex<double>>();
  Eigen::VectorXcd a(n);
  const Index dim = static_cast<Index>(psi.size());
  for (Index base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (Eigen::Index i = 0; i < n; ++i) a(i) = psi(base | b.offsets[i]);
    a = u * a;
    for (Eigen::Index i = 0; i < n; ++i) psi(base | b.offsets[i]) = a(i);
  }
}

void MixerOp::apply(StateVector& psi, double beta) const {
  using C = std::complex<double>;
  const C fac = std::polar(1.0, -beta) - 1.0;
  switch (m_.kind) {
    case MixerKind::PerQubitX: {
      Eigen::Matrix2cd u;
      u << C(std::cos(beta)), C(0, -std::sin(beta)), C(0, -std::sin(beta)),
          C(std::cos(beta));
      if (m_.registers.empty()) {
        for (int q = 0; q < q_; ++q) detail::apply_1q<double>(psi, q, 0, u);
      } else {
        for (const auto& r : m_.registers)
          for (int q : r) detail::apply_1q<double>(psi, q, 0, u);
      }
      return;
    }
    case MixerKind::GroverGlobal: {
      if (m_.s.size() != psi.size()) throw CircuitError("grover state size mismatch");
      const C ov = m_.s.dot(psi);
      psi += (fac * ov) * m_.s;
      return;
    }
    case MixerKind::GroverPerRegister: {
      const double inv = 1.0 / static_cast<double>(m_.valid);
      const Index dim = static_cast<Index>(psi.size());
      for (const auto& lines : m_.registers) {
        Index mask = 0;
        std::vector<Index> off;
        for (int l : lines) mask |= Index{1} << l;
        for (Index v = 0; v < m_.valid; ++v) off.push_back(with_register(0, lines, v));
        for (Index base = 0; base < dim; ++base) {
          if (base & mask) continue;
          C sum = 0;
          for (Index o : off) sum += psi(base | o);
          const C d = fac * sum * inv;
          for (Index o : off) psi(base | o) += d;
        }
      }
      return;
    }
    case MixerKind::RingXYPerRegister:
    case MixerKind::OneHotXY:
      for (const auto& b : blocks_) apply_block(psi, b, beta);
      return;
  }
}

void apply_mixer(StateVector& psi, const MixerModel& model, int num_qubits,
                 double beta) {
  MixerOp(model, num_qubits).apply(psi, beta);
}

}  // namespace fq
