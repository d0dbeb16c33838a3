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

#include "funcqaoa/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fq {

std::uint64_t Qubo::key(int i, int j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

void Qubo::add_quad(int i, int j, double c) {
  if (i == j) {
    add_linear(i, c);
    return;
  }
  if (i < 0 || j < 0 || i >= size() || j >= size())
    throw CircuitError("qubo variable out of range");
  quad_[key(i, j)] += c;
}

void Qubo::add_square(const std::vector<std::pair<int, double>>& terms,
                      double constant, double weight) {
  std::map<int, double> t;
  for (const auto& [v, c] : terms) t[v] += c;
  offset_ += weight * constant * constant;
  for (auto it = t.begin(); it != t.end(); ++it) {
    const auto [v, c] = *it;
    add_linear(v, weight * (2.0 * constant * c + c * c));
    for (auto jt = std::next(it); jt != t.end(); ++jt)
      add_quad(v, jt->first, 2.0 * weight * c * jt->second);
  }
}

double Qubo::value(Index x) const {
  double e = offset_;
  for (int i = 0; i < size(); ++i)
    if ((x >> i) & 1) e += lin_[static_cast<std::size_t>(i)];
  for (const auto& [k, c] : quad_) {
    const int i = static_cast<int>(k >> 32), j = static_cast<int>(k & 0xffffffffu);
    if (((x >> i) & 1) && ((x >> j) & 1)) e += c;
  }
  return e;
}

Ising to_ising(const Qubo& q, double eps) {
  Ising is;
  is.n = q.size();
  is.h.assign(static_cast<std::size_t>(is.n), 0.0);
  is.offset = q.offset();
  for (int i = 0; i < is.n; ++i) {
    const double c = q.linear()[static_cast<std::size_t>(i)];
    is.offset += c / 2;
    is.h[static_cast<std::size_t>(i)] -= c / 2;
  }
  for (const auto& [k, c] : q.quad()) {
    const int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
    is.offset += c / 4;
    is.h[static_cast<std::size_t>(a)] -= c / 4;
    is.h[static_cast<std::size_t>(b)] -= c / 4;
    if (std::abs(c) > eps) is.couplings.push_back({a, b, c / 4});
  }
  for (auto& h : is.h)
    if (std::abs(h) <= eps) h = 0.0;
  std::sort(is.couplings.begin(), is.couplings.end(),
            [](const IsingCoupling& x, const IsingCoupling& y) {
              return std::pair(x.a, x.b) < std::pair(y.a, y.b);
            });
  return is;
}

void emit_ising(GateSink& out, const Ising& is, Angle gamma) {
  for (int q = 0; q < is.n; ++q) {
    const double h = is.h[static_cast<std::size_t>(q)];
    if (h != 0.0) out.rz(q, gamma.scaled(2.0 * h));
  }
  // (a + b) mod n' with n' odd is a proper edge colouring of K_n.
  const int np = is.n % 2 ? is.n : is.n + 1;
  std::vector<IsingCoupling> order = is.couplings;
  std::stable_sort(order.begin(), order.end(),
                   [np](const IsingCoupling& x, const IsingCoupling& y) {
                     return (x.a + x.b) % np < (y.a + y.b) % np;
                   });
  for (const auto& c : order) {
    out.cnot(c.a, c.b);
    out.rz(c.b, gamma.scaled(2.0 * c.j));
    out.cnot(c.a, c.b);
  }
}

void emit_ising_lnn(LinearLayout& layout, const Ising& is, Angle gamma) {
  for (int q = 0; q < is.n; ++q) {
    const double h = is.h[static_cast<std::size_t>(q)];
    if (h == 0.0) continue;
    Gate g{GateKind::RZ, {q}, {}, gamma.scaled(2.0 * h)};
    layout.emit(g);
  }
  std::unordered_map<std::uint64_t, double> pending;
  pending.reserve(is.couplings.size());
  for (const auto& c : is.couplings) pending[Qubo::key(c.a, c.b)] = c.j;
  for (int q = 0; q < is.n; ++q)
    if (layout.phys(q) >= is.n) throw CircuitError("ising lines not in [0, n)");
  for (int round = 0; !pending.empty(); ++round) {
    if (round > is.n) throw CircuitError("swap network did not cover couplings");
    for (int p = round & 1; p + 1 < is.n; p += 2) {
      const int a = layout.logical_at(p), b = layout.logical_at(p + 1);
      const auto it = pending.find(Qubo::key(a, b));
      if (it == pending.end()) {
        layout.swap_phys(p);
        continue;
      }
      // ZZ rotation followed by SWAP; one CNOT pair cancels.
      layout.emit({GateKind::CNOT, {a, b}, {}, {}});
      layout.emit({GateKind::RZ, {b}, {}, gamma.scaled(2.0 * it->second)});
      layout.emit({GateKind::CNOT, {b, a}, {}, {}});
      layout.emit({GateKind::CNOT, {a, b}, {}, {}});
      layout.note_swap(p);
      pending.erase(it);
    }
  }
}

}  // namespace fq
