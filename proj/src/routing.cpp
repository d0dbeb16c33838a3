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

#include "funcqaoa/routing.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace fq {

LinearLayout::LinearLayout(int num_lines, GateSink& out) : out_(out) {
  grow(num_lines);
}

void LinearLayout::grow(int num_lines) {
  for (int i = 0; i < num_lines; ++i) {
    const int l = size();
    pos_.push_back(l);
    at_.push_back(l);
  }
}

void LinearLayout::swap_phys(int p) {
  out_.swap(p, p + 1);
  note_swap(p);
}

void LinearLayout::note_swap(int p) {
  const int a = at_[p], b = at_[p + 1];
  std::swap(at_[p], at_[p + 1]);
  pos_[a] = p + 1;
  pos_[b] = p;
}

void LinearLayout::emit(const Gate& g) {
  Gate p = g;
  for (auto& q : p.qubits) q = pos_[q];
  p.scratch.clear();
  if (p.qubits.size() > 2) throw CircuitError("LNN emit needs 1- or 2-qubit gates");
  if (p.qubits.size() == 2 && std::abs(p.qubits[0] - p.qubits[1]) != 1)
    throw CircuitError("LNN emit with separated operands");
  out_.add(p);
}

void LinearLayout::move_next_to(int anchor, int mover) {
  while (true) {
    const int pa = pos_[anchor], pm = pos_[mover];
    if (pm > pa + 1) {
      swap_phys(pm - 1);
    } else if (pm < pa - 1) {
      swap_phys(pm);
    } else {
      return;
    }
  }
}

void LinearLayout::route(const Gate& g) {
  if (g.qubits.size() == 2) move_next_to(g.qubits[0], g.qubits[1]);
  emit(g);
}

namespace {

// Odd-even transposition sort of `key` over [lo, hi), emitting swaps.
template <class Key, class Swap>
void odd_even_sort(int lo, int hi, Key key, Swap do_swap) {
  auto sorted = [&] {
    for (int p = lo; p + 1 < hi; ++p)
      if (key(p) > key(p + 1)) return false;
    return true;
  };
  for (int round = 0; !sorted(); ++round)
    for (int p = lo + (round & 1); p + 1 < hi; p += 2)
      if (key(p) > key(p + 1)) do_swap(p);
}

}  // namespace

void LinearLayout::arrange(int lo, const std::vector<int>& order) {
  const int hi = lo + static_cast<int>(order.size());
  std::vector<int> rank(size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int p = pos_[order[i]];
    if (p < lo || p >= hi) throw CircuitError("arrange: qubit outside range");
    rank[order[i]] = static_cast<int>(i);
  }
  odd_even_sort(
      lo, hi, [&](int p) { return rank[at_[p]]; },
      [&](int p) { swap_phys(p); });
}

void LinearLayout::restore() {
  odd_even_sort(
      0, size(), [&](int p) { return at_[p]; }, [&](int p) { swap_phys(p); });
}

void RoutingSink::add(const Gate& g) {
  if (g.qubits.size() > 2) {
    throw CircuitError(std::string("route needs lowered gates, got ") +
                       kind_name(g.kind));
  }
  for (int q : g.qubits)
    if (q >= layout_.size()) layout_.grow(q + 1 - layout_.size());
  layout_.route(g);
}

Circuit route_linear(const Circuit& logical) {
  Circuit out = logical.clone_layout();
  int fresh = 0;
  for (const auto& g : logical.gates())
    if (scratch_needed(g) > static_cast<int>(g.scratch.size()))
      fresh = std::max(fresh, scratch_needed(g));
  const int base = out.num_lines();
  for (int i = 0; i < fresh; ++i)
    out.mark_ancilla(out.add_line("pool_" + std::to_string(i)));
  LinearLayout layout(out.num_lines(), out);
  RoutingSink router(layout);
  Lowering low(router, base);
  for (const auto& g : logical.gates()) low.add(g);
  layout.restore();
  return out;
}

}  // namespace fq
