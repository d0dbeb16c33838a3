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

#include <vector>

#include "funcqaoa/circuit.hpp"

namespace fq {

/**
 * Tracks which logical qubit sits on which physical line of a linear array
 * and emits physical gates. SWAPs exchange neighbouring physical lines.
 */
class LinearLayout {
 public:
  LinearLayout(int num_lines, GateSink& out);

  int size() const { return static_cast<int>(pos_.size()); }
  int phys(int logical) const { return pos_[logical]; }
  int logical_at(int p) const { return at_[p]; }

  /** Adds lines on the right end of the array. */
  void grow(int num_lines);

  void swap_phys(int p);
  /** Records a swap of lines p, p+1 whose gates the caller already emitted. */
  void note_swap(int p);
  /** Emits `g` given in logical indices; two-qubit operands must touch. */
  void emit(const Gate& g);
  /** Brings two-qubit operands together with SWAPs, then emits. */
  void route(const Gate& g);
  void move_next_to(int anchor, int mover);
  /** Places `order` (logical qubits) on lines lo, lo+1, ... using only
   * swaps inside [lo, lo + order.size()). */
  void arrange(int lo, const std::vector<int>& order);
  /** Returns every logical qubit to its home line. */
  void restore();

 private:
  GateSink& out_;
  std::vector<int> pos_;
  std::vector<int> at_;
};

/** Sink adapter: routes each incoming one- or two-qubit gate. */
class RoutingSink : public GateSink {
 public:
  explicit RoutingSink(LinearLayout& layout) : layout_(layout) {}
  void add(const Gate& g) override;

 private:
  LinearLayout& layout_;
};

/**
 * Lowers `logical` (macro gates allowed) and routes it onto a linear array,
 * restoring the initial placement at the end.
 */
Circuit route_linear(const Circuit& logical);

}  // namespace fq
