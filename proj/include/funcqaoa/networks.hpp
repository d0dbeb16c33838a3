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

#include <functional>
#include <vector>

#include "funcqaoa/circuit.hpp"
#include "funcqaoa/routing.hpp"

namespace fq {

/**
 * Lowers logical gates and routes them greedily on `layout`. Macro gates
 * short of explicit scratch draw fresh lines grown at the right end.
 */
class GreedyRouter : public GateSink {
 public:
  explicit GreedyRouter(LinearLayout& layout)
      : sink_(layout), low_(sink_, layout.size()) {}
  void add(const Gate& g) override { low_.add(g); }

 private:
  RoutingSink sink_;
  Lowering low_;
};

using PairWanted = std::function<bool(int, int)>;
using PairOp = std::function<void(int, int, GateSink&)>;

/**
 * Register-level swap network. Physical lines [lo, lo + n*m + |work|) must
 * hold exactly the register lines and the workspace. Odd-even transposition
 * rounds exchange neighbouring registers; when a wanted pair (i, j) meets,
 * the workspace is walked in between and `op(i, j, sink)` is routed inside
 * the window [R_i W R_j]. Each wanted pair is visited once; the network
 * stops early when none are left.
 */
void run_register_network(LinearLayout& layout, int lo,
                          const std::vector<std::vector<int>>& regs,
                          const std::vector<int>& work, const PairWanted& wanted,
                          const PairOp& op);

}  // namespace fq
