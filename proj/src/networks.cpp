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

#include "funcqaoa/networks.hpp"

#include <algorithm>

namespace fq {

void run_register_network(LinearLayout& layout, int lo,
                          const std::vector<std::vector<int>>& regs,
                          const std::vector<int>& work, const PairWanted& wanted,
                          const PairOp& op) {
  const int n = static_cast<int>(regs.size());
  if (n < 2) return;
  const int m = static_cast<int>(regs[0].size());
  for (const auto& r : regs)
    if (static_cast<int>(r.size()) != m) throw CircuitError("register widths differ");
  const int ws = static_cast<int>(work.size());

  std::vector<int> slot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) slot[static_cast<std::size_t>(i)] = i;
  int gap = n;  // the workspace sits just before slot `gap`
  {
    std::vector<int> order;
    for (const auto& r : regs) order.insert(order.end(), r.begin(), r.end());
    order.insert(order.end(), work.begin(), work.end());
    layout.arrange(lo, order);
  }
  auto start = [&](int s) { return lo + s * m + (s >= gap ? ws : 0); };
  auto reg_at = [&](int s) -> const std::vector<int>& {
    return regs[static_cast<std::size_t>(slot[static_cast<std::size_t>(s)])];
  };
  auto cat = [](std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> v;
    for (const auto* p : parts) v.insert(v.end(), p->begin(), p->end());
    return v;
  };
  auto move_work = [&](int target) {
    while (gap < target) {
      layout.arrange(lo + gap * m, cat({&reg_at(gap), &work}));
      ++gap;
    }
    while (gap > target) {
      layout.arrange(lo + (gap - 1) * m, cat({&work, &reg_at(gap - 1)}));
      --gap;
    }
  };

  std::vector<char> done(static_cast<std::size_t>(n) * n, 0);
  auto key = [n](int i, int j) {
    return static_cast<std::size_t>(std::min(i, j)) * n + std::max(i, j);
  };
  long long remaining = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (wanted(i, j)) ++remaining;

  for (int round = 0; remaining > 0; ++round) {
    if (round > n) throw CircuitError("register network did not cover pairs");
    std::vector<int> firsts;
    for (int s = round & 1; s + 1 < n; s += 2) firsts.push_back(s);
    if (2 * gap > n) std::reverse(firsts.begin(), firsts.end());
    for (int s : firsts) {
      const int i = slot[static_cast<std::size_t>(s)];
      const int j = slot[static_cast<std::size_t>(s) + 1];
      const auto& ri = regs[static_cast<std::size_t>(i)];
      const auto& rj = regs[static_cast<std::size_t>(j)];
      const bool want = !done[key(i, j)] && wanted(i, j);
      if (want) {
        if (ws > 0) move_work(s + 1);
        GreedyRouter router(layout);
        op(i, j, router);
        done[key(i, j)] = 1;
        --remaining;
      }
      if (ws > 0 && gap == s + 1)
        layout.arrange(start(s), cat({&rj, &work, &ri}));
      else
        layout.arrange(start(s), cat({&rj, &ri}));
      std::swap(slot[static_cast<std::size_t>(s)], slot[static_cast<std::size_t>(s) + 1]);
    }
  }
}

}  // namespace fq
