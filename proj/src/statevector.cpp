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

#include "funcqaoa/statevector.hpp"

namespace fq {

StateVector embed(const StateVector& low, int total) {
  if (total > kMaxSimQubits) throw CircuitError("qubit cap exceeded");
  const Eigen::Index size = Eigen::Index{1} << total;
  if (low.size() > size) throw CircuitError("embed target too small");
  StateVector out = StateVector::Zero(size);
  out.head(low.size()) = low;
  return out;
}

double leakage(const StateVector& psi, const std::vector<int>& lines) {
  Index mask = 0;
  for (int l : lines) mask |= Index{1} << l;
  double p = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    if (static_cast<Index>(i) & mask) p += std::norm(psi(i));
  return p;
}

double overlap_abs(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw CircuitError("state size mismatch");
  return std::abs(a.dot(b));
}

}  // namespace fq
