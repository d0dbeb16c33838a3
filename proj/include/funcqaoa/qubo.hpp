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

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "funcqaoa/circuit.hpp"
#include "funcqaoa/routing.hpp"
#include "funcqaoa/statevector.hpp"

namespace fq {

/** Quadratic form over binary variables; variable i is line i. */
class Qubo {
 public:
  explicit Qubo(int n) : lin_(static_cast<std::size_t>(n), 0.0) {}

  int size() const { return static_cast<int>(lin_.size()); }
  double offset() const { return offset_; }
  const std::vector<double>& linear() const { return lin_; }
  const std::unordered_map<std::uint64_t, double>& quad() const { return quad_; }

  void add_constant(double c) { offset_ += c; }
  void add_linear(int i, double c) { lin_.at(static_cast<std::size_t>(i)) += c; }
  void add_quad(int i, int j, double c);
  /** weight * (constant + sum_k c_k x_k)^2 */
  void add_square(const std::vector<std::pair<int, double>>& terms,
                  double constant, double weight);

  double value(Index x) const;

  static std::uint64_t key(int i, int j);

 private:
  double offset_ = 0.0;
  std::vector<double> lin_;
  std::unordered_map<std::uint64_t, double> quad_;
};

struct IsingCoupling {
  int a = 0;
  int b = 0;
  double j = 0.0;
};

/** offset + sum h_q Z_q + sum J Z_a Z_b, with x = (1 - z) / 2. */
struct Ising {
  int n = 0;
  double offset = 0.0;
  std::vector<double> h;
  std::vector<IsingCoupling> couplings;
};

Ising to_ising(const Qubo& q, double eps = 1e-12);

/**
 * exp(-i gamma H) up to global phase. Couplings are issued colour class by
 * colour class of a round-robin edge colouring so ASAP layering packs them.
 */
void emit_ising(GateSink& out, const Ising& is, Angle gamma);

/**
 * Same on a linear array whose physical lines [0, n) hold the n variables:
 * odd-even transposition rounds with each coupling fused into the swap of
 * its pair. Stops once every coupling has been applied, leaving the array
 * permuted.
 */
void emit_ising_lnn(LinearLayout& layout, const Ising& is, Angle gamma);

}  // namespace fq
