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
#include <vector>

#include <Eigen/Dense>

#include "funcqaoa/statevector.hpp"

namespace fq {

enum class MixerKind {
  PerQubitX,
  GroverGlobal,
  GroverPerRegister,
  RingXYPerRegister,
  OneHotXY,
};

const char* mixer_name(MixerKind k);

/**
 * Exact mixer unitaries applied at the level of the encoded state.
 *  - PerQubitX: exp(-i beta X) on every line of `registers` (all lines if
 *    empty).
 *  - GroverGlobal: exp(-i beta |s><s|) with `s` over the simulation basis.
 *  - GroverPerRegister: the same per register with |s> uniform over values
 *    below `valid`.
 *  - RingXYPerRegister: exp(-i beta A) per register, A the adjacency of the
 *    cycle on values below `valid`; other values are left alone.
 *  - OneHotXY: exp(-i beta sum (XX + YY) / 2) per register over ring (or
 *    complete) neighbour pairs of its lines.
 */
struct MixerModel {
  MixerKind kind = MixerKind::PerQubitX;
  std::vector<std::vector<int>> registers;
  std::uint64_t valid = 0;
  bool ring = true;
  StateVector s;
};

void apply_diagonal(StateVector& psi, const std::vector<double>& cost,
                    double gamma);

/** Precomputes spectral data so repeated applications stay cheap. */
class MixerOp {
 public:
  MixerOp(const MixerModel& model, int num_qubits);

  void apply(StateVector& psi, double beta) const;

 private:
  struct Block {
    std::vector<int> lines;
    std::vector<Index> offsets;
    Eigen::MatrixXd vecs;
    Eigen::VectorXd vals;
  };

  void apply_block(StateVector& psi, const Block& b, double beta) const;

  MixerModel m_;
  int q_;
  std::vector<Block> blocks_;
};

void apply_mixer(StateVector& psi, const MixerModel& model, int num_qubits,
                 double beta);

/** Hopping matrix sum over pairs of (XX + YY) / 2 on k lines (bit i = line i). */
Eigen::MatrixXd xy_hamiltonian(int k, bool ring);

}  // namespace fq
