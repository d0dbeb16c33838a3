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
#include <string>
#include <utility>
#include <vector>

#include "funcqaoa/circuit.hpp"

namespace fq {

/** Register bits are listed most significant first. */
struct RegisterSpan {
  std::string name;
  std::vector<int> lines;

  int width() const { return static_cast<int>(lines.size()); }
};

int ceil_log2(std::uint64_t n);

/** Swaps the contents of A and B, where A sits immediately before B. */
Circuit register_swap(const RegisterSpan& a, const RegisterSpan& b);

/** A_1..A_n B_1..B_n  ->  A_1 B_1 ... A_n B_n. */
Circuit interlace(const std::vector<RegisterSpan>& a,
                  const std::vector<RegisterSpan>& b);

/**
 * Emits adjacent SWAPs that carry the qubit initially on lines[order[0]]
 * to lines[0], lines[order[1]] to lines[1], and so on, by insertion.
 * The swap count equals the number of inversions of `order`.
 */
void emit_insertion_permutation(GateSink& out, const std::vector<int>& lines,
                                const std::vector<int>& order);

struct MeetingRound {
  /** B register standing next to A_i in this round. */
  std::vector<int> order;
  std::vector<std::pair<int, int>> pairs;
};

struct MeetingSchedule {
  std::vector<MeetingRound> rounds;
};

MeetingSchedule all_to_all_schedule(int n);

/** flag ^= [x == k]. */
void emit_equality_flag(GateSink& out, const std::vector<int>& x,
                        std::uint64_t k, int flag,
                        const std::vector<int>& scratch = {});
Circuit equality_flag(const RegisterSpan& x, std::uint64_t k, int flag);

/** dst ^= src when f is set. */
void emit_controlled_copy(GateSink& out, int f, const std::vector<int>& src,
                          const std::vector<int>& dst);
Circuit controlled_copy(int f, const RegisterSpan& src, const RegisterSpan& dst);

/**
 * Prepares (1/sqrt K) sum_{k<K} |k> from |0...0>. `ancilla` must start and
 * end at |0>; it is touched only when K is not a power of two.
 */
void emit_uniform_range_prep(GateSink& out, const std::vector<int>& reg,
                             std::uint64_t K, int ancilla,
                             const std::vector<int>& scratch = {});
Circuit uniform_range_prep(const RegisterSpan& reg, std::uint64_t K,
                           int ancilla);

/**
 * exp(-i beta |s><s|) with |s> = prep |0...0> on `reg`, realised as
 * prep^dagger, X layer, MCRZ onto `target`, X layer, prep.
 */
void emit_grover_mixer(GateSink& out, const Circuit& prep,
                       const std::vector<int>& reg, int target, Angle beta,
                       const std::vector<int>& scratch = {});
Circuit grover_mixer(const Circuit& prep, const std::vector<int>& reg,
                     int target, Angle beta);

/** flag ^= OR(vars). */
void emit_or_flag(GateSink& out, const std::vector<int>& vars, int flag,
                  const std::vector<int>& scratch = {});
Circuit or_flag(const std::vector<int>& vars, int flag);

/** Smallest two's-complement width holding every value of b - sum a_i y_i. */
int accumulator_width(const std::vector<long long>& coeffs, long long b);

/**
 * acc := b - sum_i a_i y_i in two's complement (acc[0] is the sign bit).
 * acc must start at |0>.
 */
void emit_signed_accumulator(GateSink& out, const std::vector<long long>& coeffs,
                             long long b, const std::vector<int>& y,
                             const std::vector<int>& acc,
                             const std::vector<int>& scratch = {});
Circuit signed_accumulator(const std::vector<long long>& coeffs, long long b,
                           const std::vector<int>& y, const RegisterSpan& acc);

/** One-hot index on n lines -> binary index on the first ceil(log2 n). */
void emit_unary_to_binary(GateSink& out, const std::vector<int>& lines,
                          const std::vector<int>& scratch = {});
Circuit unary_to_binary(const RegisterSpan& reg);

}  // namespace fq
