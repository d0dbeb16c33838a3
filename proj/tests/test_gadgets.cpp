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

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "funcqaoa/gadgets.hpp"
#include "funcqaoa/routing.hpp"
#include "funcqaoa/statevector.hpp"
#include "test_util.hpp"

using namespace fq;
using fq::testing::classical_output;
using fq::testing::phase_aligned_diff;
using fq::testing::random_state;
using fq::testing::run_basis;

namespace {

std::vector<int> range(int lo, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

// Classical replay of a reversible circuit made of X / CNOT / MCX / SWAP.
Index replay(const Circuit& c, Index x) {
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::SWAP) {
      const int a = g.qubits[0], b = g.qubits[1];
      const Index ba = (x >> a) & 1, bb = (x >> b) & 1;
      x = (x & ~((Index{1} << a) | (Index{1} << b))) | (ba << b) | (bb << a);
      continue;
    }
    bool all = true;
    for (int i = 0; i < g.num_controls(); ++i) all &= (x >> g.qubits[i]) & 1;
    if (all) x ^= Index{1} << g.target();
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST(RegisterSwap, SingleQubits) {
  const Circuit c = register_swap({"a", {0}}, {"b", {1}});
  const auto r = measure(c, Coupling::LNN);
  EXPECT_EQ(r.two_qubit_gates, 3);
  EXPECT_EQ(r.depth, 3);
}

TEST(RegisterSwap, FourByThree) {
  const Circuit c = register_swap({"a", range(0, 4)}, {"b", range(4, 3)});
  const auto r = measure(c, Coupling::LNN);
  EXPECT_EQ(r.two_qubit_gates, 36);
  EXPECT_LE(r.depth, 18);
}

TEST(RegisterSwap, ExactCountsAndPermutation) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= 8; ++m) {
      const Circuit c = register_swap({"a", range(0, n)}, {"b", range(n, m)});
      const auto r = measure(c, Coupling::LNN);
      EXPECT_EQ(r.two_qubit_gates, 3LL * n * m);
      EXPECT_LE(r.depth, 3LL * (n + m - 1));
      if (n + m > 8) continue;
      for (Index a = 0; a < (Index{1} << n); ++a)
        for (Index b = 0; b < (Index{1} << m); ++b) {
          Index in = with_register(with_register(0, range(0, n), a), range(n, m), b);
          const Index out = replay(c, in);
          EXPECT_EQ(register_value(out, range(0, m)), b);
          EXPECT_EQ(register_value(out, range(m, n)), a);
        }
    }
  }
}

TEST(RegisterSwap, StatevectorAgrees) {
  const Circuit c = register_swap({"a", range(0, 3)}, {"b", range(3, 2)});
  for (Index in = 0; in < 32; ++in)
    EXPECT_EQ(classical_output(run_basis(c, in)), static_cast<long long>(replay(c, in)));
}

TEST(RegisterSwap, RejectsNonAdjacent) {
  EXPECT_THROW(register_swap({"a", {0}}, {"b", {2}}), CircuitError);
}

TEST(Interlace, SmallCases) {
  EXPECT_TRUE(interlace({{"a", {0}}}, {{"b", {1}}}).empty());
  const Circuit c2 = interlace({{"a0", {0}}, {"a1", {1}}}, {{"b0", {2}}, {"b1", {3}}});
  EXPECT_EQ(measure(c2, Coupling::LNN).two_qubit_gates, 3);
  std::vector<RegisterSpan> a{{"a0", {0, 1}}, {"a1", {2, 3}}, {"a2", {4, 5}}};
  std::vector<RegisterSpan> b{{"b0", {6}}, {"b1", {7}}, {"b2", {8}}};
  EXPECT_EQ(measure(interlace(a, b), Coupling::LNN).two_qubit_gates, 18);
}

TEST(Interlace, ExactCountsAndLayout) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int m = 1; m <= 3; ++m) {
        std::vector<RegisterSpan> a, b;
        for (int i = 0; i < n; ++i) a.push_back({"a", range(i * k, k)});
        for (int i = 0; i < n; ++i) b.push_back({"b", range(n * k + i * m, m)});
        const Circuit c = interlace(a, b);
        EXPECT_EQ(measure(c, Coupling::LNN).two_qubit_gates,
                  3LL * k * m * n * (n - 1) / 2);
        const int total = n * (k + m);
        if (total > 10) continue;
        for (Index in = 0; in < (Index{1} << total); ++in) {
          const Index out = replay(c, in);
          for (int i = 0; i < n; ++i) {
            const int base = i * (k + m);
            EXPECT_EQ(register_value(out, range(base, k)), register_value(in, a[i].lines));
            EXPECT_EQ(register_value(out, range(base + k, m)),
                      register_value(in, b[i].lines));
          }
        }
      }
}

TEST(Interlace, RejectsMismatchedWidths) {
  EXPECT_THROW(interlace({{"a", {0}}, {"a", {1, 2}}}, {{"b", {3}}, {"b", {4}}}),
               CircuitError);
}

TEST(Schedule, TwoAndThree) {
  const auto s2 = all_to_all_schedule(2);
  ASSERT_EQ(s2.rounds.size(), 2u);
  EXPECT_EQ(s2.rounds[1].order, (std::vector<int>{1, 0}));
  const auto s3 = all_to_all_schedule(3);
  ASSERT_EQ(s3.rounds.size(), 3u);
  // pi maps position 0 -> 1 -> 2 -> 0 on contents: a 3-cycle.
  EXPECT_EQ(s3.rounds[1].order, (std::vector<int>{1, 2, 0}));
  EXPECT_THROW(all_to_all_schedule(1), CircuitError);
}

TEST(Schedule, CoverageExactlyOnce) {
  for (int n = 2; n <= 12; ++n) {
    const auto s = all_to_all_schedule(n);
    EXPECT_EQ(static_cast<int>(s.rounds.size()), n);
    std::set<std::pair<int, int>> seen;
    for (const auto& r : s.rounds)
      for (const auto& p : r.pairs) EXPECT_TRUE(seen.insert(p).second) << n;
    EXPECT_EQ(static_cast<int>(seen.size()), n * n);
  }
}

TEST(EqualityFlag, Examples) {
  const Circuit c = equality_flag({"x", {0, 1, 2}}, 5, 3);
  EXPECT_EQ(classical_output(run_basis(c, with_register(0, {0, 1, 2}, 5))),
            static_cast<long long>(with_register(0, {0, 1, 2}, 5) | 8));
  EXPECT_EQ(classical_output(run_basis(c, with_register(0, {0, 1, 2}, 4))),
            static_cast<long long>(with_register(0, {0, 1, 2}, 4)));
  StateVector in = StateVector::Zero(16);
  in(static_cast<Eigen::Index>(with_register(0, {0, 1, 2}, 5))) = 1 / std::sqrt(2.0);
  in(static_cast<Eigen::Index>(with_register(0, {0, 1, 2}, 6))) = 1 / std::sqrt(2.0);
  const auto out = simulate_circuit<double>(c, in);
  EXPECT_NEAR(std::abs(out(static_cast<Eigen::Index>(with_register(0, {0, 1, 2}, 5) | 8))),
              1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(out(static_cast<Eigen::Index>(with_register(0, {0, 1, 2}, 6)))),
              1 / std::sqrt(2.0), 1e-12);
  EXPECT_THROW(equality_flag({"x", {0, 1, 2}}, 8, 3), CircuitError);
}

TEST(EqualityFlag, ExhaustiveAndSelfInverse) {
  for (int w = 1; w <= 5; ++w)
    for (Index k = 0; k < (Index{1} << w); ++k) {
      const Circuit c = equality_flag({"x", range(0, w)}, k, w);
      Circuit twice = c;
      twice.append(c);
      for (Index in = 0; in < (Index{1} << (w + 1)); ++in) {
        const bool hit = register_value(in, range(0, w)) == k;
        EXPECT_EQ(replay(c, in), hit ? in ^ (Index{1} << w) : in);
        EXPECT_EQ(replay(twice, in), in);
      }
    }
}

TEST(ControlledCopy, Examples) {
  const RegisterSpan src{"s", {1, 2, 3}}, dst{"d", {4, 5, 6}};
  const Circuit c = controlled_copy(0, src, dst);
  const Index s6 = with_register(0, src.lines, 6);
  EXPECT_EQ(replay(c, s6 | 1), with_register(s6 | 1, dst.lines, 6));
  EXPECT_EQ(replay(c, s6), s6);
  StateVector in = StateVector::Zero(128);
  const Index s3 = with_register(0, src.lines, 3);
  in(static_cast<Eigen::Index>(s3)) = 1 / std::sqrt(2.0);
  in(static_cast<Eigen::Index>(s3 | 1)) = 1 / std::sqrt(2.0);
  const auto out = simulate_circuit<double>(c, in);
  EXPECT_NEAR(std::abs(out(static_cast<Eigen::Index>(s3))), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(out(static_cast<Eigen::Index>(with_register(s3 | 1, dst.lines, 3)))),
              1 / std::sqrt(2.0), 1e-12);
  EXPECT_THROW(controlled_copy(0, src, {"d", {4, 5}}), CircuitError);
}

TEST(ControlledCopy, SelfInverse) {
  for (int w = 1; w <= 2; ++w) {
    const Circuit c = controlled_copy(0, {"s", range(1, w)}, {"d", range(1 + w, w)});
    Circuit twice = c;
    twice.append(c);
    for (Index in = 0; in < (Index{1} << (2 * w + 1)); ++in)
      EXPECT_EQ(replay(twice, in), in);
  }
}

TEST(UniformRangePrep, K14Angles) {
  const Circuit c = uniform_range_prep({"r", range(0, 4)}, 14, 4);
  std::vector<double> angles;
  for (const auto& g : c.gates())
    if (g.kind == GateKind::RY || g.kind == GateKind::CRY) angles.push_back(g.angle.coeff);
  ASSERT_GE(angles.size(), 2u);
  EXPECT_NEAR(angles[0], 1.427, 1e-3);
  EXPECT_NEAR(angles[1], 1.231, 1e-3);
}

TEST(UniformRangePrep, PowerOfTwoIsHadamards) {
  const Circuit c = uniform_range_prep({"r", range(0, 3)}, 8, 3);
  ASSERT_EQ(c.gates().size(), 3u);
  for (const auto& g : c.gates()) EXPECT_EQ(g.kind, GateKind::H);
}

TEST(UniformRangePrep, ExactAmplitudes) {
  for (std::uint64_t K = 1; K <= 64; ++K) {
    const int w = std::max(1, ceil_log2(K));
    const Circuit c = uniform_range_prep({"r", range(0, w)}, K, w);
    const auto out = run_basis(c, 0);
    for (Index x = 0; x < (Index{1} << (w + 1)); ++x) {
      const Index v = register_value(x, range(0, w));
      const bool anc = (x >> w) & 1;
      const double want = (!anc && v < K) ? 1 / std::sqrt(double(K)) : 0.0;
      EXPECT_NEAR(out(static_cast<Eigen::Index>(x)).real(), want, 1e-10) << K;
      EXPECT_NEAR(out(static_cast<Eigen::Index>(x)).imag(), 0.0, 1e-10);
    }
  }
}

TEST(UniformRangePrep, DecomposedFiveOnThree) {
  const Circuit c = uniform_range_prep({"r", range(0, 3)}, 5, 3);
  const Circuit d = decompose(c, Coupling::AllToAll);
  const auto out = run_basis(d, 0);
  for (Index v = 0; v < 8; ++v)
    EXPECT_NEAR(std::abs(out(static_cast<Eigen::Index>(with_register(0, range(0, 3), v)))),
                v < 5 ? 1 / std::sqrt(5.0) : 0.0, 1e-10);
}

TEST(UniformRangePrep, RejectsOversizeK) {
  EXPECT_THROW(uniform_range_prep({"r", range(0, 2)}, 5, 2), CircuitError);
}

TEST(GroverMixer, MatchesRankOneUpdate) {
  std::mt19937_64 rng(5);
  for (int w = 1; w <= 10; ++w) {
    const std::uint64_t K = (Index{1} << w) - (w > 2 ? 3 : 0);
    const int anc = w, target = w + 1;
    Circuit prep(w + 2);
    emit_uniform_range_prep(prep, range(0, w), K, anc);
    const double beta = 0.3 + 0.2 * w;
    const Circuit mix = grover_mixer(prep, range(0, w), target,
                                     Angle::param(beta_ref(1)));
    long long params = 0;
    for (const auto& g : mix.gates()) params += g.angle.is_param();
    EXPECT_EQ(params, 1);
    const StateVector psi = embed(random_state(w, rng), w + 2);
    const StateVector s = run_basis(prep, 0);
    const StateVector want = psi + (std::polar(1.0, -beta) - 1.0) * s.dot(psi) * s;
    const ParamValues pv{{}, {beta}};
    EXPECT_LT(phase_aligned_diff(want, simulate_circuit<double>(mix, psi, pv)), 1e-9)
        << w;
  }
}

TEST(GroverMixer, IdentityAtZeroAndEigenstate) {
  Circuit prep(5);
  emit_uniform_range_prep(prep, range(0, 3), 6, 3);
  const Circuit mix = grover_mixer(prep, range(0, 3), 4, Angle::constant(0.0));
  std::mt19937_64 rng(9);
  const StateVector psi = embed(random_state(3, rng), 5);
  EXPECT_LT(phase_aligned_diff(psi, simulate_circuit<double>(mix, psi)), 1e-12);
  const Circuit mix2 = grover_mixer(prep, range(0, 3), 4, Angle::constant(0.9));
  const StateVector s = run_basis(prep, 0);
  EXPECT_NEAR(overlap_abs(s, simulate_circuit<double>(mix2, s)), 1.0, 1e-12);
}

TEST(OrFlag, TruthTable) {
  const Circuit c = or_flag({0, 1, 2, 3}, 4);
  Circuit twice = c;
  twice.append(c);
  for (Index in = 0; in < 16; ++in) {
    const Index want = in | ((in & 15) ? 16 : 0);
    EXPECT_EQ(replay(c, in), want);
    EXPECT_EQ(replay(twice, in), in);
  }
  EXPECT_EQ(replay(or_flag({0, 1, 2}, 3), 0), 0u);
  EXPECT_EQ(replay(or_flag({0, 1, 2}, 3), 2), 2u | 8u);
  EXPECT_THROW(or_flag({}, 0), CircuitError);
}

TEST(SignedAccumulator, Examples) {
  const std::vector<int> y{0, 1, 2};
  const int w = accumulator_width({1, 1, 1}, 2);
  const RegisterSpan acc{"acc", range(3, w)};
  const Circuit c = signed_accumulator({1, 1, 1}, 2, y, acc);
  const auto mask = (Index{1} << w) - 1;
  EXPECT_EQ(register_value(replay(c, 0), acc.lines), 2u);
  const Index out = replay(c, 7);
  EXPECT_EQ(register_value(out, acc.lines), static_cast<Index>(-1) & mask);
  EXPECT_EQ((out >> acc.lines[0]) & 1, 1u);
}

TEST(SignedAccumulator, RandomExhaustive) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> coef(-15, 15);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<long long> a(n);
    for (auto& x : a) x = coef(rng);
    const long long b = coef(rng);
    const int w = accumulator_width(a, b);
    const RegisterSpan acc{"acc", range(n, w)};
    const Circuit c = signed_accumulator(a, b, range(0, n), acc);
    for (Index y = 0; y < (Index{1} << n); ++y) {
      long long xi = b;
      for (int i = 0; i < n; ++i)
        if ((y >> i) & 1) xi -= a[i];
      const Index out = replay(c, y);
      EXPECT_EQ(out & ((Index{1} << n) - 1), y);
      const Index raw = register_value(out, acc.lines);
      const long long got = raw >= (Index{1} << (w - 1))
                                ? static_cast<long long>(raw) - (1LL << w)
                                : static_cast<long long>(raw);
      EXPECT_EQ(got, xi);
    }
  }
}

TEST(SignedAccumulator, RejectsNarrowRegister) {
  EXPECT_THROW(signed_accumulator({7, 7}, 0, {0, 1}, {"acc", {2, 3}}), CircuitError);
}

TEST(UnaryToBinary, AllOneHotInputs) {
  for (int n = 1; n <= 8; ++n) {
    const Circuit c = unary_to_binary({"u", range(0, n)});
    const int m = ceil_log2(n);
    for (int i = 0; i < n; ++i) {
      const Index out = replay(c, Index{1} << i);
      EXPECT_EQ(register_value(out, range(0, m)), static_cast<Index>(i)) << n;
      EXPECT_EQ(out >> m, 0u) << "n=" << n << " i=" << i;
    }
  }
}

TEST(UnaryToBinary, DecomposedMatchesAndRoutesLinearly) {
  const Circuit c = unary_to_binary({"u", range(0, 6)});
  const Circuit d = decompose(c, Coupling::AllToAll);
  const Circuit lnn = decompose(route_linear(c), Coupling::LNN);
  std::vector<int> pool;
  for (int l = 6; l < d.num_lines(); ++l) pool.push_back(l);
  for (int i = 0; i < 6; ++i) {
    const auto out = run_basis(d, Index{1} << i);
    EXPECT_EQ(classical_output(out), static_cast<long long>(with_register(0, {0, 1, 2}, i)));
    const auto out2 = run_basis(lnn, Index{1} << i);
    EXPECT_EQ(classical_output(out2), static_cast<long long>(with_register(0, {0, 1, 2}, i)));
  }
}
