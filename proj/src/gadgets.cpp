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

#include "funcqaoa/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace fq {

int ceil_log2(std::uint64_t n) {
  if (n <= 1) return 0;
  return 64 - std::countl_zero(n - 1);
}

namespace {

int max_line(const std::vector<int>& a) {
  int m = -1;
  for (int l : a) m = std::max(m, l);
  return m;
}

int max_line(std::initializer_list<const std::vector<int>*> lists,
             std::initializer_list<int> extra = {}) {
  int m = -1;
  for (auto* l : lists) m = std::max(m, max_line(*l));
  for (int e : extra) m = std::max(m, e);
  return m;
}

bool contiguous(const std::vector<int>& lines) {
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (lines[i] != lines[i - 1] + 1) return false;
  return true;
}

}  // namespace

void emit_insertion_permutation(GateSink& out, const std::vector<int>& lines,
                                const std::vector<int>& order) {
  std::vector<int> cur(lines.size());
  std::iota(cur.begin(), cur.end(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto p = static_cast<std::size_t>(
        std::find(cur.begin(), cur.end(), order[i]) - cur.begin());
    if (p < i || p >= cur.size()) throw CircuitError("order is not a permutation");
    for (; p > i; --p) {
      out.swap(lines[p - 1], lines[p]);
      std::swap(cur[p - 1], cur[p]);
    }
  }
}

Circuit register_swap(const RegisterSpan& a, const RegisterSpan& b) {
  if (a.lines.empty() || b.lines.empty()) throw CircuitError("empty register");
  if (!contiguous(a.lines) || !contiguous(b.lines) ||
      a.lines.back() + 1 != b.lines.front())
    throw CircuitError("register_swap needs A immediately before B");
  std::vector<int> lines = a.lines;
  lines.insert(lines.end(), b.lines.begin(), b.lines.end());
  const int n = a.width(), m = b.width();
  std::vector<int> order;
  for (int j = 0; j < m; ++j) order.push_back(n + j);
  for (int i = 0; i < n; ++i) order.push_back(i);
  Circuit c(max_line(lines) + 1);
  emit_insertion_permutation(c, lines, order);
  return c;
}

Circuit interlace(const std::vector<RegisterSpan>& a,
                  const std::vector<RegisterSpan>& b) {
  if (a.size() != b.size()) throw CircuitError("interlace needs n A and n B");
  const std::size_t n = a.size();
  if (n == 0) return Circuit();
  const int k = a[0].width(), m = b[0].width();
  std::vector<int> lines;
  for (const auto& r : a) {
    if (r.width() != k) throw CircuitError("mismatched A widths");
    lines.insert(lines.end(), r.lines.begin(), r.lines.end());
  }
  for (const auto& r : b) {
    if (r.width() != m) throw CircuitError("mismatched B widths");
    lines.insert(lines.end(), r.lines.begin(), r.lines.end());
  }
  if (!contiguous(lines)) throw CircuitError("interlace needs a contiguous layout");
  std::vector<int> order;
  const int boff = static_cast<int>(n) * k;
  for (std::size_t i = 0; i < n; ++i) {
    for (int q = 0; q < k; ++q) order.push_back(static_cast<int>(i) * k + q);
    for (int q = 0; q < m; ++q) order.push_back(boff + static_cast<int>(i) * m + q);
  }
  Circuit c(max_line(lines) + 1);
  emit_insertion_permutation(c, lines, order);
  return c;
}

MeetingSchedule all_to_all_schedule(int n) {
  if (n < 2) throw CircuitError("schedule needs n >= 2");
  MeetingSchedule s;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int r = 0; r < n; ++r) {
    MeetingRound round;
    round.order = order;
    for (int i = 0; i < n; ++i) round.pairs.emplace_back(i, order[i]);
    s.rounds.push_back(std::move(round));
    for (int p = 0; p + 1 < n; p += 2) std::swap(order[p], order[p + 1]);
    for (int p = 1; p + 1 < n; p += 2) std::swap(order[p], order[p + 1]);
  }
  return s;
}

// ---------------------------------------------------------------------------

void emit_equality_flag(GateSink& out, const std::vector<int>& x,
                        std::uint64_t k, int flag,
                        const std::vector<int>& scratch) {
  const int w = static_cast<int>(x.size());
  if (w < 64 && k >> w) throw CircuitError("constant out of register range");
  auto flip_zeros = [&] {
    for (int j = 0; j < w; ++j)
      if (!((k >> (w - 1 - j)) & 1)) out.x(x[j]);
  };
  flip_zeros();
  out.mcx(x, flag, scratch);
  flip_zeros();
}

Circuit equality_flag(const RegisterSpan& x, std::uint64_t k, int flag) {
  if (std::find(x.lines.begin(), x.lines.end(), flag) != x.lines.end())
    throw CircuitError("flag overlaps register");
  Circuit c(max_line({&x.lines}, {flag}) + 1);
  emit_equality_flag(c, x.lines, k, flag);
  return c;
}

void emit_controlled_copy(GateSink& out, int f, const std::vector<int>& src,
                          const std::vector<int>& dst) {
  if (src.size() != dst.size()) throw CircuitError("copy width mismatch");
  for (std::size_t j = 0; j < src.size(); ++j) out.mcx({f, src[j]}, dst[j]);
}

Circuit controlled_copy(int f, const RegisterSpan& src, const RegisterSpan& dst) {
  Circuit c(max_line({&src.lines, &dst.lines}, {f}) + 1);
  emit_controlled_copy(c, f, src.lines, dst.lines);
  return c;
}

// ---------------------------------------------------------------------------

namespace {

struct Literal {
  int line;
  bool value;
};

class RangePrep {
 public:
  RangePrep(GateSink& out, const std::vector<int>& reg, int anc,
            const std::vector<int>& scratch)
      : out_(out), reg_(reg), anc_(anc), scratch_(scratch) {}

  // Values base + [0, T) with the first j bits fixed by `prefix`.
  void run(std::vector<Literal> prefix, int j, std::uint64_t T) {
    const int w = static_cast<int>(reg_.size());
    const int rest = w - j;
    if (T <= 1 || rest == 0) return;
    if (std::has_single_bit(T)) {
      const int l = std::countr_zero(T);
      controlled(prefix, [&] {
        for (int q = w - l; q < w; ++q) hadamard(prefix, reg_[q]);
      });
      return;
    }
    const std::uint64_t half = std::uint64_t{1} << (rest - 1);
    if (T <= half) {
      prefix.push_back({reg_[j], false});
      run(prefix, j + 1, T);
      return;
    }
    const double theta = 2.0 * std::acos(std::sqrt(double(half) / double(T)));
    controlled(prefix, [&] { rotate(prefix, reg_[j], theta); });
    auto zero = prefix, one = prefix;
    zero.push_back({reg_[j], false});
    one.push_back({reg_[j], true});
    run(zero, j + 1, half);
    run(one, j + 1, T - half);
  }

 private:
  template <class F>
  void controlled(const std::vector<Literal>& prefix, F body) {
    if (prefix.empty()) {
      body();
      return;
    }
    mark(prefix);
    body();
    mark(prefix);
  }

  void mark(const std::vector<Literal>& prefix) {
    std::vector<int> ctrl;
    for (const auto& l : prefix) {
      if (!l.value) out_.x(l.line);
      ctrl.push_back(l.line);
    }
    out_.mcx(ctrl, anc_, scratch_);
    for (const auto& l : prefix)
      if (!l.value) out_.x(l.line);
  }

  void hadamard(const std::vector<Literal>& prefix, int q) {
    if (prefix.empty()) out_.h(q);
    else out_.ch(anc_, q);
  }

  void rotate(const std::vector<Literal>& prefix, int q, double theta) {
    if (prefix.empty()) out_.ry(q, Angle::constant(theta));
    else out_.cry(anc_, q, Angle::constant(theta));
  }

  GateSink& out_;
  const std::vector<int>& reg_;
  int anc_;
  const std::vector<int>& scratch_;
};

}  // namespace

void emit_uniform_range_prep(GateSink& out, const std::vector<int>& reg,
                             std::uint64_t K, int ancilla,
                             const std::vector<int>& scratch) {
  const int w = static_cast<int>(reg.size());
  if (K < 1) throw CircuitError("K must be positive");
  if (w < 63 && K > (std::uint64_t{1} << w))
    throw CircuitError("K exceeds register capacity");
  RangePrep(out, reg, ancilla, scratch).run({}, 0, K);
}

Circuit uniform_range_prep(const RegisterSpan& reg, std::uint64_t K, int ancilla) {
  Circuit c(max_line({&reg.lines}, {ancilla}) + 1);
  c.mark_ancilla(ancilla);
  emit_uniform_range_prep(c, reg.lines, K, ancilla);
  return c;
}

void emit_grover_mixer(GateSink& out, const Circuit& prep,
                       const std::vector<int>& reg, int target, Angle beta,
                       const std::vector<int>& scratch) {
  const Circuit inv = prep.inverse();
  for (const auto& g : inv.gates()) out.add(g);
  for (int q : reg) out.x(q);
  out.mcrz(reg, target, -beta, scratch);
  for (int q : reg) out.x(q);
  for (const auto& g : prep.gates()) out.add(g);
}

Circuit grover_mixer(const Circuit& prep, const std::vector<int>& reg,
                     int target, Angle beta) {
  Circuit c = prep.clone_layout();
  while (c.num_lines() <= std::max(max_line(reg), target))
    c.add_line("q" + std::to_string(c.num_lines()));
  c.mark_ancilla(target);
  emit_grover_mixer(c, prep, reg, target, beta);
  return c;
}

void emit_or_flag(GateSink& out, const std::vector<int>& vars, int flag,
                  const std::vector<int>& scratch) {
  if (vars.empty()) throw CircuitError("or_flag needs variables");
  for (int v : vars) out.x(v);
  out.mcx(vars, flag, scratch);
  for (int v : vars) out.x(v);
  out.x(flag);
}

Circuit or_flag(const std::vector<int>& vars, int flag) {
  if (vars.empty()) throw CircuitError("or_flag needs variables");
  Circuit c(max_line({&vars}, {flag}) + 1);
  emit_or_flag(c, vars, flag);
  return c;
}

// ---------------------------------------------------------------------------

int accumulator_width(const std::vector<long long>& coeffs, long long b) {
  long long lo = b, hi = b;
  for (long long a : coeffs) {
    if (a > 0) lo -= a;
    else hi -= a;
  }
  int w = 1;
  while (w < 62) {
    const long long lim = 1LL << (w - 1);
    if (lo >= -lim && hi <= lim - 1) return w;
    ++w;
  }
  throw CircuitError("accumulator range too wide");
}

void emit_signed_accumulator(GateSink& out, const std::vector<long long>& coeffs,
                             long long b, const std::vector<int>& y,
                             const std::vector<int>& acc,
                             const std::vector<int>& scratch) {
  if (coeffs.size() != y.size()) throw CircuitError("coefficient count mismatch");
  const int w = static_cast<int>(acc.size());
  if (w < accumulator_width(coeffs, b))
    throw CircuitError("accumulator overflow range");
  const std::uint64_t mask = w >= 64 ? ~0ULL : ((1ULL << w) - 1);
  auto line = [&](int bit) { return acc[w - 1 - bit]; };
  const auto ub = static_cast<std::uint64_t>(b) & mask;
  for (int k = 0; k < w; ++k)
    if ((ub >> k) & 1) out.x(line(k));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto c = static_cast<std::uint64_t>(-coeffs[i]) & mask;
    for (int k = 0; k < w; ++k) {
      if (!((c >> k) & 1)) continue;
      // Controlled increment of bits k..w-1, top bit first.
      for (int j = w - 1; j >= k; --j) {
        std::vector<int> ctrl{y[i]};
        for (int q = k; q < j; ++q) ctrl.push_back(line(q));
        out.mcx(ctrl, line(j), scratch);
      }
    }
  }
}

Circuit signed_accumulator(const std::vector<long long>& coeffs, long long b,
                           const std::vector<int>& y, const RegisterSpan& acc) {
  Circuit c(max_line({&y, &acc.lines}) + 1);
  c.mark_ancillas(acc.lines);
  emit_signed_accumulator(c, coeffs, b, y, acc.lines);
  return c;
}

void emit_unary_to_binary(GateSink& out, const std::vector<int>& lines,
                          const std::vector<int>& scratch) {
  const int n = static_cast<int>(lines.size());
  if (n == 0) return;
  const int m = ceil_log2(static_cast<std::uint64_t>(n));
  std::vector<int> bit_line(m);
  for (int k = 0; k < m; ++k) bit_line[k] = lines[1 << k];
  auto pow2 = [](int i) { return i > 0 && (i & (i - 1)) == 0; };
  // Bit k collects the parity of every hot line whose index has bit k.
  for (int i = 3; i < n; ++i) {
    if (pow2(i)) continue;
    for (int k = 0; k < m; ++k)
      if ((i >> k) & 1) out.cnot(lines[i], bit_line[k]);
  }
  std::vector<int> ctrl(bit_line.rbegin(), bit_line.rend());
  auto clear_if = [&](int i, int target) {
    for (int k = 0; k < m; ++k)
      if (!((i >> k) & 1)) out.x(bit_line[k]);
    out.mcx(ctrl, target, scratch);
    for (int k = 0; k < m; ++k)
      if (!((i >> k) & 1)) out.x(bit_line[k]);
  };
  for (int i = 3; i < n; ++i)
    if (!pow2(i)) clear_if(i, lines[i]);
  clear_if(0, lines[0]);
  // Compact: bit k moves to lines[m-1-k] so the head reads MSB first.
  std::vector<int> where(m);
  for (int k = 0; k < m; ++k) where[k] = 1 << k;
  for (int k = m - 1; k >= 0; --k) {
    const int dst = m - 1 - k;
    const int src = where[k];
    if (src == dst) continue;
    out.swap(lines[src], lines[dst]);
    for (int q = 0; q < m; ++q)
      if (where[q] == dst) where[q] = src;
    where[k] = dst;
  }
}

Circuit unary_to_binary(const RegisterSpan& reg) {
  Circuit c(max_line({&reg.lines}) + 1);
  emit_unary_to_binary(c, reg.lines);
  return c;
}

}  // namespace fq
