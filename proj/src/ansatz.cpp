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

#include "funcqaoa/ansatz.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "funcqaoa/networks.hpp"
#include "funcqaoa/qubo.hpp"

namespace fq {

namespace {

constexpr double kEps = 1e-12;

struct EncodingName {
  Encoding e;
  const char* name;
};

constexpr EncodingName kEncodings[] = {
    {Encoding::X, "x"},           {Encoding::XY, "xy"},
    {Encoding::GM, "gm"},         {Encoding::Hobo, "hobo"},
    {Encoding::Fuchs, "fuchs"},   {Encoding::Mtz, "mtz"},
    {Encoding::Func, "func"},     {Encoding::FuncGm, "func-gm"},
    {Encoding::FuncCom, "func-com"}, {Encoding::SlackQubo, "slack-qubo"},
    {Encoding::FuncOr, "func-or"}, {Encoding::FuncDirect, "func-direct"},
};

const char* encoding_name(Encoding e) {
  for (const auto& en : kEncodings)
    if (en.e == e) return en.name;
  return "?";
}

int mcx_scratch(int controls) {
  Gate g{GateKind::MCX, {}, {}, {}};
  for (int i = 0; i <= controls; ++i) g.qubits.push_back(i);
  return scratch_needed(g);
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

std::vector<int> flatten(const std::vector<std::vector<int>>& regs) {
  std::vector<int> v;
  for (const auto& r : regs) v.insert(v.end(), r.begin(), r.end());
  return v;
}

std::vector<int> values_of(Index x, const std::vector<std::vector<int>>& regs) {
  std::vector<int> v;
  v.reserve(regs.size());
  for (const auto& r : regs) v.push_back(static_cast<int>(register_value(x, r)));
  return v;
}

bool one_hot(Index x, const std::vector<int>& lines) {
  int c = 0;
  for (int l : lines) c += static_cast<int>((x >> l) & 1);
  return c == 1;
}

double log2_factorial(int n) {
  double s = 0;
  for (int i = 2; i <= n; ++i) s += std::log2(static_cast<double>(i));
  return s;
}

void emit_mixer_x(GateSink& out, const std::vector<int>& lines, Angle beta) {
  for (int q : lines) {
    out.h(q);
    out.rz(q, beta.scaled(2.0));
    out.h(q);
  }
}

void emit_h_layer(GateSink& out, const std::vector<int>& lines) {
  for (int q : lines) out.h(q);
}

/** Uniform superposition of the one-hot patterns on `lines`. */
void emit_w_state(GateSink& out, const std::vector<int>& lines) {
  const int k = static_cast<int>(lines.size());
  out.x(lines[0]);
  for (int i = 0; i + 1 < k; ++i) {
    const double th = 2.0 * std::acos(std::sqrt(1.0 / (k - i)));
    out.cry(lines[i], lines[i + 1], Angle::constant(th));
    out.cnot(lines[i + 1], lines[i]);
  }
}

/** exp(-i beta (XX + YY) / 2) on lines a, b. */
void emit_xy_pair(GateSink& out, int a, int b, Angle beta) {
  out.cnot(a, b);
  out.h(a);
  out.crz(b, a, beta.scaled(2.0));
  out.h(a);
  out.cnot(a, b);
}

void emit_xy_ring(GateSink& out, const std::vector<int>& lines, Angle beta) {
  const int k = static_cast<int>(lines.size());
  for (int par = 0; par < 2; ++par)
    for (int i = par; i + 1 < k; i += 2) emit_xy_pair(out, lines[i], lines[i + 1], beta);
  if (k > 2) emit_xy_pair(out, lines[k - 1], lines[0], beta);
}

std::vector<ParityTerm> terms_from(const std::vector<double>& coeffs) {
  std::vector<ParityTerm> t;
  for (std::size_t s = 1; s < coeffs.size(); ++s)
    if (std::abs(coeffs[s]) > kEps) t.push_back({s, coeffs[s]});
  return t;
}

// ---------------------------------------------------------------------------
// Plans

class QuboPlan : public CircuitPlan {
 public:
  enum class Prep { Hadamard, WState, Formula };
  enum class Mix { X, XYRing, Formula };

  QuboPlan(Circuit layout, Ising is, Prep prep, Mix mix,
           std::vector<std::vector<int>> regs = {}, ResourceReport fprep = {},
           ResourceReport fmix = {})
      : is_(std::move(is)), prep_(prep), mix_(mix), regs_(std::move(regs)),
        fprep_(fprep), fmix_(fmix) {
    layout_ = std::move(layout);
    all_.resize(static_cast<std::size_t>(is_.n));
    std::iota(all_.begin(), all_.end(), 0);
  }

  void prep(GateSink& out) const override {
    if (prep_ == Prep::Hadamard) emit_h_layer(out, all_);
    if (prep_ == Prep::WState)
      for (const auto& r : regs_) emit_w_state(out, r);
  }
  void phase(GateSink& out, Angle gamma) const override { emit_ising(out, is_, gamma); }
  void mixer(GateSink& out, Angle beta) const override {
    if (mix_ == Mix::X) emit_mixer_x(out, all_, beta);
    if (mix_ == Mix::XYRing)
      for (const auto& r : regs_) emit_xy_ring(out, r, beta);
  }
  void phase_lnn(LinearLayout& l, Angle gamma) const override {
    emit_ising_lnn(l, is_, gamma);
  }
  ResourceReport formula_prep() const override { return fprep_; }
  ResourceReport formula_mixer() const override { return fmix_; }
  const Ising* ising() const override { return &is_; }

 private:
  Ising is_;
  Prep prep_;
  Mix mix_;
  std::vector<std::vector<int>> regs_;
  std::vector<int> all_;
  ResourceReport fprep_, fmix_;
};

/** Diagonal encodings over binary registers with single and pair terms. */
class HoboPlan : public CircuitPlan {
 public:
  HoboPlan(Circuit layout, std::vector<std::vector<int>> regs,
           std::vector<std::vector<ParityTerm>> singles,
           std::unordered_map<std::uint64_t, std::vector<ParityTerm>> pairs)
      : regs_(std::move(regs)), singles_(std::move(singles)), pairs_(std::move(pairs)) {
    layout_ = std::move(layout);
    all_ = flatten(regs_);
  }

  void prep(GateSink& out) const override { emit_h_layer(out, all_); }
  void mixer(GateSink& out, Angle beta) const override { emit_mixer_x(out, all_, beta); }
  void phase(GateSink& out, Angle gamma) const override {
    emit_singles(out, gamma);
    const int n = static_cast<int>(regs_.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) emit_pair(out, i, j, gamma);
  }
  void phase_lnn(LinearLayout& l, Angle gamma) const override {
    {
      GreedyRouter r(l);
      emit_singles(r, gamma);
    }
    run_register_network(
        l, 0, regs_, {},
        [&](int i, int j) { return pairs_.count(key(i, j)) > 0; },
        [&](int i, int j, GateSink& out) {
          emit_pair(out, std::min(i, j), std::max(i, j), gamma);
        });
  }

 private:
  std::uint64_t key(int i, int j) const {
    return static_cast<std::uint64_t>(std::min(i, j)) * regs_.size() +
           static_cast<std::uint64_t>(std::max(i, j));
  }
  void emit_singles(GateSink& out, Angle gamma) const {
    for (std::size_t r = 0; r < regs_.size(); ++r)
      if (!singles_[r].empty()) emit_parity_terms(out, regs_[r], singles_[r], gamma);
  }
  void emit_pair(GateSink& out, int i, int j, Angle gamma) const {
    const auto it = pairs_.find(key(i, j));
    if (it == pairs_.end()) return;
    emit_parity_terms(out, concat(regs_[static_cast<std::size_t>(i)],
                                  regs_[static_cast<std::size_t>(j)]),
                      it->second, gamma);
  }

  std::vector<std::vector<int>> regs_;
  std::vector<std::vector<ParityTerm>> singles_;
  std::unordered_map<std::uint64_t, std::vector<ParityTerm>> pairs_;
  std::vector<int> all_;
};

/** Binary colour registers compared edge by edge through one workspace. */
class ColorEdgePlan : public CircuitPlan {
 public:
  enum class Mix { PerRegister, Global, X };

  ColorEdgePlan(const MaxKCutInstance& inst, bool fuchs, Mix mix)
      : K_(inst.K), m_(ceil_log2(static_cast<std::uint64_t>(inst.K))),
        fuchs_(fuchs), mix_(mix) {
    for (int i = 0; i < inst.n; ++i)
      regs_.push_back(layout_.add_register("c" + std::to_string(i), m_));
    flag_ = layout_.add_line("flag");
    work_.push_back(flag_);
    if (fuchs_) {
      flag2_ = layout_.add_line("flag2");
      work_.push_back(flag2_);
    }
    for (int s = 0; s < mcx_scratch(m_); ++s) {
      scratch_.push_back(layout_.add_line("s" + std::to_string(s)));
      work_.push_back(scratch_.back());
    }
    layout_.mark_ancillas(work_);
    for (int i = 0; i < inst.n; ++i)
      for (int j = i + 1; j < inst.n; ++j)
        if (inst.W(i, j) != 0.0) edges_[key(i, j)] = inst.W(i, j);
    if (mix_ != Mix::X) {
      for (const auto& r : regs_) {
        Circuit pc = layout_.clone_layout();
        emit_uniform_range_prep(pc, r, static_cast<std::uint64_t>(K_), flag_, scratch_);
        reg_prep_.push_back(std::move(pc));
      }
    }
  }

  void prep(GateSink& out) const override {
    if (mix_ == Mix::X) {
      emit_h_layer(out, flatten(regs_));
      return;
    }
    for (const auto& pc : reg_prep_)
      for (const auto& g : pc.gates()) out.add(g);
  }

  void phase(GateSink& out, Angle gamma) const override {
    const int n = static_cast<int>(regs_.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edge(out, i, j, gamma);
  }

  void mixer(GateSink& out, Angle beta) const override {
    switch (mix_) {
      case Mix::X:
        emit_mixer_x(out, flatten(regs_), beta);
        return;
      case Mix::PerRegister:
        for (std::size_t r = 0; r < regs_.size(); ++r)
          emit_grover_mixer(out, reg_prep_[r], regs_[r], flag_, beta, scratch_);
        return;
      case Mix::Global: {
        Circuit pc = layout_.clone_layout();
        for (const auto& p : reg_prep_) pc.append(p);
        emit_grover_mixer(out, pc, flatten(regs_), flag_, beta, scratch_);
        return;
      }
    }
  }

  void phase_lnn(LinearLayout& l, Angle gamma) const override {
    run_register_network(
        l, 0, regs_, work_,
        [&](int i, int j) { return edges_.count(key(i, j)) > 0; },
        [&](int i, int j, GateSink& out) { edge(out, i, j, gamma); });
  }

 private:
  std::uint64_t key(int i, int j) const {
    return static_cast<std::uint64_t>(std::min(i, j)) * regs_.size() +
           static_cast<std::uint64_t>(std::max(i, j));
  }

  void edge(GateSink& out, int i, int j, Angle gamma) const {
    const auto it = edges_.find(key(i, j));
    if (it == edges_.end()) return;
    const double w = it->second;
    const auto& ci = regs_[static_cast<std::size_t>(i)];
    const auto& cj = regs_[static_cast<std::size_t>(j)];
    // c_j ^= c_i, then all ones iff equal.
    for (int b = 0; b < m_; ++b) out.cnot(ci[b], cj[b]);
    for (int q : cj) out.x(q);
    out.mcrz(cj, flag_, gamma.scaled(-w), scratch_);
    for (int q : cj) out.x(q);
    for (int b = 0; b < m_; ++b) out.cnot(ci[b], cj[b]);
    if (!fuchs_) return;
    const std::uint64_t top = std::uint64_t{1} << m_;
    for (std::uint64_t u = static_cast<std::uint64_t>(K_ - 1); u < top; ++u)
      for (std::uint64_t v = static_cast<std::uint64_t>(K_ - 1); v < top; ++v) {
        if (u == v) continue;
        emit_equality_flag(out, ci, u, flag_, scratch_);
        emit_equality_flag(out, cj, v, flag2_, scratch_);
        // Controlled phase on flag & flag2.
        out.crz(flag_, flag2_, gamma.scaled(-w));
        out.rz(flag_, gamma.scaled(-w / 2));
        emit_equality_flag(out, cj, v, flag2_, scratch_);
        emit_equality_flag(out, ci, u, flag_, scratch_);
      }
  }

  int K_, m_;
  bool fuchs_;
  Mix mix_;
  std::vector<std::vector<int>> regs_;
  int flag_ = -1, flag2_ = -1;
  std::vector<int> scratch_, work_;
  std::unordered_map<std::uint64_t, double> edges_;
  std::vector<Circuit> reg_prep_;
};

class FuncTspPlan : public CircuitPlan {
 public:
  FuncTspPlan(const TspInstance& inst, double A, bool global)
      : n_(inst.n), w_(ceil_log2(static_cast<std::uint64_t>(inst.n))), A_(A),
        global_(global), W_(inst.W) {
    for (int t = 0; t < n_; ++t)
      b_.push_back(layout_.add_register("b" + std::to_string(t), w_));
    copy_ = layout_.add_register("b0copy", w_);
    for (int i = 0; i < n_; ++i)
      e_.push_back(layout_.add_register("e" + std::to_string(i), w_));
    aux_ = layout_.add_register("aux", n_);
    flag_ = layout_.add_line("flag");
    layout_.mark_ancillas(copy_);
    for (const auto& e : e_) layout_.mark_ancillas(e);
    layout_.mark_ancillas(aux_);
    layout_.mark_ancilla(flag_);
    e_flat_ = flatten(e_);
    const std::vector<int> rest(aux_.begin() + 1, aux_.end());
    for (const auto& r : b_) {
      Circuit pc = layout_.clone_layout();
      emit_uniform_range_prep(pc, r, static_cast<std::uint64_t>(n_), aux_[0], rest);
      reg_prep_.push_back(std::move(pc));
    }
  }

  void prep(GateSink& out) const override {
    for (const auto& pc : reg_prep_)
      for (const auto& g : pc.gates()) out.add(g);
  }

  void phase(GateSink& out, Angle gamma) const override {
    count(out);
    out.mcrz(aux_, flag_, gamma.scaled(A_), e_flat_);
    count(out);
    for (int k = 0; k < w_; ++k) out.cnot(b_[0][k], copy_[k]);
    route(out);
    for (int i = 0; i < n_; ++i) {
      const auto& e = e_[static_cast<std::size_t>(i)];
      for (int j = 0; j < n_; ++j) {
        if (j == i) continue;
        for (int k = 0; k < w_; ++k)
          if (!((j >> (w_ - 1 - k)) & 1)) out.x(e[k]);
        out.mcrz(e, flag_, gamma.scaled(-W_(i, j)), aux_);
        for (int k = 0; k < w_; ++k)
          if (!((j >> (w_ - 1 - k)) & 1)) out.x(e[k]);
      }
    }
    route(out);
    for (int k = 0; k < w_; ++k) out.cnot(b_[0][k], copy_[k]);
  }

  void mixer(GateSink& out, Angle beta) const override {
    if (global_) {
      Circuit pc = layout_.clone_layout();
      for (const auto& p : reg_prep_) pc.append(p);
      emit_grover_mixer(out, pc, flatten(b_), flag_, beta, e_flat_);
      return;
    }
    for (std::size_t t = 0; t < b_.size(); ++t)
      emit_grover_mixer(out, reg_prep_[t], b_[t], flag_, beta, aux_);
  }

 private:
  // aux_i ^= (number of t with b_t == i) mod 2
  void count(GateSink& out) const {
    for (const auto& bt : b_)
      for (int i = 0; i < n_; ++i)
        emit_equality_flag(out, bt, static_cast<std::uint64_t>(i),
                           aux_[static_cast<std::size_t>(i)], e_flat_);
  }

  // e_i ^= b_{t+1} for each t with b_t == i
  void route(GateSink& out) const {
    for (int i = 0; i < n_; ++i)
      for (int t = 0; t < n_; ++t) {
        const int f = aux_[static_cast<std::size_t>(t)];
        std::vector<int> scratch;
        for (int a : aux_)
          if (a != f) scratch.push_back(a);
        const auto& bt = b_[static_cast<std::size_t>(t)];
        const auto& src = t + 1 < n_ ? b_[static_cast<std::size_t>(t) + 1] : copy_;
        emit_equality_flag(out, bt, static_cast<std::uint64_t>(i), f, scratch);
        emit_controlled_copy(out, f, src, e_[static_cast<std::size_t>(i)]);
        emit_equality_flag(out, bt, static_cast<std::uint64_t>(i), f, scratch);
      }
  }

  int n_, w_;
  double A_;
  bool global_;
  Eigen::MatrixXd W_;
  std::vector<std::vector<int>> b_, e_;
  std::vector<int> copy_, aux_, e_flat_;
  int flag_ = -1;
  std::vector<Circuit> reg_prep_;
};

class SetCoverOrPlan : public CircuitPlan {
 public:
  SetCoverOrPlan(const SetCoverInstance& inst, double A) : A_(A) {
    const int N = static_cast<int>(inst.subsets.size());
    x_ = layout_.add_register("x", N);
    flag_ = layout_.add_line("flag");
    layout_.mark_ancilla(flag_);
    elems_.resize(static_cast<std::size_t>(inst.n));
    for (int s = 0; s < N; ++s)
      for (int u : inst.subsets[static_cast<std::size_t>(s)])
        elems_[static_cast<std::size_t>(u)].push_back(x_[static_cast<std::size_t>(s)]);
    std::size_t mmax = 0;
    for (const auto& e : elems_) mmax = std::max(mmax, e.size());
    for (int s = 0; s < mcx_scratch(static_cast<int>(mmax)); ++s)
      scratch_.push_back(layout_.add_line("s" + std::to_string(s)));
    layout_.mark_ancillas(scratch_);
  }

  void prep(GateSink& out) const override { emit_h_layer(out, x_); }
  void mixer(GateSink& out, Angle beta) const override { emit_mixer_x(out, x_, beta); }
  void phase(GateSink& out, Angle gamma) const override {
    for (int q : x_) out.rz(q, gamma.scaled(-1.0));
    for (const auto& vars : elems_) {
      if (vars.empty()) continue;  // constant penalty
      emit_or_flag(out, vars, flag_, scratch_);
      // flag = 0 marks an uncovered element.
      out.rz(flag_, gamma.scaled(A_));
      emit_or_flag(out, vars, flag_, scratch_);
    }
  }

 private:
  double A_;
  std::vector<int> x_, scratch_;
  int flag_ = -1;
  std::vector<std::vector<int>> elems_;
};

class IlpDirectPlan : public CircuitPlan {
 public:
  IlpDirectPlan(const IlpInstance& inst, double A) : A_(A), obj_(inst.objective) {
    y_ = layout_.add_register("y", inst.n);
    int w = 1;
    for (const auto& c : inst.constraints) w = std::max(w, accumulator_width(c.coeffs, c.b));
    acc_ = layout_.add_register("acc", w);
    for (int s = 0; s < mcx_scratch(w); ++s)
      scratch_.push_back(layout_.add_line("s" + std::to_string(s)));
    layout_.mark_ancillas(acc_);
    layout_.mark_ancillas(scratch_);
    for (const auto& c : inst.constraints) {
      Circuit a = layout_.clone_layout();
      emit_signed_accumulator(a, c.coeffs, c.b, y_, acc_, scratch_);
      acc_circuits_.push_back(std::move(a));
    }
  }

  void prep(GateSink& out) const override { emit_h_layer(out, y_); }
  void mixer(GateSink& out, Angle beta) const override { emit_mixer_x(out, y_, beta); }
  void phase(GateSink& out, Angle gamma) const override {
    for (std::size_t i = 0; i < obj_.size(); ++i)
      if (obj_[i] != 0.0) out.rz(y_[i], gamma.scaled(-obj_[i]));
    const int w = static_cast<int>(acc_.size());
    const double top = std::ldexp(1.0, w - 1);
    for (const auto& a : acc_circuits_) {
      for (const auto& g : a.gates()) out.add(g);
      // A * s * (2^{w-1} - sum_k 2^k a_k) with s the sign bit.
      out.rz(acc_[0], gamma.scaled(A_ * (-top + (top - 1) / 2)));
      for (int k = 0; k + 1 < w; ++k)
        out.crz(acc_[0], acc_[static_cast<std::size_t>(w - 1 - k)],
                gamma.scaled(A_ * std::ldexp(1.0, k)));
      const Circuit inv = a.inverse();
      for (const auto& g : inv.gates()) out.add(g);
    }
  }

 private:
  double A_;
  std::vector<double> obj_;
  std::vector<int> y_, acc_, scratch_;
  std::vector<Circuit> acc_circuits_;
};

// ---------------------------------------------------------------------------
// Variant builders

std::vector<RegisterSpan> spans(const std::vector<std::vector<int>>& regs,
                                const std::string& prefix) {
  std::vector<RegisterSpan> s;
  for (std::size_t r = 0; r < regs.size(); ++r)
    s.push_back({prefix + std::to_string(r), regs[r]});
  return s;
}

std::vector<std::vector<int>> contiguous_regs(int count, int width) {
  std::vector<std::vector<int>> regs(static_cast<std::size_t>(count));
  for (int r = 0; r < count; ++r)
    for (int k = 0; k < width; ++k) regs[static_cast<std::size_t>(r)].push_back(r * width + k);
  return regs;
}

Circuit register_layout(const std::vector<RegisterSpan>& regs) {
  Circuit c;
  for (const auto& r : regs) c.add_register(r.name, r.width());
  return c;
}

void uniform_over(VariantAnsatz& a, std::function<bool(Index)> pred, double count) {
  const double amp = 1.0 / std::sqrt(count);
  a.reachable = pred;
  a.initial_amplitude = [pred, amp](Index x) { return pred(x) ? amp : 0.0; };
}

double sum_upper(const Eigen::MatrixXd& W) {
  double s = 0;
  for (int i = 0; i < W.rows(); ++i)
    for (int j = i + 1; j < W.cols(); ++j) s += W(i, j);
  return s;
}

VariantAnsatz build_maxkcut(Encoding enc, const MaxKCutInstance& inst,
                            const PenaltyConfig& pen) {
  inst.validate();
  VariantAnsatz a;
  const int n = inst.n, K = inst.K, m = ceil_log2(static_cast<std::uint64_t>(K));
  const double maxW = inst.W.size() ? inst.W.maxCoeff() : 0.0;
  const double A = pen.A.value_or(maxW > 0 ? 2.0 * maxW : 1.0);
  const Eigen::MatrixXd W = inst.W;
  const double sumW = sum_upper(W);
  const double pairs = n * (n - 1) / 2.0;
  auto all = [](Index) { return true; };

  if (enc == Encoding::X || enc == Encoding::XY) {
    const auto regs = contiguous_regs(n, K);
    a.registers = spans(regs, "b");
    a.state_qubits = n * K;
    Qubo q(n * K);
    if (enc == Encoding::X) {
      a.penalty = A;
      for (const auto& r : regs) {
        std::vector<std::pair<int, double>> t;
        for (int l : r) t.push_back({l, 1.0});
        q.add_square(t, -1.0, A);
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (W(i, j) != 0.0)
          for (int k = 0; k < K; ++k) q.add_quad(i * K + k, j * K + k, W(i, j));
    a.cost = [q](Index x) { return q.value(x); };
    a.feasible = [regs](Index x) {
      for (const auto& r : regs)
        if (!one_hot(x, r)) return false;
      return true;
    };
    const Circuit lay = register_layout(a.registers);
    if (enc == Encoding::X) {
      uniform_over(a, all, std::ldexp(1.0, n * K));
      a.mixer.kind = MixerKind::PerQubitX;
      a.eff_space_bits = n * K;
      a.span_bound = A * n * (K - 1.0) * (K - 1.0) + K * sumW;
      a.plan = std::make_shared<QuboPlan>(lay, to_ising(q), QuboPlan::Prep::Hadamard,
                                          QuboPlan::Mix::X);
    } else {
      uniform_over(a, a.feasible, std::pow(static_cast<double>(K), n));
      a.mixer.kind = MixerKind::OneHotXY;
      a.mixer.registers = regs;
      a.eff_space_bits = n * std::log2(static_cast<double>(K));
      a.span_bound = pairs * maxW;
      a.plan = std::make_shared<QuboPlan>(lay, to_ising(q), QuboPlan::Prep::WState,
                                          QuboPlan::Mix::XYRing, regs);
    }
    return a;
  }

  const auto regs = contiguous_regs(n, m);
  a.registers = spans(regs, "c");
  a.state_qubits = n * m;

  if (enc == Encoding::Hobo) {
    a.penalty = A;
    a.cost = [regs, W, A, K](Index x) {
      const auto c = values_of(x, regs);
      double e = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= K) e += A;
        for (std::size_t j = i + 1; j < c.size(); ++j)
          if (c[i] == c[j]) e += W(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
      return e;
    };
    a.feasible = [regs, K](Index x) {
      for (const auto& r : regs)
        if (register_value(x, r) >= static_cast<Index>(K)) return false;
      return true;
    };
    uniform_over(a, all, std::ldexp(1.0, n * m));
    a.mixer.kind = MixerKind::PerQubitX;
    a.eff_space_bits = n * m;
    a.span_bound = A * n * m + pairs * maxW;
    std::vector<double> valid(std::size_t{1} << m, 0.0);
    for (std::size_t v = static_cast<std::size_t>(K); v < valid.size(); ++v) valid[v] = A;
    const auto single = terms_from(walsh_coefficients(valid));
    std::vector<std::vector<ParityTerm>> singles(static_cast<std::size_t>(n), single);
    std::unordered_map<std::uint64_t, std::vector<ParityTerm>> pt;
    const double scale = std::ldexp(1.0, -m);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (W(i, j) == 0.0) continue;
        std::vector<ParityTerm> t;
        for (std::uint64_t T = 1; T < (std::uint64_t{1} << m); ++T)
          t.push_back({(T << m) | T, W(i, j) * scale});
        pt[static_cast<std::uint64_t>(i) * n + static_cast<std::uint64_t>(j)] = std::move(t);
      }
    a.plan = std::make_shared<HoboPlan>(register_layout(a.registers), regs,
                                        std::move(singles), std::move(pt));
    return a;
  }

  if (enc == Encoding::Fuchs) {
    a.cost = [regs, W, K](Index x) {
      auto c = values_of(x, regs);
      for (auto& v : c) v = std::min(v, K - 1);
      double e = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
          if (c[i] == c[j]) e += W(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      return e;
    };
    a.feasible = all;
    uniform_over(a, all, std::ldexp(1.0, n * m));
    a.mixer.kind = MixerKind::PerQubitX;
    a.eff_space_bits = n * m;
    a.span_bound = pairs * maxW;
    a.optimizable = false;
    a.plan = std::make_shared<ColorEdgePlan>(inst, true, ColorEdgePlan::Mix::X);
    return a;
  }

  // FUNC
  a.cost = [regs, W](Index x) {
    const auto c = values_of(x, regs);
    double e = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (c[i] == c[j]) e += W(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return e;
  };
  a.feasible = [regs, K](Index x) {
    for (const auto& r : regs)
      if (register_value(x, r) >= static_cast<Index>(K)) return false;
    return true;
  };
  uniform_over(a, a.feasible, std::pow(static_cast<double>(K), n));
  a.eff_space_bits = n * std::log2(static_cast<double>(K));
  a.span_bound = pairs * maxW;
  if (enc == Encoding::FuncGm) {
    a.mixer.kind = MixerKind::GroverGlobal;
  } else {
    a.mixer.kind = MixerKind::GroverPerRegister;
    a.mixer.registers = regs;
    a.mixer.valid = static_cast<std::uint64_t>(K);
  }
  a.plan = std::make_shared<ColorEdgePlan>(
      inst, false,
      enc == Encoding::FuncGm ? ColorEdgePlan::Mix::Global : ColorEdgePlan::Mix::PerRegister);
  return a;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

ResourceReport lowered_cost(const Gate& g, int fresh_base) {
  ResourceCounter rc;
  Lowering low(rc, fresh_base);
  low.add(g);
  return rc.report(0);
}

VariantAnsatz build_tsp(Encoding enc, const TspInstance& inst, const PenaltyConfig& pen) {
  inst.validate();
  VariantAnsatz a;
  const int n = inst.n, w = ceil_log2(static_cast<std::uint64_t>(n));
  const double maxW = inst.max_w();
  const Eigen::MatrixXd W = inst.W;
  const double base = maxW > 0 ? 2.0 * maxW : 1.0;

  if (enc == Encoding::X || enc == Encoding::XY || enc == Encoding::GM) {
    // b_{t,i} on line t*n + i: city i visited at time t.
    const auto rows = contiguous_regs(n, n);
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t)
      for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)].push_back(t * n + i);
    a.registers = spans(rows, "t");
    a.state_qubits = n * n;
    Qubo q(n * n);
    const double A1 = pen.A1.value_or(pen.A.value_or(base));
    const double A2 = pen.A2.value_or(pen.A.value_or(base));
    auto square = [&](const std::vector<int>& lines, double weight) {
      std::vector<std::pair<int, double>> t;
      for (int l : lines) t.push_back({l, 1.0});
      q.add_square(t, -1.0, weight);
    };
    if (enc == Encoding::X)
      for (const auto& r : rows) square(r, A1);
    if (enc != Encoding::GM)
      for (const auto& c : cols) square(c, enc == Encoding::X ? A2 : pen.A.value_or(base));
    for (int t = 0; t < n; ++t)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && W(i, j) != 0.0) q.add_quad(t * n + i, ((t + 1) % n) * n + j, W(i, j));
    a.cost = [q](Index x) { return q.value(x); };
    a.feasible = [rows, cols](Index x) {
      for (const auto& r : rows)
        if (!one_hot(x, r)) return false;
      for (const auto& c : cols)
        if (!one_hot(x, c)) return false;
      return true;
    };
    const Circuit lay = register_layout(a.registers);
    const double nn = n;
    if (enc == Encoding::X) {
      a.penalty = A1;
      uniform_over(a, [](Index) { return true; }, std::ldexp(1.0, n * n));
      a.mixer.kind = MixerKind::PerQubitX;
      a.eff_space_bits = n * n;
      a.span_bound = (A1 + A2) * nn * (nn - 1) * (nn - 1) + nn * nn * (nn - 1) * maxW;
      a.plan = std::make_shared<QuboPlan>(lay, to_ising(q), QuboPlan::Prep::Hadamard,
                                          QuboPlan::Mix::X);
    } else if (enc == Encoding::XY) {
      const double A = pen.A.value_or(base);
      a.penalty = A;
      uniform_over(a, [rows](Index x) {
        for (const auto& r : rows)
          if (!one_hot(x, r)) return false;
        return true;
      }, std::pow(nn, n));
      a.mixer.kind = MixerKind::OneHotXY;
      a.mixer.registers = rows;
      a.eff_space_bits = n * std::log2(nn);
      a.span_bound = 2 * A * nn * nn + nn * maxW;
      a.plan = std::make_shared<QuboPlan>(lay, to_ising(q), QuboPlan::Prep::WState,
                                          QuboPlan::Mix::XYRing, rows);
    } else {
      double fact = 1;
      for (int i = 2; i <= n; ++i) fact *= i;
      uniform_over(a, a.feasible, fact);
      a.mixer.kind = MixerKind::GroverGlobal;
      a.restricted_basis = true;
      a.basis = [n] {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::vector<Index> out;
        do {
          Index x = 0;
          for (int t = 0; t < n; ++t) x |= Index{1} << (t * n + p[static_cast<std::size_t>(t)]);
          out.push_back(x);
        } while (std::next_permutation(p.begin(), p.end()));
        std::sort(out.begin(), out.end());
        return out;
      };
      a.eff_space_bits = log2_factorial(n);
      a.span_bound = nn * maxW;
      // Permutation-superposition preparation is recorded by its gate and
      // depth scaling (n^3, n^2); the mixer runs it twice around an MCRZ.
      ResourceReport fp;
      fp.total_gates = ipow(n, 3);
      fp.depth = ipow(n, 2);
      Gate g{GateKind::MCRZ, {}, {}, Angle::constant(1.0)};
      for (int l = 0; l <= n * n; ++l) g.qubits.push_back(l);
      const ResourceReport mc = lowered_cost(g, n * n + 1);
      ResourceReport fm;
      fm.total_gates = 2 * fp.total_gates + 2LL * n * n + mc.total_gates;
      fm.two_qubit_gates = mc.two_qubit_gates;
      fm.param_gates = 1;
      fm.depth = 2 * fp.depth + 2 + mc.depth;
      a.plan = std::make_shared<QuboPlan>(lay, to_ising(q), QuboPlan::Prep::Formula,
                                          QuboPlan::Mix::Formula,
                                          std::vector<std::vector<int>>{}, fp, fm);
    }
    return a;
  }

  if (enc == Encoding::Mtz) {
    // b_ij (i != j), u_i (i >= 1) holding u_i - 1, slack xi_ij (i != j >= 1).
    const int wu = ceil_log2(static_cast<std::uint64_t>(n - 1));
    const int wx = ceil_log2(static_cast<std::uint64_t>(2 * n - 3));
    Circuit lay;
    std::vector<std::vector<int>> bvar(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j)
          bvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              lay.add_line("x" + std::to_string(i) + "_" + std::to_string(j));
    std::vector<std::vector<int>> u(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) u[static_cast<std::size_t>(i)] = lay.add_register("u" + std::to_string(i), wu);
    std::vector<std::vector<std::vector<int>>> xi(
        static_cast<std::size_t>(n), std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (i != j)
          xi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              lay.add_register("xi" + std::to_string(i) + "_" + std::to_string(j), wx);
    const int N = lay.num_lines();
    a.state_qubits = N;
    const double A1 = pen.A1.value_or(pen.A.value_or(base));
    const double A2 = pen.A2.value_or(pen.A.value_or(base));
    const double A3 = pen.A.value_or(base);
    a.penalty = A1;
    Qubo obj(N), pq(N);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) obj.add_linear(bvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], W(i, j));
    for (int j = 0; j < n; ++j) {
      std::vector<std::pair<int, double>> in, out;
      for (int i = 0; i < n; ++i)
        if (i != j) {
          in.push_back({bvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 1.0});
          out.push_back({bvar[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], 1.0});
        }
      pq.add_square(in, -1.0, A1);
      pq.add_square(out, -1.0, A2);
    }
    auto add_binary = [](std::vector<std::pair<int, double>>& t,
                         const std::vector<int>& reg, double sign) {
      const int wr = static_cast<int>(reg.size());
      for (int k = 0; k < wr; ++k) t.push_back({reg[static_cast<std::size_t>(k)], sign * std::ldexp(1.0, wr - 1 - k)});
    };
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (i == j) continue;
        std::vector<std::pair<int, double>> t;
        add_binary(t, u[static_cast<std::size_t>(i)], 1.0);
        add_binary(t, u[static_cast<std::size_t>(j)], -1.0);
        t.push_back({bvar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], static_cast<double>(n)});
        add_binary(t, xi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 1.0);
        pq.add_square(t, 1.0 - n, A3);
      }
    Qubo full = pq;
    for (int l = 0; l < N; ++l) full.add_linear(l, obj.linear()[static_cast<std::size_t>(l)]);
    a.cost = [full](Index x) { return full.value(x); };
    a.feasible = [pq](Index x) { return std::abs(pq.value(x)) < 1e-9; };
    uniform_over(a, [](Index) { return true; }, std::ldexp(1.0, std::min(N, 1000)));
    a.mixer.kind = MixerKind::PerQubitX;
    a.eff_space_bits = N;
    const double nn = n;
    a.span_bound = nn * nn * maxW + (A1 + A2) * nn * nn * nn + A3 * nn * nn * nn * nn;
    a.optimizable = false;
    for (int l = 0; l < N; ++l) a.registers.push_back({lay.lines()[static_cast<std::size_t>(l)].label, {l}});
    a.plan = std::make_shared<QuboPlan>(lay, to_ising(full), QuboPlan::Prep::Hadamard,
                                        QuboPlan::Mix::X);
    return a;
  }

  const auto regs = contiguous_regs(n, w);
  a.registers = spans(regs, "b");
  a.state_qubits = n * w;
  auto all_valid = [regs, n](Index x) {
    for (const auto& r : regs)
      if (register_value(x, r) >= static_cast<Index>(n)) return false;
    return true;
  };
  auto assignment = [regs](Index x) {
    std::vector<std::uint64_t> v;
    for (const auto& r : regs) v.push_back(register_value(x, r));
    return v;
  };
  a.feasible = [assignment, n](Index x) { return is_permutation(assignment(x), n); };

  if (enc == Encoding::Hobo) {
    const double A1 = pen.A1.value_or(pen.A.value_or(base));
    const double A2 = pen.A2.value_or(pen.A.value_or(base));
    a.penalty = A1;
    a.cost = [assignment, W, n, A1, A2](Index x) {
      const auto b = assignment(x);
      const auto un = static_cast<std::uint64_t>(n);
      double e = 0;
      for (int t = 0; t < n; ++t) {
        const auto bt = b[static_cast<std::size_t>(t)];
        const auto bn = b[static_cast<std::size_t>((t + 1) % n)];
        if (bt >= un) e += A1;
        for (int s = t + 1; s < n; ++s)
          if (bt == b[static_cast<std::size_t>(s)]) e += A2;
        if (bt < un && bn < un && bt != bn)
          e += W(static_cast<Eigen::Index>(bt), static_cast<Eigen::Index>(bn));
      }
      return e;
    };
    uniform_over(a, [](Index) { return true; }, std::ldexp(1.0, n * w));
    a.mixer.kind = MixerKind::PerQubitX;
    a.eff_space_bits = n * w;
    const double nn = n;
    a.span_bound = A1 * nn + A2 * nn * (nn - 1) / 2 + nn * maxW;
    const std::size_t S = std::size_t{1} << w;
    std::vector<std::vector<double>> single(static_cast<std::size_t>(n), std::vector<double>(S, 0.0));
    std::vector<double> valid(S, 0.0);
    for (std::size_t v = static_cast<std::size_t>(n); v < S; ++v) valid[v] = A1;
    const auto vc = walsh_coefficients(valid);
    for (auto& s : single)
      for (std::size_t k = 1; k < S; ++k) s[k] += vc[k];
    std::unordered_map<std::uint64_t, std::vector<double>> pc;
    auto pair_key = [n](int i, int j) {
      return static_cast<std::uint64_t>(i) * n + static_cast<std::uint64_t>(j);
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto& v = pc[pair_key(i, j)];
        v.assign(S * S, 0.0);
        for (std::size_t T = 1; T < S; ++T) v[(T << w) | T] += A2 * std::ldexp(1.0, -w);
      }
    for (int t = 0; t < n; ++t) {
      const int s = (t + 1) % n;
      const int hi = std::min(t, s), lo = std::max(t, s);
      std::vector<double> d(S * S, 0.0);
      for (std::size_t x = 0; x < static_cast<std::size_t>(n); ++x)
        for (std::size_t y = 0; y < static_cast<std::size_t>(n); ++y) {
          if (x == y) continue;
          // x is the high register's value.
          const auto from = static_cast<Eigen::Index>(hi == t ? x : y);
          const auto to = static_cast<Eigen::Index>(hi == t ? y : x);
          d[(x << w) | y] = W(from, to);
        }
      const auto c = walsh_coefficients(d);
      auto& v = pc[pair_key(hi, lo)];
      for (std::size_t k = 1; k < S * S; ++k) {
        const std::size_t mx = k >> w, my = k & (S - 1);
        if (my == 0) single[static_cast<std::size_t>(hi)][mx] += c[k];
        else if (mx == 0) single[static_cast<std::size_t>(lo)][my] += c[k];
        else v[k] += c[k];
      }
    }
    std::vector<std::vector<ParityTerm>> st;
    for (const auto& s : single) st.push_back(terms_from(s));
    std::unordered_map<std::uint64_t, std::vector<ParityTerm>> pt;
    for (const auto& [k, v] : pc) {
      auto t = terms_from(v);
      if (!t.empty()) pt[k] = std::move(t);
    }
    a.plan = std::make_shared<HoboPlan>(register_layout(a.registers), regs,
                                        std::move(st), std::move(pt));
    return a;
  }

  // FUNC-GM / FUNC-COM
  const double A = pen.A.value_or(maxW > 0 ? 2.0 * n * maxW : 1.0);
  a.penalty = A;
  a.cost = [assignment, W, n, w, A](Index x) {
    const auto b = assignment(x);
    double e = parity_accepts(b, n) ? 0.0 : A;
    for (int i = 0; i < n; ++i) {
      std::uint64_t edge = 0;
      for (int t = 0; t < n; ++t)
        if (b[static_cast<std::size_t>(t)] == static_cast<std::uint64_t>(i))
          edge ^= b[static_cast<std::size_t>((t + 1) % n)];
      if (edge < static_cast<std::uint64_t>(n) && edge != static_cast<std::uint64_t>(i))
        e += W(i, static_cast<Eigen::Index>(edge));
    }
    (void)w;
    return e;
  };
  uniform_over(a, all_valid, std::pow(static_cast<double>(n), n));
  a.eff_space_bits = n * std::log2(static_cast<double>(n));
  a.span_bound = n * maxW + A;
  if (enc == Encoding::FuncGm) {
    a.mixer.kind = MixerKind::GroverGlobal;
  } else {
    a.mixer.kind = MixerKind::GroverPerRegister;
    a.mixer.registers = regs;
    a.mixer.valid = static_cast<std::uint64_t>(n);
  }
  a.plan = std::make_shared<FuncTspPlan>(inst, A, enc == Encoding::FuncGm);
  return a;
}

VariantAnsatz build_setcover(Encoding enc, const SetCoverInstance& inst,
                             const PenaltyConfig& pen) {
  inst.validate();
  VariantAnsatz a;
  const int N = static_cast<int>(inst.subsets.size());
  const double A = pen.A.value_or(2.0);
  a.penalty = A;
  const auto mult = inst.multiplicity();
  std::vector<std::vector<int>> elems(static_cast<std::size_t>(inst.n));
  for (int s = 0; s < N; ++s)
    for (int u : inst.subsets[static_cast<std::size_t>(s)]) elems[static_cast<std::size_t>(u)].push_back(s);
  auto uncovered = [elems](Index x) {
    int c = 0;
    for (const auto& e : elems) {
      bool hit = false;
      for (int s : e) hit = hit || ((x >> s) & 1);
      c += !hit;
    }
    return c;
  };
  a.mixer.kind = MixerKind::PerQubitX;

  if (enc == Encoding::FuncOr) {
    a.state_qubits = N;
    a.registers.push_back({"x", contiguous_regs(1, N)[0]});
    a.cost = [uncovered, A](Index x) {
      return static_cast<double>(std::popcount(x)) + A * uncovered(x);
    };
    a.feasible = [uncovered](Index x) { return uncovered(x) == 0; };
    uniform_over(a, [](Index) { return true; }, std::ldexp(1.0, N));
    a.eff_space_bits = N;
    a.span_bound = N + A * inst.n;
    a.plan = std::make_shared<SetCoverOrPlan>(inst, A);
    return a;
  }

  Circuit lay;
  const auto x = lay.add_register("x", N);
  a.registers.push_back({"x", x});
  Qubo obj(0);
  std::vector<std::vector<int>> slack(static_cast<std::size_t>(inst.n));
  double span = N;
  for (int u = 0; u < inst.n; ++u) {
    const int M = mult[static_cast<std::size_t>(u)];
    const int wu = M > 1 ? ceil_log2(static_cast<std::uint64_t>(M)) : 0;
    if (wu > 0) {
      slack[static_cast<std::size_t>(u)] = lay.add_register("xi" + std::to_string(u), wu);
      a.registers.push_back({"xi" + std::to_string(u), slack[static_cast<std::size_t>(u)]});
    }
    const double worst = std::max(static_cast<double>(M - 1), std::ldexp(1.0, wu));
    span += A * worst * worst;
  }
  const int Q = lay.num_lines();
  a.state_qubits = Q;
  Qubo pq(Q);
  for (int u = 0; u < inst.n; ++u) {
    std::vector<std::pair<int, double>> t;
    for (int s : elems[static_cast<std::size_t>(u)]) t.push_back({s, 1.0});
    const auto& sl = slack[static_cast<std::size_t>(u)];
    const int wu = static_cast<int>(sl.size());
    for (int k = 0; k < wu; ++k) t.push_back({sl[static_cast<std::size_t>(k)], -std::ldexp(1.0, wu - 1 - k)});
    pq.add_square(t, -1.0, A);
  }
  Qubo full = pq;
  for (int s = 0; s < N; ++s) full.add_linear(s, 1.0);
  a.cost = [full](Index v) { return full.value(v); };
  a.feasible = [pq](Index v) { return std::abs(pq.value(v)) < 1e-9; };
  uniform_over(a, [](Index) { return true; }, std::ldexp(1.0, Q));
  a.eff_space_bits = Q;
  a.span_bound = span;
  a.plan = std::make_shared<QuboPlan>(lay, to_ising(full), QuboPlan::Prep::Hadamard,
                                      QuboPlan::Mix::X);
  return a;
}

VariantAnsatz build_ilp(const IlpInstance& inst, const PenaltyConfig& pen) {
  inst.validate();
  VariantAnsatz a;
  double maxc = 0;
  for (double c : inst.objective) maxc = std::max(maxc, std::abs(c));
  const double A = pen.A.value_or(maxc > 0 ? 2.0 * maxc : 2.0);
  a.penalty = A;
  a.state_qubits = inst.n;
  a.registers.push_back({"y", contiguous_regs(1, inst.n)[0]});
  const int n = inst.n;
  auto ys = [n](Index x) {
    std::vector<int> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = static_cast<int>((x >> i) & 1);
    return y;
  };
  a.cost = [inst, A, ys](Index x) {
    const auto y = ys(x);
    double e = 0;
    for (std::size_t i = 0; i < inst.objective.size(); ++i) e += inst.objective[i] * y[i];
    for (const auto& c : inst.constraints) e += A * std::max(0LL, -ilp_slack(c, y));
    return e;
  };
  a.feasible = [inst, ys](Index x) {
    const auto y = ys(x);
    for (const auto& c : inst.constraints)
      if (ilp_slack(c, y) < 0) return false;
    return true;
  };
  uniform_over(a, [](Index) { return true; }, std::ldexp(1.0, n));
  a.mixer.kind = MixerKind::PerQubitX;
  a.eff_space_bits = n;
  double span = 0;
  for (double c : inst.objective) span += std::abs(c);
  for (const auto& c : inst.constraints) {
    long long pos = 0;
    for (long long v : c.coeffs) pos += std::max(0LL, v);
    span += A * std::max(0LL, pos - c.b);
  }
  a.span_bound = span;
  a.plan = std::make_shared<IlpDirectPlan>(inst, A);
  return a;
}

class GateBuffer : public GateSink {
 public:
  void add(const Gate& g) override { gates.push_back(g); }
  std::vector<Gate> gates;
};

}  // namespace

// ---------------------------------------------------------------------------

const char* problem_name(ProblemKind p) {
  switch (p) {
    case ProblemKind::MaxKCut: return "maxkcut";
    case ProblemKind::Tsp: return "tsp";
    case ProblemKind::SetCover: return "setcover";
    case ProblemKind::Ilp: return "ilp";
  }
  return "?";
}

ProblemKind problem_of(const Instance& inst) {
  switch (inst.index()) {
    case 0: return ProblemKind::MaxKCut;
    case 1: return ProblemKind::Tsp;
    case 2: return ProblemKind::SetCover;
    default: return ProblemKind::Ilp;
  }
}

std::vector<VariantId> variants_for(ProblemKind p) {
  using E = Encoding;
  std::vector<E> e;
  switch (p) {
    case ProblemKind::MaxKCut: e = {E::X, E::XY, E::Hobo, E::Fuchs, E::Func, E::FuncGm}; break;
    case ProblemKind::Tsp: e = {E::X, E::XY, E::GM, E::Mtz, E::Hobo, E::FuncGm, E::FuncCom}; break;
    case ProblemKind::SetCover: e = {E::SlackQubo, E::FuncOr}; break;
    case ProblemKind::Ilp: e = {E::FuncDirect}; break;
  }
  std::vector<VariantId> v;
  for (E x : e) v.push_back({p, x});
  return v;
}

std::string VariantId::str() const {
  return std::string(problem_name(problem)) + ":" + encoding_name(encoding);
}

VariantId VariantId::parse(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw DomainError("variant must be problem:encoding: " + s);
  const std::string p = s.substr(0, colon);
  std::string e = s.substr(colon + 1);
  std::optional<ProblemKind> pk;
  for (auto k : {ProblemKind::MaxKCut, ProblemKind::Tsp, ProblemKind::SetCover, ProblemKind::Ilp})
    if (p == problem_name(k)) pk = k;
  if (!pk) throw DomainError("unknown problem: " + p);
  if (*pk == ProblemKind::MaxKCut && e == "func-com") e = "func";
  for (const auto& v : variants_for(*pk))
    if (e == encoding_name(v.encoding)) return v;
  throw DomainError("unknown encoding for " + p + ": " + e);
}

void CircuitPlan::prep_lnn(LinearLayout& l) const {
  GreedyRouter r(l);
  prep(r);
}

void CircuitPlan::phase_lnn(LinearLayout& l, Angle gamma) const {
  GreedyRouter r(l);
  phase(r, gamma);
}

void CircuitPlan::mixer_lnn(LinearLayout& l, Angle beta) const {
  GreedyRouter r(l);
  mixer(r, beta);
}

VariantAnsatz build_ansatz(const VariantId& id, const Instance& inst,
                           const PenaltyConfig& pen) {
  if (problem_of(inst) != id.problem)
    throw DomainError("variant " + id.str() + " does not match instance kind " +
                      instance_kind(inst));
  VariantAnsatz a;
  switch (id.problem) {
    case ProblemKind::MaxKCut:
      a = build_maxkcut(id.encoding, std::get<MaxKCutInstance>(inst), pen);
      break;
    case ProblemKind::Tsp:
      a = build_tsp(id.encoding, std::get<TspInstance>(inst), pen);
      break;
    case ProblemKind::SetCover:
      a = build_setcover(id.encoding, std::get<SetCoverInstance>(inst), pen);
      break;
    case ProblemKind::Ilp:
      a = build_ilp(std::get<IlpInstance>(inst), pen);
      break;
  }
  a.id = id;
  return a;
}

Circuit qaoa_circuit(const VariantAnsatz& a, int p) {
  Circuit c = a.plan->layout().clone_layout();
  a.plan->prep(c);
  for (int l = 1; l <= p; ++l) {
    a.plan->phase(c, Angle::param(gamma_ref(l)));
    a.plan->mixer(c, Angle::param(beta_ref(l)));
  }
  return c;
}

int emit_qaoa(const VariantAnsatz& a, GateSink& out, Coupling c, int p, bool restore) {
  const CircuitPlan& plan = *a.plan;
  if (c == Coupling::AllToAll) {
    Lowering low(out, plan.num_lines());
    plan.prep(low);
    for (int l = 1; l <= p; ++l) {
      plan.phase(low, Angle::param(gamma_ref(l)));
      plan.mixer(low, Angle::param(beta_ref(l)));
    }
    return plan.num_lines() + low.fresh_used();
  }
  LinearLayout layout(plan.num_lines(), out);
  plan.prep_lnn(layout);
  for (int l = 1; l <= p; ++l) {
    plan.phase_lnn(layout, Angle::param(gamma_ref(l)));
    plan.mixer_lnn(layout, Angle::param(beta_ref(l)));
  }
  if (restore) layout.restore();
  return layout.size();
}

Circuit lowered_circuit(const VariantAnsatz& a, Coupling c, int p, bool restore) {
  GateBuffer buf;
  const int lines = emit_qaoa(a, buf, c, p, restore);
  Circuit out = a.plan->layout().clone_layout();
  while (out.num_lines() < lines)
    out.mark_ancilla(out.add_line("pool_" + std::to_string(out.num_lines())));
  for (const auto& g : buf.gates) out.add(g);
  return out;
}

Tabulation tabulate(const VariantAnsatz& a, Coupling c) {
  ResourceCounter rc(c);
  int lines = 0;
  if (c == Coupling::LNN) {
    SwapExpander se(rc);
    lines = emit_qaoa(a, se, c, 1);
  } else {
    lines = emit_qaoa(a, rc, c, 1);
  }
  Tabulation t;
  t.report = rc.report(lines);
  for (const auto& f : {a.plan->formula_prep(), a.plan->formula_mixer()}) {
    t.report.total_gates += f.total_gates;
    t.report.two_qubit_gates += f.two_qubit_gates;
    t.report.param_gates += f.param_gates;
    t.report.depth += f.depth;
  }
  t.formula_parts = a.plan->has_formula_parts();
  t.span_bound = a.span_bound;
  t.eff_space_bits = a.eff_space_bits;
  return t;
}

long long fuchs_fixing_count(int K) {
  const long long top = 1LL << ceil_log2(static_cast<std::uint64_t>(K));
  const long long r = top - (K - 1);
  return r * (r - 1);
}

long long xqaoa_closed_form_gates(const MaxKCutInstance& inst) {
  const long long n = inst.n, K = inst.K;
  long long edges = 0;
  for (int i = 0; i < inst.n; ++i)
    for (int j = i + 1; j < inst.n; ++j) edges += inst.W(i, j) != 0.0;
  const long long zz = n * K * (K - 1) / 2 + K * edges;
  return 5 * n * K + 3 * zz;
}

}  // namespace fq
