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

#include "funcqaoa/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace fq {

double ParamValues::value(const Angle& a) const {
  if (!a.ref) return a.coeff;
  const auto& v = a.ref->family == ParamFamily::Gamma ? gamma : beta;
  const int l = a.ref->layer;
  if (l < 1 || l > static_cast<int>(v.size()))
    throw CircuitError("parameter layer out of range");
  return a.coeff * v[l - 1];
}

namespace {

struct KindInfo {
  GateKind kind;
  const char* name;
};

constexpr KindInfo kKinds[] = {
    {GateKind::X, "X"},       {GateKind::H, "H"},     {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},     {GateKind::CNOT, "CNOT"},
    {GateKind::SWAP, "SWAP"}, {GateKind::CH, "CH"},   {GateKind::CRY, "CRY"},
    {GateKind::CRZ, "CRZ"},   {GateKind::MCX, "MCX"}, {GateKind::MCRZ, "MCRZ"},
};

int fixed_arity(GateKind k) {
  switch (k) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::RY:
    case GateKind::RZ:
      return 1;
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::CH:
    case GateKind::CRY:
    case GateKind::CRZ:
      return 2;
    default:
      return -1;
  }
}

}  // namespace

const char* kind_name(GateKind k) {
  for (const auto& e : kKinds)
    if (e.kind == k) return e.name;
  return "?";
}

std::optional<GateKind> kind_from_name(const std::string& s) {
  for (const auto& e : kKinds)
    if (s == e.name) return e.kind;
  return std::nullopt;
}

bool is_rotation(GateKind k) {
  return k == GateKind::RY || k == GateKind::RZ || k == GateKind::CRY ||
         k == GateKind::CRZ || k == GateKind::MCRZ;
}

bool is_basic(GateKind k) {
  return k == GateKind::X || k == GateKind::H || k == GateKind::RY ||
         k == GateKind::RZ || k == GateKind::CNOT;
}

// ---------------------------------------------------------------------------

void GateSink::x(int q) { add({GateKind::X, {q}, {}, {}}); }
void GateSink::h(int q) { add({GateKind::H, {q}, {}, {}}); }
void GateSink::ry(int q, Angle a) { add({GateKind::RY, {q}, {}, a}); }
void GateSink::rz(int q, Angle a) { add({GateKind::RZ, {q}, {}, a}); }
void GateSink::cnot(int c, int t) { add({GateKind::CNOT, {c, t}, {}, {}}); }
void GateSink::swap(int a, int b) { add({GateKind::SWAP, {a, b}, {}, {}}); }
void GateSink::ch(int c, int t) { add({GateKind::CH, {c, t}, {}, {}}); }
void GateSink::cry(int c, int t, Angle a) {
  add({GateKind::CRY, {c, t}, {}, a});
}
void GateSink::crz(int c, int t, Angle a) {
  add({GateKind::CRZ, {c, t}, {}, a});
}

void GateSink::mcx(const std::vector<int>& controls, int t,
                   const std::vector<int>& scratch) {
  Gate g{GateKind::MCX, {}, scratch, {}};
  g.qubits.assign(controls.begin(), controls.end());
  g.qubits.push_back(t);
  add(g);
}

void GateSink::mcrz(const std::vector<int>& controls, int t, Angle a,
                    const std::vector<int>& scratch) {
  Gate g{GateKind::MCRZ, {}, scratch, a};
  g.qubits.assign(controls.begin(), controls.end());
  g.qubits.push_back(t);
  add(g);
}

// ---------------------------------------------------------------------------

Circuit::Circuit(int num_lines) {
  for (int i = 0; i < num_lines; ++i) add_line("q" + std::to_string(i));
}

int Circuit::add_line(const std::string& label) {
  const int idx = num_lines();
  lines_.push_back({idx, label});
  return idx;
}

std::vector<int> Circuit::add_register(const std::string& name, int width) {
  std::vector<int> out;
  for (int i = 0; i < width; ++i)
    out.push_back(add_line(name + "_" + std::to_string(i)));
  return out;
}

void Circuit::mark_ancilla(int line) {
  if (line < 0 || line >= num_lines()) throw CircuitError("no such line");
  if (std::find(ancillas_.begin(), ancillas_.end(), line) == ancillas_.end())
    ancillas_.push_back(line);
}

void Circuit::mark_ancillas(const std::vector<int>& lines) {
  for (int l : lines) mark_ancilla(l);
}

void Circuit::add(const Gate& g) {
  if (g.qubits.empty()) throw CircuitError("gate without qubits");
  const int ar = fixed_arity(g.kind);
  if (ar > 0 && static_cast<int>(g.qubits.size()) != ar)
    throw CircuitError(std::string("wrong arity for ") + kind_name(g.kind));
  for (std::size_t i = 0; i < g.qubits.size(); ++i) {
    const int q = g.qubits[i];
    if (q < 0 || q >= num_lines())
      throw CircuitError("gate on unknown line " + std::to_string(q));
    for (std::size_t j = 0; j < i; ++j)
      if (g.qubits[j] == q) throw CircuitError("repeated qubit in gate");
  }
  for (int s : g.scratch) {
    if (s < 0 || s >= num_lines()) throw CircuitError("scratch line unknown");
    if (std::find(g.qubits.begin(), g.qubits.end(), s) != g.qubits.end())
      throw CircuitError("scratch line overlaps gate operands");
  }
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.num_lines() > num_lines())
    throw CircuitError("appended circuit has more lines");
  for (const auto& g : other.gates_) add(g);
}

Circuit Circuit::clone_layout() const {
  Circuit c;
  c.lines_ = lines_;
  c.ancillas_ = ancillas_;
  return c;
}

Gate inverse_gate(const Gate& g) {
  Gate r = g;
  if (is_rotation(g.kind)) r.angle = -g.angle;
  return r;
}

Circuit Circuit::inverse() const {
  Circuit c = clone_layout();
  c.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
    c.gates_.push_back(inverse_gate(*it));
  return c;
}

const char* coupling_name(Coupling c) {
  return c == Coupling::AllToAll ? "all-to-all" : "lnn";
}

std::optional<Coupling> coupling_from_name(const std::string& s) {
  if (s == "all-to-all" || s == "all" || s == "a2a") return Coupling::AllToAll;
  if (s == "lnn" || s == "LNN") return Coupling::LNN;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

int scratch_needed(const Gate& g) {
  if (g.kind != GateKind::MCX && g.kind != GateKind::MCRZ) return 0;
  const int k = g.num_controls();
  return k >= 3 ? k - 1 : 0;
}

Lowering::Lowering(GateSink& out, int fresh_base)
    : out_(out), fresh_base_(fresh_base) {}

void Lowering::toffoli(int c0, int c1, int t) {
  const double q = std::numbers::pi / 4;
  out_.h(t);
  out_.cnot(c1, t);
  out_.rz(t, Angle::constant(-q));
  out_.cnot(c0, t);
  out_.rz(t, Angle::constant(q));
  out_.cnot(c1, t);
  out_.rz(t, Angle::constant(-q));
  out_.cnot(c0, t);
  out_.rz(c1, Angle::constant(q));
  out_.rz(t, Angle::constant(q));
  out_.h(t);
  out_.cnot(c0, c1);
  out_.rz(c0, Angle::constant(q));
  out_.rz(c1, Angle::constant(-q));
  out_.cnot(c0, c1);
}

// Toffoli up to a relative phase. The sequence is its own inverse, so a
// compute/uncompute pair cancels the phases exactly.
void Lowering::rccx(int c0, int c1, int t, bool /*inverse*/) {
  const double q = std::numbers::pi / 4;
  out_.ry(t, Angle::constant(q));
  out_.cnot(c1, t);
  out_.ry(t, Angle::constant(q));
  out_.cnot(c0, t);
  out_.ry(t, Angle::constant(-q));
  out_.cnot(c1, t);
  out_.ry(t, Angle::constant(-q));
}

void Lowering::lower_mcx(const Gate& g) {
  const int k = g.num_controls();
  const int t = g.target();
  if (k == 0) {
    out_.x(t);
    return;
  }
  if (k == 1) {
    out_.cnot(g.qubits[0], t);
    return;
  }
  if (k == 2) {
    toffoli(g.qubits[0], g.qubits[1], t);
    return;
  }
  std::vector<int> anc;
  const int need = k - 1;
  if (static_cast<int>(g.scratch.size()) >= need) {
    anc.assign(g.scratch.begin(), g.scratch.begin() + need);
  } else {
    for (int i = 0; i < need; ++i) anc.push_back(fresh_base_ + i);
    fresh_used_ = std::max(fresh_used_, need);
  }
  rccx(g.qubits[0], g.qubits[1], anc[0], false);
  for (int i = 1; i < need; ++i) rccx(anc[i - 1], g.qubits[i + 1], anc[i], false);
  out_.cnot(anc[need - 1], t);
  for (int i = need - 1; i >= 1; --i)
    rccx(anc[i - 1], g.qubits[i + 1], anc[i], true);
  rccx(g.qubits[0], g.qubits[1], anc[0], true);
}

void Lowering::add(const Gate& g) {
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CNOT:
      out_.add(g);
      return;
    case GateKind::SWAP: {
      const int a = g.qubits[0], b = g.qubits[1];
      out_.cnot(a, b);
      out_.cnot(b, a);
      out_.cnot(a, b);
      return;
    }
    case GateKind::CH: {
      const int c = g.qubits[0], t = g.qubits[1];
      out_.ry(t, Angle::constant(std::numbers::pi / 4));
      out_.cnot(c, t);
      out_.ry(t, Angle::constant(-std::numbers::pi / 4));
      return;
    }
    case GateKind::CRY: {
      const int c = g.qubits[0], t = g.qubits[1];
      out_.ry(t, g.angle.scaled(0.5));
      out_.cnot(c, t);
      out_.ry(t, g.angle.scaled(-0.5));
      out_.cnot(c, t);
      return;
    }
    case GateKind::CRZ: {
      const int c = g.qubits[0], t = g.qubits[1];
      out_.rz(t, g.angle.scaled(0.5));
      out_.cnot(c, t);
      out_.rz(t, g.angle.scaled(-0.5));
      out_.cnot(c, t);
      return;
    }
    case GateKind::MCX:
      lower_mcx(g);
      return;
    case GateKind::MCRZ: {
      Gate m = g;
      m.kind = GateKind::MCX;
      lower_mcx(m);
      out_.rz(g.target(), g.angle);
      lower_mcx(m);
      return;
    }
  }
}

// ---------------------------------------------------------------------------

ResourceCounter::ResourceCounter(Coupling coupling) : coupling_(coupling) {}

void ResourceCounter::add(const Gate& g) {
  if (!is_basic(g.kind))
    throw CircuitError(std::string("undecomposed gate ") + kind_name(g.kind));
  long long layer = 0;
  for (int q : g.qubits) {
    if (q >= static_cast<int>(front_.size())) front_.resize(q + 1, 0);
    layer = std::max(layer, front_[q]);
  }
  ++layer;
  for (int q : g.qubits) front_[q] = layer;
  r_.depth = std::max(r_.depth, layer);
  ++r_.total_gates;
  if (g.qubits.size() == 2) {
    ++r_.two_qubit_gates;
    if (coupling_ == Coupling::LNN && std::abs(g.qubits[0] - g.qubits[1]) != 1)
      throw CircuitError("non-adjacent two-qubit gate in LNN circuit");
  }
  if (is_rotation(g.kind) && g.angle.is_param()) ++r_.param_gates;
}

ResourceReport ResourceCounter::report(long long qubits) const {
  ResourceReport r = r_;
  r.qubits = qubits;
  return r;
}

void SwapExpander::add(const Gate& g) {
  if (g.kind == GateKind::SWAP) {
    out_.cnot(g.qubits[0], g.qubits[1]);
    out_.cnot(g.qubits[1], g.qubits[0]);
    out_.cnot(g.qubits[0], g.qubits[1]);
  } else {
    out_.add(g);
  }
}

namespace {

class AdjacencyCheck : public GateSink {
 public:
  explicit AdjacencyCheck(GateSink& out) : out_(out) {}
  void add(const Gate& g) override {
    if (g.qubits.size() == 2 && std::abs(g.qubits[0] - g.qubits[1]) != 1)
      throw CircuitError("LNN decomposition needs adjacent operands; route "
                         "the circuit first");
    out_.add(g);
  }

 private:
  GateSink& out_;
};

int fresh_needed(const Circuit& c) {
  int need = 0;
  for (const auto& g : c.gates()) {
    const int s = scratch_needed(g);
    if (s > static_cast<int>(g.scratch.size())) need = std::max(need, s);
  }
  return need;
}

}  // namespace

Circuit decompose(const Circuit& circuit, Coupling coupling) {
  Circuit out = circuit.clone_layout();
  const int base = out.num_lines();
  const int fresh = fresh_needed(circuit);
  for (int i = 0; i < fresh; ++i) out.mark_ancilla(out.add_line("pool_" + std::to_string(i)));
  if (coupling == Coupling::LNN) {
    AdjacencyCheck check(out);
    Lowering low(check, base);
    for (const auto& g : circuit.gates()) low.add(g);
  } else {
    Lowering low(out, base);
    for (const auto& g : circuit.gates()) low.add(g);
  }
  return out;
}

ResourceReport resources(const Circuit& circuit, Coupling coupling) {
  ResourceCounter counter(coupling);
  for (const auto& g : circuit.gates()) counter.add(g);
  return counter.report(circuit.num_lines());
}

ResourceReport measure(const Circuit& circuit, Coupling coupling) {
  ResourceCounter counter(coupling);
  const int base = circuit.num_lines();
  Lowering low(counter, base);
  for (const auto& g : circuit.gates()) low.add(g);
  return counter.report(base + low.fresh_used());
}

// ---------------------------------------------------------------------------

std::vector<double> walsh_coefficients(const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw CircuitError("diagonal length must be a power of two");
  std::vector<double> c = values;
  for (std::size_t len = 1; len < n; len <<= 1)
    for (std::size_t i = 0; i < n; i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        const double a = c[j], b = c[j + len];
        c[j] = a + b;
        c[j + len] = a - b;
      }
  for (auto& v : c) v /= static_cast<double>(n);
  return c;
}

namespace {

std::uint64_t gray_rank(std::uint64_t g) {
  for (int s = 1; s < 64; s <<= 1) g ^= g >> s;
  return g;
}

}  // namespace

void emit_parity_terms(GateSink& out, const std::vector<int>& lines,
                       std::vector<ParityTerm> terms, Angle scale) {
  const int k = static_cast<int>(lines.size());
  auto line_of_bit = [&](int b) { return lines[k - 1 - b]; };
  std::erase_if(terms, [](const ParityTerm& t) { return t.mask == 0; });
  for (const auto& t : terms)
    if (k < 64 && (t.mask >> k) != 0)
      throw CircuitError("parity mask wider than register");
  auto top = [](std::uint64_t m) { return 63 - std::countl_zero(m); };
  std::sort(terms.begin(), terms.end(), [&](const ParityTerm& a, const ParityTerm& b) {
    const int ta = top(a.mask), tb = top(b.mask);
    if (ta != tb) return ta < tb;
    const std::uint64_t la = a.mask ^ (std::uint64_t{1} << ta);
    const std::uint64_t lb = b.mask ^ (std::uint64_t{1} << tb);
    return gray_rank(la) < gray_rank(lb);
  });
  auto flip_to = [&](int t, std::uint64_t diff) {
    for (; diff; diff &= diff - 1) out.cnot(line_of_bit(std::countr_zero(diff)), t);
  };
  std::size_t i = 0;
  while (i < terms.size()) {
    const int j = top(terms[i].mask);
    const int t = line_of_bit(j);
    std::uint64_t cur = 0;
    for (; i < terms.size() && top(terms[i].mask) == j; ++i) {
      const std::uint64_t low = terms[i].mask ^ (std::uint64_t{1} << j);
      flip_to(t, cur ^ low);
      cur = low;
      out.rz(t, scale.scaled(2.0 * terms[i].coeff));
    }
    flip_to(t, cur);
  }
}

void emit_parity_phases(GateSink& out, const std::vector<int>& lines,
                        const std::vector<double>& coeffs, Angle scale,
                        bool skip_zero) {
  constexpr double eps = 1e-12;
  std::vector<ParityTerm> terms;
  for (std::size_t s = 1; s < coeffs.size(); ++s)
    if (!skip_zero || std::abs(coeffs[s]) > eps) terms.push_back({s, coeffs[s]});
  emit_parity_terms(out, lines, std::move(terms), scale);
}

void emit_gray_diagonal(GateSink& out, const std::vector<int>& lines,
                        const std::vector<double>& values, Angle scale,
                        bool skip_zero) {
  if (lines.empty()) throw CircuitError("gray_diagonal needs k >= 1");
  if (values.size() != (std::size_t{1} << lines.size()))
    throw CircuitError("gray_diagonal needs 2^k values");
  for (double v : values)
    if (!std::isfinite(v)) throw CircuitError("non-finite diagonal value");
  emit_parity_phases(out, lines, walsh_coefficients(values), scale, skip_zero);
}

Circuit gray_diagonal(const std::vector<int>& lines,
                      const std::vector<double>& values, Angle scale,
                      bool skip_zero) {
  int n = 0;
  for (int l : lines) n = std::max(n, l + 1);
  Circuit c(n);
  emit_gray_diagonal(c, lines, values, scale, skip_zero);
  return c;
}

// ---------------------------------------------------------------------------

std::string angle_to_text(const Angle& a) {
  std::ostringstream os;
  os.precision(17);
  if (!a.ref) {
    os << a.coeff;
    return os.str();
  }
  const char* sym = a.ref->family == ParamFamily::Gamma ? "γ" : "β";
  if (a.coeff != 1.0) os << a.coeff << "*";
  os << sym << "_" << a.ref->layer;
  return os.str();
}

Angle angle_from_text(const std::string& s) {
  auto parse_ref = [](const std::string& t) -> std::optional<ParamRef> {
    const std::string g = "γ_", b = "β_";
    if (t.rfind(g, 0) == 0) return gamma_ref(std::stoi(t.substr(g.size())));
    if (t.rfind(b, 0) == 0) return beta_ref(std::stoi(t.substr(b.size())));
    return std::nullopt;
  };
  const auto star = s.find('*');
  if (star != std::string::npos) {
    auto r = parse_ref(s.substr(star + 1));
    if (!r) throw CircuitError("bad angle: " + s);
    return Angle::param(*r, std::stod(s.substr(0, star)));
  }
  if (auto r = parse_ref(s)) return Angle::param(*r);
  return Angle::constant(std::stod(s));
}

void write_text(std::ostream& os, const Circuit& c) {
  os << "lines " << c.num_lines() << "\n";
  for (const auto& l : c.lines()) os << "line " << l.index << " " << l.label << "\n";
  os << "ancillas";
  for (int a : c.ancillas()) os << " " << a;
  os << "\n";
  for (const auto& g : c.gates()) {
    os << kind_name(g.kind);
    for (int q : g.qubits) os << " " << q;
    if (is_rotation(g.kind)) os << " " << angle_to_text(g.angle);
    if (!g.scratch.empty()) {
      os << " ;";
      for (int s : g.scratch) os << " " << s;
    }
    os << "\n";
  }
}

Circuit read_text(std::istream& is) {
  std::string tok;
  int n = 0;
  if (!(is >> tok >> n) || tok != "lines") throw CircuitError("missing header");
  Circuit c;
  for (int i = 0; i < n; ++i) {
    int idx = 0;
    std::string label;
    if (!(is >> tok >> idx >> label) || tok != "line" || idx != i)
      throw CircuitError("bad line header");
    c.add_line(label);
  }
  std::string line;
  std::getline(is, line);
  if (!std::getline(is, line)) throw CircuitError("missing ancilla list");
  {
    std::istringstream ls(line);
    ls >> tok;
    if (tok != "ancillas") throw CircuitError("missing ancilla list");
    int a;
    while (ls >> a) c.mark_ancilla(a);
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::string body = line, scr;
    if (auto p = line.find(';'); p != std::string::npos) {
      body = line.substr(0, p);
      scr = line.substr(p + 1);
    }
    std::istringstream ls(body);
    ls >> tok;
    const auto kind = kind_from_name(tok);
    if (!kind) throw CircuitError("unknown gate " + tok);
    std::vector<std::string> parts;
    while (ls >> tok) parts.push_back(tok);
    Gate g;
    g.kind = *kind;
    if (is_rotation(*kind)) {
      if (parts.empty()) throw CircuitError("rotation without angle");
      g.angle = angle_from_text(parts.back());
      parts.pop_back();
    }
    for (const auto& p : parts) g.qubits.push_back(std::stoi(p));
    std::istringstream ss(scr);
    int s;
    while (ss >> s) g.scratch.push_back(s);
    c.add(g);
  }
  return c;
}

}  // namespace fq
