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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace fq {

class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParamFamily : std::uint8_t { Gamma, Beta };

struct ParamRef {
  ParamFamily family = ParamFamily::Gamma;
  int layer = 1;

  bool operator==(const ParamRef&) const = default;
};

inline ParamRef gamma_ref(int layer) { return {ParamFamily::Gamma, layer}; }
inline ParamRef beta_ref(int layer) { return {ParamFamily::Beta, layer}; }

/** Rotation angle: `coeff`, or `coeff * param` when `ref` is set. */
struct Angle {
  double coeff = 0.0;
  std::optional<ParamRef> ref;

  static Angle constant(double v) { return {v, std::nullopt}; }
  static Angle param(ParamRef r, double c = 1.0) { return {c, r}; }

  bool is_param() const { return ref.has_value(); }
  Angle scaled(double s) const { return {coeff * s, ref}; }
  Angle operator-() const { return scaled(-1.0); }

  bool operator==(const Angle&) const = default;
};

/** Parameter values for binding; gamma[l-1] and beta[l-1] for layer l. */
struct ParamValues {
  std::vector<double> gamma;
  std::vector<double> beta;

  double value(const Angle& a) const;
};

enum class GateKind : std::uint8_t {
  X, H, RY, RZ, CNOT, SWAP, CH, CRY, CRZ, MCX, MCRZ
};

const char* kind_name(GateKind k);
std::optional<GateKind> kind_from_name(const std::string& s);
bool is_rotation(GateKind k);
bool is_basic(GateKind k);

using QubitList = boost::container::small_vector<int, 4>;

/**
 * A gate acting on circuit lines. Controls come first, the target last.
 * For MCRZ the target is a clean ancilla that receives the rotation.
 * `scratch` lists clean ancillas that decomposition may borrow.
 */
struct Gate {
  GateKind kind = GateKind::X;
  QubitList qubits;
  std::vector<int> scratch;
  Angle angle;

  int target() const { return qubits.back(); }
  int num_controls() const { return static_cast<int>(qubits.size()) - 1; }
};

/** Receiver of a gate stream. Builders write into any sink. */
class GateSink {
 public:
  virtual ~GateSink() = default;
  virtual void add(const Gate& g) = 0;

  void x(int q);
  void h(int q);
  void ry(int q, Angle a);
  void rz(int q, Angle a);
  void cnot(int c, int t);
  void swap(int a, int b);
  void ch(int c, int t);
  void cry(int c, int t, Angle a);
  void crz(int c, int t, Angle a);
  void mcx(const std::vector<int>& controls, int t,
           const std::vector<int>& scratch = {});
  void mcrz(const std::vector<int>& controls, int t, Angle a,
            const std::vector<int>& scratch = {});
};

struct QubitLine {
  int index = 0;
  std::string label;
};

class Circuit : public GateSink {
 public:
  Circuit() = default;
  explicit Circuit(int num_lines);

  int add_line(const std::string& label);
  std::vector<int> add_register(const std::string& name, int width);
  void mark_ancilla(int line);
  void mark_ancillas(const std::vector<int>& lines);

  void add(const Gate& g) override;
  void append(const Circuit& other);
  Circuit inverse() const;

  int num_lines() const { return static_cast<int>(lines_.size()); }
  const std::vector<QubitLine>& lines() const { return lines_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<int>& ancillas() const { return ancillas_; }
  bool empty() const { return gates_.empty(); }

  /** Same lines and ancillas, no gates. */
  Circuit clone_layout() const;

 private:
  std::vector<QubitLine> lines_;
  std::vector<Gate> gates_;
  std::vector<int> ancillas_;
};

Gate inverse_gate(const Gate& g);

enum class Coupling { AllToAll, LNN };

const char* coupling_name(Coupling c);
std::optional<Coupling> coupling_from_name(const std::string& s);

struct ResourceReport {
  long long qubits = 0;
  long long total_gates = 0;
  long long two_qubit_gates = 0;
  long long param_gates = 0;
  long long depth = 0;
};

/** Number of clean ancillas the decomposition of `g` needs. */
int scratch_needed(const Gate& g);

/**
 * Expands macro gates into {X, H, RY, RZ, CNOT}. Gates without enough
 * explicit scratch draw from fresh lines starting at `fresh_base`;
 * `fresh_used` is raised to the number of fresh lines touched.
 */
class Lowering : public GateSink {
 public:
  Lowering(GateSink& out, int fresh_base);

  void add(const Gate& g) override;
  int fresh_used() const { return fresh_used_; }

 private:
  void toffoli(int c0, int c1, int t);
  void rccx(int c0, int c1, int t, bool inverse);
  void lower_mcx(const Gate& g);

  GateSink& out_;
  int fresh_base_;
  int fresh_used_ = 0;
};

/** Streaming ASAP-layer counter over basic gates. */
class ResourceCounter : public GateSink {
 public:
  explicit ResourceCounter(Coupling coupling = Coupling::AllToAll);

  void add(const Gate& g) override;
  ResourceReport report(long long qubits) const;

 private:
  Coupling coupling_;
  std::vector<long long> front_;
  ResourceReport r_;
};

/** Flattens SWAP into three CNOTs and forwards everything else. */
class SwapExpander : public GateSink {
 public:
  explicit SwapExpander(GateSink& out) : out_(out) {}
  void add(const Gate& g) override;

 private:
  GateSink& out_;
};

/**
 * Lowers macro gates. In LNN mode every two-qubit gate must already act on
 * neighbouring lines; the result is rejected otherwise.
 */
Circuit decompose(const Circuit& circuit, Coupling coupling);

ResourceReport resources(const Circuit& circuit, Coupling coupling);

/** Decomposes and counts in one pass without materialising the result. */
ResourceReport measure(const Circuit& circuit, Coupling coupling);

/**
 * Diagonal exp(-i*scale*diag(values)) up to global phase, with Gray-code
 * ordered CNOT ladders. `values` is indexed with lines[0] as the most
 * significant bit. With `skip_zero` rotations with a vanishing Walsh
 * coefficient are dropped.
 */
Circuit gray_diagonal(const std::vector<int>& lines,
                      const std::vector<double>& values, Angle scale,
                      bool skip_zero = false);
void emit_gray_diagonal(GateSink& out, const std::vector<int>& lines,
                        const std::vector<double>& values, Angle scale,
                        bool skip_zero = false);

/** Walsh coefficients c_S with D(x) = sum_S c_S (-1)^{popcount(x & S)}. */
std::vector<double> walsh_coefficients(const std::vector<double>& values);

/** Emits exp(-i*scale*c*Z_S) for each (mask, c), grouped in Gray order. */
void emit_parity_phases(GateSink& out, const std::vector<int>& lines,
                        const std::vector<double>& coeffs, Angle scale,
                        bool skip_zero);

struct ParityTerm {
  std::uint64_t mask = 0;
  double coeff = 0.0;
};

/**
 * Sparse form: emits exp(-i*scale*c*Z_mask) for each term. Terms are grouped
 * by their top bit and walked in Gray order, so each group shares one CNOT
 * ladder onto its top line. Empty masks are ignored.
 */
void emit_parity_terms(GateSink& out, const std::vector<int>& lines,
                       std::vector<ParityTerm> terms, Angle scale);

std::string angle_to_text(const Angle& a);
Angle angle_from_text(const std::string& s);

void write_text(std::ostream& os, const Circuit& c);
Circuit read_text(std::istream& is);

}  // namespace fq
