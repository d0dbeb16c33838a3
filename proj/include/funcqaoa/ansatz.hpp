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

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "funcqaoa/circuit.hpp"
#include "funcqaoa/gadgets.hpp"
#include "funcqaoa/problems.hpp"
#include "funcqaoa/routing.hpp"
#include "funcqaoa/semantic.hpp"
#include "funcqaoa/statevector.hpp"

namespace fq {

struct Ising;

enum class ProblemKind { MaxKCut, Tsp, SetCover, Ilp };

enum class Encoding {
  X, XY, GM, Hobo, Fuchs, Mtz, Func, FuncGm, FuncCom, SlackQubo, FuncOr, FuncDirect
};

/** `problem:encoding`, e.g. maxkcut:func or tsp:func-gm. */
struct VariantId {
  ProblemKind problem = ProblemKind::MaxKCut;
  Encoding encoding = Encoding::Func;

  std::string str() const;
  static VariantId parse(const std::string& s);
  bool operator==(const VariantId&) const = default;
};

const char* problem_name(ProblemKind p);
ProblemKind problem_of(const Instance& inst);
std::vector<VariantId> variants_for(ProblemKind p);

/**
 * Gate-level realisation of one variant. Logical lines are the state lines
 * followed by the variant's ancillas. Every macro gate carries explicit
 * scratch unless noted.
 */
class CircuitPlan {
 public:
  virtual ~CircuitPlan() = default;

  const Circuit& layout() const { return layout_; }
  int num_lines() const { return layout_.num_lines(); }

  virtual void prep(GateSink& out) const = 0;
  virtual void phase(GateSink& out, Angle gamma) const = 0;
  virtual void mixer(GateSink& out, Angle beta) const = 0;

  // LNN forms; by default the logical gates are routed greedily.
  virtual void prep_lnn(LinearLayout& l) const;
  virtual void phase_lnn(LinearLayout& l, Angle gamma) const;
  virtual void mixer_lnn(LinearLayout& l, Angle beta) const;

  /** Cost of parts recorded by formula instead of synthesised. */
  virtual ResourceReport formula_prep() const { return {}; }
  virtual ResourceReport formula_mixer() const { return {}; }
  bool has_formula_parts() const {
    return formula_prep().total_gates > 0 || formula_mixer().total_gates > 0;
  }

  /** The spin model behind QUBO-type phase separators, else null. */
  virtual const Ising* ising() const { return nullptr; }

 protected:
  Circuit layout_;
};

struct VariantAnsatz {
  VariantId id;
  double penalty = 0.0;  // A used by the encoding, 0 when none
  int state_qubits = 0;
  std::vector<RegisterSpan> registers;

  /** Diagonal of the phase separator on a state-line basis index. */
  std::function<double(Index)> cost;
  std::function<bool(Index)> feasible;
  /** Basis states reachable from the initial state under the mixer. */
  std::function<bool(Index)> reachable;
  /** Amplitudes of the initial state on `basis` (all reachable states). */
  std::function<double(Index)> initial_amplitude;

  MixerModel mixer;
  /** When set, simulation runs on these basis states only. */
  bool restricted_basis = false;
  std::function<std::vector<Index>()> basis;

  double eff_space_bits = 0.0;
  double span_bound = 0.0;
  bool optimizable = true;

  std::shared_ptr<const CircuitPlan> plan;
};

VariantAnsatz build_ansatz(const VariantId& id, const Instance& inst,
                           const PenaltyConfig& pen = {});

/** Logical circuit: preparation then p phase/mixer levels. */
Circuit qaoa_circuit(const VariantAnsatz& a, int p);

/**
 * Streams preparation and p levels as basic gates (plus SWAP for LNN) into
 * `out`. Returns the number of lines touched, pool lines included. With
 * `restore` LNN output returns every qubit to its home line at the end.
 */
int emit_qaoa(const VariantAnsatz& a, GateSink& out, Coupling c, int p,
              bool restore = false);

/** Physical circuit as produced by emit_qaoa. */
Circuit lowered_circuit(const VariantAnsatz& a, Coupling c, int p,
                        bool restore = false);

struct Tabulation {
  ResourceReport report;
  double span_bound = 0.0;
  double eff_space_bits = 0.0;
  bool formula_parts = false;
};

/** Resources of preparation plus one phase and one mixer layer. */
Tabulation tabulate(const VariantAnsatz& a, Coupling c);

/** Pair count of fixing circuits added per edge by the Fuchs encoding. */
long long fuchs_fixing_count(int K);

/**
 * Closed-form gate count of one X-QAOA level with preparation on all-to-all
 * hardware: nK Hadamards, nK Z rotations, three gates per ZZ term and three
 * per X-mixer rotation. Assumes every Z coefficient is nonzero (K >= 3).
 */
long long xqaoa_closed_form_gates(const MaxKCutInstance& inst);

}  // namespace fq
