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

#include <json.hpp>

#include "funcqaoa/ansatz.hpp"
#include "funcqaoa/estimators.hpp"
#include "funcqaoa/optimize.hpp"

namespace fq {

/** Malformed command-line input (exit code 2). */
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** "a:b" (inclusive), "a:b:s" or "a,b,c". */
std::vector<int> parse_int_list(const std::string& s);
std::vector<std::uint64_t> parse_seed_list(const std::string& s);
std::vector<std::string> split_list(const std::string& s);

/** Accepts "encoding" or "problem:encoding"; empty list means every variant. */
std::vector<VariantId> parse_variants(ProblemKind p, const std::string& list);
ProblemKind parse_problem(const std::string& s);
std::vector<Coupling> parse_couplings(const std::string& list);

/** Instance for one (problem, n, K, seed) point of a scan or campaign. */
Instance make_instance(ProblemKind p, int n, int K, std::uint64_t seed);

struct ScanSpec {
  ProblemKind problem = ProblemKind::MaxKCut;
  std::vector<VariantId> variants;
  std::vector<int> ns;
  /** Colours for Max-K-Cut; ignored elsewhere. */
  std::vector<int> ks{3};
  std::vector<Coupling> couplings{Coupling::AllToAll, Coupling::LNN};
  std::uint64_t seed = 1;
};

extern const char* const kScanHeader;

/** Writes the header and one row per (variant, n, K, coupling), in that nesting. */
void cmd_scan(const ScanSpec& spec, std::ostream& out, int workers = 0);

struct CampaignSpec {
  ProblemKind problem = ProblemKind::Tsp;
  std::vector<VariantId> variants;
  std::vector<int> ns;
  int K = 3;
  std::vector<std::uint64_t> seeds;
  OptimizerConfig opt;
  std::string out_dir;
  /** Summaries take each metric's best over restarts instead of the energy-best run. */
  bool per_metric_best = false;
};

constexpr int kCampaignMaxQubits = 20;

extern const char* const kSummaryHeader;

struct CampaignResult {
  std::vector<std::string> trace_files;
  std::vector<std::string> errors;
};

/** Traces go to out_dir as JSON and CSV; summary.csv aggregates per level. */
CampaignResult cmd_optimize(const CampaignSpec& spec, int workers = 0);

nlohmann::json cmd_bounds_shots(double delta, double eps, double p,
                                const std::optional<std::vector<double>>& weights);
nlohmann::json cmd_bounds_lnn(const InteractionGraph& g);

}  // namespace fq
