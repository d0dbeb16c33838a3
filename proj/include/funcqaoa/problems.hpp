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
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace fq {

/** Invalid instance data or oracle input. */
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MaxKCutInstance {
  int n = 0;
  int K = 3;
  Eigen::MatrixXd W;  // symmetric, zero diagonal, nonnegative

  void validate() const;
};

struct TspInstance {
  int n = 0;
  Eigen::MatrixXd W;  // zero diagonal, directed

  void validate() const;
  double max_w() const;
};

/** Universe [0, n); subsets hold element indices. */
struct SetCoverInstance {
  int n = 0;
  std::vector<std::vector<int>> subsets;

  void validate() const;
  bool coverable() const;
  /** Number of subsets containing each element. */
  std::vector<int> multiplicity() const;
};

/** sum_i coeffs[i] * y_i <= b. */
struct IlpConstraint {
  std::vector<long long> coeffs;
  long long b = 0;
};

/** Minimise objective . y over binary y subject to every constraint. */
struct IlpInstance {
  int n = 0;
  std::vector<IlpConstraint> constraints;
  std::vector<double> objective;  // empty means zero objective

  void validate() const;
};

using Instance = std::variant<MaxKCutInstance, TspInstance, SetCoverInstance, IlpInstance>;

std::string instance_kind(const Instance& inst);

/** Penalty weights; unset entries take the encoding's default. */
struct PenaltyConfig {
  std::optional<double> A;
  std::optional<double> A1;
  std::optional<double> A2;
};

double maxkcut_cost(const MaxKCutInstance& inst, const std::vector<int>& coloring);
double tsp_route_cost(const TspInstance& inst, const std::vector<int>& perm);
bool is_permutation(const std::vector<std::uint64_t>& assignment, int n);
/** Every city in [0, n) occurs an odd number of times. */
bool parity_accepts(const std::vector<std::uint64_t>& assignment, int n);

struct SetCoverScore {
  int cost = 0;
  int uncovered = 0;
};
SetCoverScore setcover_penalty(const SetCoverInstance& inst, const std::vector<int>& selection);

/** xi = b - sum a_i y_i. */
long long ilp_slack(const IlpConstraint& c, const std::vector<int>& y);

struct BruteForceResult {
  double value = 0.0;
  std::vector<std::vector<int>> argmin;
};

constexpr double kBruteForceCap = 1e7;
constexpr double kTieTol = 1e-9;

BruteForceResult brute_force(const Instance& inst);

struct GenerateSpec {
  std::string kind;  // maxkcut | tsp | setcover | ilp
  int n = 0;
  int K = 3;
  int subsets = 0;      // setcover family size (default n + 1)
  int constraints = 1;  // ilp
  std::uint64_t seed = 0;
};

Instance generate_instance(const GenerateSpec& spec);

std::string instance_to_json(const Instance& inst, std::optional<std::uint64_t> seed = {});
Instance instance_from_json(const std::string& text);

}  // namespace fq
