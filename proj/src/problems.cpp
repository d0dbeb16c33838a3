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

#include "funcqaoa/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

namespace fq {

namespace {

void check_square(const Eigen::MatrixXd& W, int n, const char* what) {
  if (W.rows() != n || W.cols() != n)
    throw DomainError(std::string(what) + ": weight matrix must be n x n");
  if (!W.allFinite()) throw DomainError(std::string(what) + ": non-finite weight");
  for (int i = 0; i < n; ++i)
    if (W(i, i) != 0.0) throw DomainError(std::string(what) + ": nonzero diagonal");
}

// Visits every vector in [0, base)^len; stops early if f returns false.
template <class F>
void for_each_word(int len, int base, F f) {
  std::vector<int> v(len, 0);
  while (true) {
    f(v);
    int i = len - 1;
    while (i >= 0 && ++v[i] == base) v[i--] = 0;
    if (i < 0) return;
  }
}

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> argmin;

  void offer(double v, const std::vector<int>& x) {
    if (v < value - kTieTol) {
      value = v;
      argmin.assign(1, x);
    } else if (v <= value + kTieTol) {
      argmin.push_back(x);
    }
  }
};

void check_cap(double states) {
  if (states > kBruteForceCap) throw DomainError("search space exceeds brute-force cap");
}

}  // namespace

void MaxKCutInstance::validate() const {
  if (n < 1) throw DomainError("maxkcut: n must be positive");
  if (K < 2) throw DomainError("maxkcut: K must be at least 2");
  check_square(W, n, "maxkcut");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (W(i, j) < 0) throw DomainError("maxkcut: negative weight");
      if (W(i, j) != W(j, i)) throw DomainError("maxkcut: asymmetric weights");
    }
}

void TspInstance::validate() const {
  if (n < 3) throw DomainError("tsp: n must be at least 3");
  check_square(W, n, "tsp");
}

double TspInstance::max_w() const {
  double m = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m = std::max(m, W(i, j));
  return m;
}

void SetCoverInstance::validate() const {
  if (n < 1) throw DomainError("setcover: n must be positive");
  if (subsets.empty()) throw DomainError("setcover: empty family");
  for (const auto& s : subsets) {
    if (s.empty()) throw DomainError("setcover: empty subset");
    for (int u : s)
      if (u < 0 || u >= n) throw DomainError("setcover: element out of range");
  }
}

bool SetCoverInstance::coverable() const {
  for (int m : multiplicity())
    if (m == 0) return false;
  return true;
}

std::vector<int> SetCoverInstance::multiplicity() const {
  std::vector<int> m(n, 0);
  for (const auto& s : subsets)
    for (int u : std::set<int>(s.begin(), s.end())) ++m[u];
  return m;
}

void IlpInstance::validate() const {
  if (n < 1) throw DomainError("ilp: n must be positive");
  if (!objective.empty() && static_cast<int>(objective.size()) != n)
    throw DomainError("ilp: objective length mismatch");
  for (const auto& c : constraints) {
    if (static_cast<int>(c.coeffs.size()) != n)
      throw DomainError("ilp: coefficient length mismatch");
    if (std::all_of(c.coeffs.begin(), c.coeffs.end(), [](long long a) { return a == 0; }))
      throw DomainError("ilp: constraint without nonzero coefficient");
  }
}

std::string instance_kind(const Instance& inst) {
  static const char* names[] = {"maxkcut", "tsp", "setcover", "ilp"};
  return names[inst.index()];
}

// ---------------------------------------------------------------------------

double maxkcut_cost(const MaxKCutInstance& inst, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != inst.n)
    throw DomainError("coloring length mismatch");
  for (int c : coloring)
    if (c < 0 || c >= inst.K) throw DomainError("color out of range");
  double s = 0.0;
  for (int i = 0; i < inst.n; ++i)
    for (int j = i + 1; j < inst.n; ++j)
      if (coloring[i] == coloring[j]) s += inst.W(i, j);
  return s;
}

bool is_permutation(const std::vector<std::uint64_t>& assignment, int n) {
  if (static_cast<int>(assignment.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : assignment) {
    if (v >= static_cast<std::uint64_t>(n) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool parity_accepts(const std::vector<std::uint64_t>& assignment, int n) {
  std::vector<int> count(n, 0);
  for (auto v : assignment)
    if (v < static_cast<std::uint64_t>(n)) count[v] ^= 1;
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

double tsp_route_cost(const TspInstance& inst, const std::vector<int>& perm) {
  std::vector<std::uint64_t> a;
  for (int p : perm) {
    if (p < 0) throw DomainError("tour is not a permutation");
    a.push_back(static_cast<std::uint64_t>(p));
  }
  if (!is_permutation(a, inst.n)) throw DomainError("tour is not a permutation");
  double s = 0.0;
  for (int t = 0; t < inst.n; ++t) s += inst.W(perm[t], perm[(t + 1) % inst.n]);
  return s;
}

SetCoverScore setcover_penalty(const SetCoverInstance& inst,
                               const std::vector<int>& selection) {
  if (selection.size() != inst.subsets.size())
    throw DomainError("selection length mismatch");
  SetCoverScore r;
  std::vector<bool> covered(inst.n, false);
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (!selection[i]) continue;
    ++r.cost;
    for (int u : inst.subsets[i]) covered[u] = true;
  }
  r.uncovered = static_cast<int>(std::count(covered.begin(), covered.end(), false));
  return r;
}

long long ilp_slack(const IlpConstraint& c, const std::vector<int>& y) {
  if (y.size() != c.coeffs.size()) throw DomainError("assignment length mismatch");
  long long xi = c.b;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i]) xi -= c.coeffs[i];
  return xi;
}

// ---------------------------------------------------------------------------

namespace {

BruteForceResult solve(const MaxKCutInstance& inst) {
  inst.validate();
  check_cap(std::pow(double(inst.K), inst.n));
  Best best;
  for_each_word(inst.n, inst.K,
                [&](const std::vector<int>& c) { best.offer(maxkcut_cost(inst, c), c); });
  return {best.value, best.argmin};
}

BruteForceResult solve(const TspInstance& inst) {
  inst.validate();
  check_cap(std::tgamma(inst.n + 1.0));
  Best best;
  std::vector<int> p(inst.n);
  std::iota(p.begin(), p.end(), 0);
  do best.offer(tsp_route_cost(inst, p), p);
  while (std::next_permutation(p.begin(), p.end()));
  return {best.value, best.argmin};
}

BruteForceResult solve(const SetCoverInstance& inst) {
  inst.validate();
  if (!inst.coverable()) throw DomainError("setcover: instance is infeasible");
  check_cap(std::ldexp(1.0, static_cast<int>(inst.subsets.size())));
  Best best;
  for_each_word(static_cast<int>(inst.subsets.size()), 2, [&](const std::vector<int>& x) {
    const auto s = setcover_penalty(inst, x);
    if (s.uncovered == 0) best.offer(s.cost, x);
  });
  return {best.value, best.argmin};
}

BruteForceResult solve(const IlpInstance& inst) {
  inst.validate();
  check_cap(std::ldexp(1.0, inst.n));
  Best best;
  for_each_word(inst.n, 2, [&](const std::vector<int>& y) {
    for (const auto& c : inst.constraints)
      if (ilp_slack(c, y) < 0) return;
    double v = 0.0;
    for (int i = 0; i < inst.n && !inst.objective.empty(); ++i) v += inst.objective[i] * y[i];
    best.offer(v, y);
  });
  if (best.argmin.empty()) throw DomainError("ilp: no feasible assignment");
  return {best.value, best.argmin};
}

}  // namespace

BruteForceResult brute_force(const Instance& inst) {
  return std::visit([](const auto& x) { return solve(x); }, inst);
}

// ---------------------------------------------------------------------------

Instance generate_instance(const GenerateSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  if (spec.kind == "tsp") {
    TspInstance t;
    t.n = spec.n;
    if (t.n < 3) throw DomainError("tsp: n must be at least 3");
    t.W = Eigen::MatrixXd::Zero(t.n, t.n);
    std::uniform_int_distribution<int> d(1, 10);
    for (int i = 0; i < t.n; ++i)
      for (int j = 0; j < t.n; ++j)
        if (i != j) t.W(i, j) = d(rng);
    return t;
  }
  if (spec.kind == "maxkcut") {
    MaxKCutInstance m;
    m.n = spec.n;
    m.K = spec.K;
    if (m.n < 1 || m.K < 2) throw DomainError("maxkcut: invalid sizes");
    m.W = Eigen::MatrixXd::Zero(m.n, m.n);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (int i = 0; i < m.n; ++i)
      for (int j = i + 1; j < m.n; ++j) m.W(i, j) = m.W(j, i) = 1.0 - d(rng);
    return m;
  }
  if (spec.kind == "setcover") {
    SetCoverInstance s;
    s.n = spec.n;
    const int N = spec.subsets > 0 ? spec.subsets : spec.n + 1;
    if (s.n < 1 || N < 1) throw DomainError("setcover: invalid sizes");
    std::bernoulli_distribution coin(0.4);
    std::uniform_int_distribution<int> pick(0, N - 1);
    s.subsets.resize(N);
    for (auto& sub : s.subsets)
      for (int u = 0; u < s.n; ++u)
        if (coin(rng)) sub.push_back(u);
    for (int u = 0; u < s.n; ++u) {
      bool hit = false;
      for (const auto& sub : s.subsets) hit |= std::find(sub.begin(), sub.end(), u) != sub.end();
      if (!hit) {
        auto& sub = s.subsets[pick(rng)];
        sub.insert(std::upper_bound(sub.begin(), sub.end(), u), u);
      }
    }
    std::uniform_int_distribution<int> any(0, s.n - 1);
    for (auto& sub : s.subsets)
      if (sub.empty()) sub.push_back(any(rng));
    return s;
  }
  if (spec.kind == "ilp") {
    IlpInstance p;
    p.n = spec.n;
    if (p.n < 1 || spec.constraints < 0) throw DomainError("ilp: invalid sizes");
    std::uniform_int_distribution<long long> a(-5, 5), b(0, 8);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int k = 0; k < spec.constraints; ++k) {
      IlpConstraint con;
      do {
        con.coeffs.assign(p.n, 0);
        for (auto& x : con.coeffs) x = a(rng);
      } while (std::all_of(con.coeffs.begin(), con.coeffs.end(), [](long long x) { return x == 0; }));
      con.b = b(rng);
      p.constraints.push_back(con);
    }
    for (int i = 0; i < p.n; ++i) p.objective.push_back(c(rng));
    return p;
  }
  throw DomainError("unknown instance kind: " + spec.kind);
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json weights_json(const Eigen::MatrixXd& W) {
  json a = json::array();
  for (Eigen::Index i = 0; i < W.rows(); ++i)
    for (Eigen::Index j = 0; j < W.cols(); ++j) a.push_back(W(i, j));
  return a;
}

Eigen::MatrixXd weights_from(const json& j, int n) {
  const auto& a = j.at("weights");
  if (!a.is_array() || static_cast<int>(a.size()) != n * n)
    throw DomainError("weights must hold n*n entries");
  Eigen::MatrixXd W(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) W(i, k) = a[i * n + k].get<double>();
  return W;
}

}  // namespace

std::string instance_to_json(const Instance& inst, std::optional<std::uint64_t> seed) {
  json j;
  j["kind"] = instance_kind(inst);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        j["n"] = x.n;
        if constexpr (std::is_same_v<T, MaxKCutInstance>) {
          j["K"] = x.K;
          j["weights"] = weights_json(x.W);
        } else if constexpr (std::is_same_v<T, TspInstance>) {
          j["weights"] = weights_json(x.W);
        } else if constexpr (std::is_same_v<T, SetCoverInstance>) {
          j["subsets"] = x.subsets;
        } else {
          json cs = json::array();
          for (const auto& c : x.constraints) cs.push_back({{"coeffs", c.coeffs}, {"b", c.b}});
          j["constraints"] = cs;
          j["objective"] = x.objective;
        }
      },
      inst);
  if (seed) j["seed"] = *seed;
  return j.dump(1);
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed instance JSON: ") + e.what());
  }
  try {
    const auto kind = j.at("kind").get<std::string>();
    const int n = j.at("n").get<int>();
    if (kind == "maxkcut") {
      MaxKCutInstance m{n, j.at("K").get<int>(), weights_from(j, n)};
      m.validate();
      return m;
    }
    if (kind == "tsp") {
      TspInstance t{n, weights_from(j, n)};
      t.validate();
      return t;
    }
    if (kind == "setcover") {
      SetCoverInstance s{n, j.at("subsets").get<std::vector<std::vector<int>>>()};
      s.validate();
      return s;
    }
    if (kind == "ilp") {
      IlpInstance p;
      p.n = n;
      for (const auto& c : j.at("constraints"))
        p.constraints.push_back({c.at("coeffs").get<std::vector<long long>>(),
                                 c.at("b").get<long long>()});
      if (j.contains("objective")) p.objective = j["objective"].get<std::vector<double>>();
      p.validate();
      return p;
    }
    throw DomainError("unknown instance kind: " + kind);
  } catch (const json::exception& e) {
    throw DomainError(std::string("invalid instance JSON: ") + e.what());
  }
}

}  // namespace fq
