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

#include "funcqaoa/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

#include "funcqaoa/simulate.hpp"

namespace fq {

std::uint64_t hoeffding_shots(double delta, double eps, double p) {
  if (!(delta > 0.0) || !(eps > 0.0) || !(p > 0.0 && p < 1.0))
    throw DomainError("hoeffding_shots needs delta > 0, eps > 0, 0 < p < 1");
  const double m = delta * delta * std::log(2.0 / p) / (2.0 * eps * eps);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(m - 1e-9)));
}

std::uint64_t pauli_l1_shots(const std::vector<double>& weights, double eps) {
  if (!(eps > 0.0)) throw DomainError("pauli_l1_shots needs eps > 0");
  double l1 = 0.0;
  for (double w : weights) l1 += std::abs(w);
  return static_cast<std::uint64_t>(std::ceil(l1 * l1 / (eps * eps) - 1e-9));
}

std::vector<double> pauli_z_weights(const std::vector<double>& diag) {
  const std::size_t n = diag.size();
  if (n == 0 || (n & (n - 1)) != 0) throw DomainError("diagonal length must be a power of two");
  std::vector<double> w = diag;
  for (std::size_t h = 1; h < n; h <<= 1)
    for (std::size_t i = 0; i < n; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = w[j], b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
  for (double& v : w) v /= static_cast<double>(n);
  return w;
}

double diagonal_span(const std::vector<double>& diag) {
  if (diag.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(diag.begin(), diag.end());
  return *hi - *lo;
}

double span_bound(const VariantAnsatz& a) { return a.span_bound; }

double exact_span(const VariantAnsatz& a, bool feasible_only) {
  if (a.state_qubits > kExactSpanMaxQubits) throw DomainError("exact span beyond scale cap");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  auto visit = [&](Index x) {
    if (feasible_only && !a.feasible(x)) return;
    const double c = a.cost(x);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  };
  if (a.restricted_basis) {
    for (Index x : a.basis()) visit(x);
  } else {
    const Index dim = Index{1} << a.state_qubits;
    for (Index x = 0; x < dim; ++x)
      if (a.reachable(x)) visit(x);
  }
  if (hi < lo) throw DomainError("no states to span");
  return hi - lo;
}

void InteractionGraph::validate() const {
  if (n < 1) throw DomainError("graph needs a vertex");
  for (const auto& [a, b] : edges)
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw DomainError("bad graph edge");
}

int InteractionGraph::radius() const {
  validate();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  int r = std::numeric_limits<int>::max();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    int ecc = 0, seen = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)])
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          ecc = std::max(ecc, dist[static_cast<std::size_t>(v)]);
          ++seen;
          q.push(v);
        }
    }
    if (seen != n) throw DomainError("interaction graph is disconnected");
    r = std::min(r, ecc);
  }
  return r;
}

InteractionGraph interaction_graph(const Ising& is, double eps) {
  InteractionGraph g;
  g.n = is.n;
  std::set<std::pair<int, int>> seen;
  for (const auto& c : is.couplings) {
    if (std::abs(c.j) <= eps) continue;
    const auto e = std::minmax(c.a, c.b);
    if (seen.insert(e).second) g.edges.push_back(e);
  }
  return g;
}

InteractionGraph interaction_graph(const VariantAnsatz& a) {
  const Ising* is = a.plan ? a.plan->ising() : nullptr;
  if (!is) throw DomainError("variant " + a.id.str() + " has no quadratic spin model");
  return interaction_graph(*is);
}

InteractionGraph parse_graph(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("graph spec must be kind:N");
  const std::string kind = spec.substr(0, colon);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw DomainError("bad vertex count");
  } catch (const std::logic_error&) {
    throw DomainError("bad vertex count in graph spec");
  }
  if (n < 1) throw DomainError("graph needs a vertex");
  InteractionGraph g;
  g.n = n;
  if (kind == "complete") {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
  } else if (kind == "path") {
    for (int a = 0; a + 1 < n; ++a) g.edges.emplace_back(a, a + 1);
  } else if (kind == "cycle") {
    if (n < 3) throw DomainError("cycle needs 3 vertices");
    for (int a = 0; a < n; ++a) g.edges.emplace_back(std::min(a, (a + 1) % n), std::max(a, (a + 1) % n));
  } else if (kind == "star") {
    for (int b = 1; b < n; ++b) g.edges.emplace_back(0, b);
  } else {
    throw DomainError("unknown graph kind " + kind);
  }
  return g;
}

double lnn_lower_bound(const InteractionGraph& g) {
  if (g.n == 1) return 0.0;
  const int r = g.radius();
  return (g.n - 1) / (2.0 * r) - 0.5;
}

}  // namespace fq
