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

#include "funcqaoa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "funcqaoa/parallel.hpp"

namespace fq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

std::vector<double> axpy(const std::vector<double>& x, double a,
                         const std::vector<double>& d) {
  std::vector<double> r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += a * d[i];
  return r;
}

struct Point {
  double a = 0.0;
  double f = 0.0;
  double df = 0.0;
  std::vector<double> x, g;
};

// Strong-Wolfe line search with bracketing and bisection-safeguarded
// quadratic interpolation in the zoom phase.
bool wolfe_search(const Objective& f, const GradientFn& grad,
                  const std::vector<double>& x, double f0,
                  const std::vector<double>& d, double df0, double a_init,
                  Point& out) {
  constexpr double c1 = 1e-4, c2 = 0.9;
  auto eval = [&](double a) {
    Point p;
    p.a = a;
    p.x = axpy(x, a, d);
    p.f = f(p.x);
    p.g = grad(p.x);
    p.df = dot(p.g, d);
    return p;
  };
  auto armijo = [&](const Point& p) { return p.f <= f0 + c1 * p.a * df0; };
  auto curvature = [&](const Point& p) { return std::abs(p.df) <= -c2 * df0; };

  auto zoom = [&](Point lo, Point hi) {
    for (int it = 0; it < 40; ++it) {
      // Minimiser of the quadratic through (lo.f, lo.df) and hi.f.
      const double span = hi.a - lo.a;
      const double denom = 2.0 * (hi.f - lo.f - lo.df * span);
      double a = lo.a + 0.5 * span;
      if (denom > 0.0) {
        const double q = lo.a - lo.df * span * span / denom;
        const double l = std::min(lo.a, hi.a), h = std::max(lo.a, hi.a);
        if (q > l + 0.1 * (h - l) && q < h - 0.1 * (h - l)) a = q;
      }
      Point p = eval(a);
      if (!armijo(p) || p.f >= lo.f) {
        hi = std::move(p);
      } else {
        if (curvature(p)) return p;
        if (p.df * (hi.a - lo.a) >= 0.0) hi = lo;
        lo = std::move(p);
      }
      if (std::abs(hi.a - lo.a) < 1e-14) break;
    }
    return lo;
  };

  Point prev;
  prev.a = 0.0;
  prev.f = f0;
  prev.df = df0;
  prev.x = x;
  double a = a_init;
  for (int i = 0; i < 30; ++i) {
    Point p = eval(a);
    if (!armijo(p) || (i > 0 && p.f >= prev.f)) {
      out = zoom(prev, p);
      return out.a > 0.0;
    }
    if (curvature(p)) {
      out = std::move(p);
      return true;
    }
    if (p.df >= 0.0) {
      out = zoom(p, prev);
      return out.a > 0.0;
    }
    prev = std::move(p);
    a *= 2.0;
  }
  out = std::move(prev);
  return out.a > 0.0;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t p, std::uint64_t r) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(r)};
  std::uint32_t w[2];
  seq.generate(w, w + 2);
  return (std::uint64_t{w[0]} << 32) | w[1];
}

double wrap_into(double v, double period) {
  if (period <= 0.0) return v;
  v = std::fmod(v, period);
  if (v < 0.0) v += period;
  if (v >= period) v = 0.0;
  return v;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (!(x_tol > 0.0 && g_tol > 0.0 && f_tol > 0.0))
    throw std::invalid_argument("optimizer tolerances must be positive");
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (max_p < 0) throw std::invalid_argument("max_p must be non-negative");
  if (!(fd_step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  if (memory < 1 || max_iter < 1) throw std::invalid_argument("bad L-BFGS limits");
}

ParamDomain param_domain(const SemanticModel& m) {
  ParamDomain d;
  // exp(-i gamma C) repeats with period 2 pi only for integer costs.
  bool integral = true;
  for (double c : m.cost)
    if (std::abs(c - std::round(c)) > 1e-9) integral = false;
  d.gamma_period = integral ? kTwoPi : 0.0;
  d.gamma_init = kTwoPi;
  switch (m.mixer.kind) {
    case MixerKind::PerQubitX:
      d.beta_period = std::numbers::pi;
      d.beta_init = std::numbers::pi;
      break;
    case MixerKind::GroverGlobal:
    case MixerKind::GroverPerRegister:
      d.beta_period = kTwoPi;
      d.beta_init = kTwoPi;
      break;
    default:
      d.beta_period = 0.0;
      d.beta_init = std::numbers::pi;
      break;
  }
  return d;
}

double energy(const SemanticModel& m, const std::vector<double>& params) {
  const std::size_t p = params.size() / 2;
  std::vector<double> gamma(params.begin(), params.begin() + static_cast<long>(p));
  std::vector<double> beta(params.begin() + static_cast<long>(p), params.end());
  return energy(m, run_qaoa(m, gamma, beta));
}

std::vector<double> gradient(const SemanticModel& m,
                             const std::vector<double>& params, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  std::vector<double> g(params.size());
  std::vector<double> x = params;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = x[i];
    x[i] = v + h;
    const double fp = energy(m, x);
    x[i] = v - h;
    const double fm = energy(m, x);
    x[i] = v;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

MinimizeResult lbfgs(const Objective& f, const GradientFn& grad, std::vector<double> x0,
                     const OptimizerConfig& cfg, const WrapFn& wrap) {
  MinimizeResult res;
  if (wrap) wrap(x0);
  res.x = std::move(x0);
  res.f = f(res.x);
  if (res.x.empty()) {
    res.stop = "empty";
    return res;
  }
  std::vector<double> g = grad(res.x);
  std::vector<std::vector<double>> S, Y;
  std::vector<double> rho;
  if (inf_norm(g) < cfg.g_tol) {
    res.stop = "g_tol";
    return res;
  }
  for (res.iterations = 0; res.iterations < cfg.max_iter;) {
    // Two-loop recursion.
    std::vector<double> d = g;
    const std::size_t k = S.size();
    std::vector<double> alpha(k);
    for (std::size_t i = k; i-- > 0;) {
      alpha[i] = rho[i] * dot(S[i], d);
      d = axpy(d, -alpha[i], Y[i]);
    }
    if (k > 0) {
      const double scale = dot(S[k - 1], Y[k - 1]) / dot(Y[k - 1], Y[k - 1]);
      for (double& v : d) v *= scale;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const double b = rho[i] * dot(Y[i], d);
      d = axpy(d, alpha[i] - b, S[i]);
    }
    for (double& v : d) v = -v;
    double df0 = dot(g, d);
    if (!(df0 < 0.0)) {
      S.clear();
      Y.clear();
      rho.clear();
      d = g;
      for (double& v : d) v = -v;
      df0 = dot(g, d);
    }
    const double a0 = S.empty() ? std::min(1.0, 1.0 / inf_norm(g)) : 1.0;
    Point p;
    if (!wolfe_search(f, grad, res.x, res.f, d, df0, a0, p)) {
      res.stop = "line_search";
      break;
    }
    ++res.iterations;
    std::vector<double> s(d.size()), y(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      s[i] = p.a * d[i];
      y[i] = p.g[i] - g[i];
    }
    const double sy = dot(s, y);
    if (sy > 1e-12) {
      S.push_back(s);
      Y.push_back(y);
      rho.push_back(1.0 / sy);
      if (static_cast<int>(S.size()) > cfg.memory) {
        S.erase(S.begin());
        Y.erase(Y.begin());
        rho.erase(rho.begin());
      }
    }
    const double f_old = res.f;
    res.x = std::move(p.x);
    if (wrap) wrap(res.x);
    res.f = p.f;
    g = std::move(p.g);
    if (inf_norm(s) < cfg.x_tol) {
      res.stop = "x_tol";
      break;
    }
    if (inf_norm(g) < cfg.g_tol) {
      res.stop = "g_tol";
      break;
    }
    if (f_old - res.f <= cfg.f_tol * std::max({std::abs(f_old), std::abs(res.f), 1.0})) {
      res.stop = "f_tol";
      break;
    }
  }
  if (res.stop.empty()) res.stop = "max_iter";
  return res;
}

Trace optimize_layerwise(const SemanticModel& m, const OptimizerConfig& cfg,
                         const std::string& variant) {
  cfg.validate();
  Trace trace;
  trace.variant = variant;
  const ParamDomain dom = param_domain(m);
  const auto wrap = [&](std::vector<double>& x) {
    const std::size_t p = x.size() / 2;
    for (std::size_t i = 0; i < p; ++i) {
      x[i] = wrap_into(x[i], dom.gamma_period);
      x[p + i] = wrap_into(x[p + i], dom.beta_period);
    }
  };
  const Objective f = [&](const std::vector<double>& x) { return energy(m, x); };
  const GradientFn g = [&](const std::vector<double>& x) {
    return gradient(m, x, cfg.fd_step);
  };

  std::vector<double> best_gamma, best_beta;
  for (int p = 1; p <= cfg.max_p; ++p) {
    struct Start {
      std::vector<double> x;
      std::string kind;
    };
    std::vector<Start> starts;
    for (int r = 0; r < cfg.restarts; ++r) {
      std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(p),
                                   static_cast<std::uint64_t>(r)));
      std::uniform_real_distribution<double> ug(0.0, dom.gamma_init);
      std::uniform_real_distribution<double> ub(0.0, dom.beta_init);
      std::vector<double> gamma, beta;
      Start s;
      if (p <= cfg.fresh_levels) {
        for (int l = 0; l < p; ++l) gamma.push_back(ug(rng));
        for (int l = 0; l < p; ++l) beta.push_back(ub(rng));
        s.kind = "fresh";
      } else {
        gamma = best_gamma;
        beta = best_beta;
        gamma.push_back(ug(rng));
        beta.push_back(ub(rng));
        s.kind = "warm";
      }
      s.x = gamma;
      s.x.insert(s.x.end(), beta.begin(), beta.end());
      starts.push_back(std::move(s));
    }
    if (p > 1) {
      // An appended identity layer reproduces the previous optimum.
      Start s;
      s.x = best_gamma;
      s.x.push_back(0.0);
      s.x.insert(s.x.end(), best_beta.begin(), best_beta.end());
      s.x.push_back(0.0);
      s.kind = "pad";
      starts.push_back(std::move(s));
    }

    std::vector<MinimizeResult> results(starts.size());
    parallel_for(
        starts.size(), [&](std::size_t i) { results[i] = lbfgs(f, g, starts[i].x, cfg, wrap); },
        cfg.workers);

    LevelRecord rec;
    rec.p = p;
    std::size_t best = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& x = results[i].x;
      RestartRecord rr;
      rr.restart = static_cast<int>(i);
      rr.energy = results[i].f;
      rr.iterations = results[i].iterations;
      rr.start = starts[i].kind;
      const auto half = static_cast<long>(p);
      rr.metrics = evaluate(m, run_qaoa(m, {x.begin(), x.begin() + half},
                                        {x.begin() + half, x.end()}));
      rec.runs.push_back(rr);
      if (results[i].f < results[best].f) best = i;
    }
    const auto& x = results[best].x;
    rec.gamma.assign(x.begin(), x.begin() + p);
    rec.beta.assign(x.begin() + p, x.end());
    rec.energy = results[best].f;
    rec.metrics = rec.runs[best].metrics;
    rec.restart = static_cast<int>(best);
    rec.iterations = results[best].iterations;
    best_gamma = rec.gamma;
    best_beta = rec.beta;
    trace.levels.push_back(std::move(rec));
  }
  return trace;
}

namespace {

nlohmann::json metrics_json(const EvalMetrics& e) {
  return {{"energy", e.energy},
          {"p_feasible", e.p_feasible},
          {"p_optimal", e.p_optimal},
          {"rescaled_energy", e.rescaled_energy}};
}

EvalMetrics metrics_from(const nlohmann::json& j) {
  EvalMetrics e;
  e.energy = j.at("energy").get<double>();
  e.p_feasible = j.at("p_feasible").get<double>();
  e.p_optimal = j.at("p_optimal").get<double>();
  e.rescaled_energy = j.at("rescaled_energy").get<double>();
  return e;
}

}  // namespace

nlohmann::json trace_to_json(const Trace& t) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : t.levels) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& r : l.runs)
      runs.push_back({{"restart", r.restart},
                      {"start", r.start},
                      {"energy", r.energy},
                      {"iterations", r.iterations},
                      {"metrics", metrics_json(r.metrics)}});
    levels.push_back({{"p", l.p},
                      {"gamma", l.gamma},
                      {"beta", l.beta},
                      {"energy", l.energy},
                      {"metrics", metrics_json(l.metrics)},
                      {"restart", l.restart},
                      {"iterations", l.iterations},
                      {"runs", runs}});
  }
  return {{"variant", t.variant}, {"levels", levels}};
}

Trace trace_from_json(const nlohmann::json& j) {
  Trace t;
  t.variant = j.value("variant", "");
  for (const auto& l : j.at("levels")) {
    LevelRecord rec;
    rec.p = l.at("p").get<int>();
    rec.gamma = l.at("gamma").get<std::vector<double>>();
    rec.beta = l.at("beta").get<std::vector<double>>();
    rec.energy = l.at("energy").get<double>();
    rec.metrics = metrics_from(l.at("metrics"));
    rec.restart = l.at("restart").get<int>();
    rec.iterations = l.at("iterations").get<int>();
    for (const auto& r : l.value("runs", nlohmann::json::array())) {
      RestartRecord rr;
      rr.restart = r.at("restart").get<int>();
      rr.start = r.at("start").get<std::string>();
      rr.energy = r.at("energy").get<double>();
      rr.iterations = r.at("iterations").get<int>();
      rr.metrics = metrics_from(r.at("metrics"));
      rec.runs.push_back(rr);
    }
    t.levels.push_back(std::move(rec));
  }
  return t;
}

std::string trace_csv(const Trace& t) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << "level,energy,p_feasible,p_optimal,rescaled_energy\n";
  for (const auto& l : t.levels)
    os << l.p << ',' << l.energy << ',' << l.metrics.p_feasible << ','
       << l.metrics.p_optimal << ',' << l.metrics.rescaled_energy << '\n';
  return os.str();
}

}  // namespace fq
