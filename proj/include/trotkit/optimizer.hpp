// Copyright 2026 The trotkit authors
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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "trotkit/errors.hpp"
#include "trotkit/models.hpp"

namespace trotkit {

/**
 * The two components of the total error r(n) = c_g * n + c_T / n^k at a
 * fixed decomposition order: gate error per step and the Trotter-error
 * numerator.
 */
struct CostPair {
  double c_gate_per_step = 0.0;  // > 0
  double c_trotter = 0.0;        // >= 0
  int order_k = 1;

  void validate() const {
    if (!(c_gate_per_step > 0.0) || !std::isfinite(c_gate_per_step))
      throw std::invalid_argument("c_gate_per_step must be positive and finite");
    if (c_trotter < 0.0 || !std::isfinite(c_trotter))
      throw std::invalid_argument("c_trotter must be non-negative and finite");
    if (order_k < 1) throw std::invalid_argument("order_k must be >= 1");
  }

  double total_error_at(double n) const {
    return c_gate_per_step * n + c_trotter / std::pow(n, order_k);
  }
};

/** An (n, r) optimum at a fixed order k, real and integer-refined. */
struct OptimumReport {
  double n_star_real = 1.0;
  long long n_star_int = 1;
  double r_min = 0.0;  // total error evaluated exactly at n_star_int
  int k = 1;
};

/**
 * Minimizes r(n) = c_g n + c_T / n^k: the closed form gives
 * n* = (k c_T / c_g)^{1/(k+1)} and r(n*) = (1 + 1/k) c_g n*. The reported
 * integer minimizer is the better of floor(n*) and ceil(n*), clamped to
 * >= 1, with r_min evaluated exactly there. c_T = 0 degenerates to n* = 1.
 */
inline OptimumReport optimal_steps(const CostPair& c) {
  c.validate();
  OptimumReport report;
  report.k = c.order_k;
  if (c.c_trotter == 0.0) {
    report.n_star_real = 1.0;
    report.n_star_int = 1;
    report.r_min = c.c_gate_per_step;
    return report;
  }
  report.n_star_real = std::pow(c.order_k * c.c_trotter / c.c_gate_per_step,
                                1.0 / (c.order_k + 1));
  const double lo = std::max(1.0, std::floor(report.n_star_real));
  const double hi = std::max(1.0, std::ceil(report.n_star_real));
  const double r_lo = c.total_error_at(lo);
  const double r_hi = c.total_error_at(hi);
  report.n_star_int = static_cast<long long>(r_lo <= r_hi ? lo : hi);
  report.r_min = std::min(r_lo, r_hi);
  return report;
}

/** B = alpha / (P0 A (alpha+1)^2), the control constant of the kappa curve. */
inline double b_constant(double p0, double alpha, double a_const) {
  if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("p0 must lie in (0, 1)");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  return alpha / (p0 * a_const * (alpha + 1.0) * (alpha + 1.0));
}

/** kappa(k) = (B k f(k))^{1/(k+1)}. */
inline double kappa_value(int k, double b, FMode f_mode) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(b > 0.0)) throw std::invalid_argument("B must be positive");
  return std::pow(b * k * f_value(k, f_mode), 1.0 / (k + 1));
}

/** phi(k) = 2^k kappa(k), the full k-dependent part of the minimal error. */
inline double phi_value(int k, double b, FMode f_mode) {
  return std::ldexp(kappa_value(k, b, f_mode), k);
}

struct KappaPoint {
  int k = 1;
  double kappa = 0.0;
  double phi = 0.0;
  double phi_normalized = 0.0;  // phi(k) / phi(1)
};

struct KappaCurve {
  double b_value = 0.0;
  std::vector<KappaPoint> points;
};

inline KappaCurve kappa_curve(double b, FMode f_mode, int k_min = 1, int k_max = 8) {
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("bad k range");
  KappaCurve curve;
  curve.b_value = b;
  const double phi1 = phi_value(1, b, f_mode);
  for (int k = k_min; k <= k_max; ++k) {
    const double kappa = kappa_value(k, b, f_mode);
    const double phi = std::ldexp(kappa, k);
    curve.points.push_back({k, kappa, phi, phi / phi1});
  }
  return curve;
}

namespace detail {

// Gate growth of the figure-reproduction objective: the closed-form
// minimal error carries the full 2^k with the step cost, so the cost pair
// behind the analytic objective uses 2^k * K * p0.
inline double objective_gate_cost(int k, long long n_terms, double p0) {
  return std::ldexp(static_cast<double>(n_terms) * p0, k);
}

}  // namespace detail

/**
 * Cost pair of the total error at order k under a concrete gate model:
 * c_g from the selected gate count convention, c_T from the analytic
 * Trotter-error formulas.
 */
inline CostPair cost_pair(const ModelSpec& spec, const TrotterErrorParams& params,
                          const GateErrorModel& gate, int k, double t) {
  gate.validate();
  const long long n_terms =
      spec.kind == ModelKind::Tfim ? 2LL * spec.n_sites - 1 : 3LL * spec.n_sites - 2;
  CostPair c;
  c.order_k = k;
  c.c_gate_per_step = gate.p0 * static_cast<double>(gate_count(n_terms, 1, k, gate.count_mode));
  c.c_trotter = analytic_trotter_error(spec, params, k, 1, t);
  return c;
}

/**
 * The k-selection objective phi(k): for the Ising chain the closed form
 * 2^k (B k f(k))^{1/(k+1)} with B = alpha / (P0 A (alpha+1)^2); for the XY
 * chain (no closed form) the minimized total error of the cost pair built
 * with the same 2^k gate growth.
 */
inline double analytic_objective(const ModelSpec& spec, const TrotterErrorParams& params,
                                 double p0, int k, double t = 1.0) {
  params.validate();
  if (spec.kind == ModelKind::Tfim)
    return phi_value(k, b_constant(p0, spec.alpha(), params.a_const), params.f_mode);
  CostPair c;
  c.order_k = k;
  const long long n_terms = 3LL * spec.n_sites - 2;
  c.c_gate_per_step = detail::objective_gate_cost(k, n_terms, p0);
  c.c_trotter = analytic_trotter_error(spec, params, k, 1, t);
  return optimal_steps(c).r_min;
}

enum class KOptMode { Analytic, Numeric };

/**
 * Optimal decomposition order: argmin over k in 1..k_max, ties broken
 * toward smaller k.
 *
 * Analytic mode ranks orders by the objective phi(k) and then refines n at
 * the winning order from its cost pair; numeric mode minimizes the exact
 * integer-refined r_min of the cost pairs built with the caller's gate
 * count convention.
 */
inline OptimumReport k_opt(const ModelSpec& spec, const TrotterErrorParams& params,
                           const GateErrorModel& gate, double t, KOptMode mode, int k_max = 6) {
  if (k_max < 1 || k_max > 8) throw std::invalid_argument("k_max must lie in 1..8");
  gate.validate();
  params.validate();

  int best_k = 1;
  if (mode == KOptMode::Analytic) {
    double best = analytic_objective(spec, params, gate.p0, 1, t);
    for (int k = 2; k <= k_max; ++k) {
      const double value = analytic_objective(spec, params, gate.p0, k, t);
      if (value < best) {
        best = value;
        best_k = k;
      }
    }
    // Executable (n, r) at the winning order, under the same 2^k growth
    // convention the objective uses.
    const long long n_terms =
        spec.kind == ModelKind::Tfim ? 2LL * spec.n_sites - 1 : 3LL * spec.n_sites - 2;
    CostPair c;
    c.order_k = best_k;
    c.c_gate_per_step = detail::objective_gate_cost(best_k, n_terms, gate.p0);
    c.c_trotter = analytic_trotter_error(spec, params, best_k, 1, t);
    return optimal_steps(c);
  }

  OptimumReport best = optimal_steps(cost_pair(spec, params, gate, 1, t));
  for (int k = 2; k <= k_max; ++k) {
    const OptimumReport report = optimal_steps(cost_pair(spec, params, gate, k, t));
    if (report.r_min < best.r_min) best = report;
  }
  return best;
}

/** One row of a parameter sweep. */
struct SweepRow {
  double p0 = 0.0;
  double alpha = 0.0;
  int k_opt = 1;
  long long n_opt = 1;
  double r_min = 0.0;
};

/** Log-spaced grid from lo to hi inclusive; points = 1 collapses to {lo}. */
inline std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw std::invalid_argument("log grid bounds must be positive");
  if (points < 1 || points > 10000) throw std::invalid_argument("grid size must lie in 1..10000");
  std::vector<double> grid;
  grid.reserve(points);
  if (points == 1) {
    grid.push_back(lo);
    return grid;
  }
  const double step = (std::log(hi) - std::log(lo)) / (points - 1);
  for (int i = 0; i < points; ++i) grid.push_back(std::exp(std::log(lo) + step * i));
  return grid;
}

inline std::vector<SweepRow> sweep_p0(const ModelSpec& spec, const TrotterErrorParams& params,
                                      GateErrorModel gate, double t, KOptMode mode,
                                      const std::vector<double>& p0_grid, int k_max = 6) {
  std::vector<SweepRow> rows;
  rows.reserve(p0_grid.size());
  for (double p0 : p0_grid) {
    gate.p0 = p0;
    const OptimumReport report = k_opt(spec, params, gate, t, mode, k_max);
    rows.push_back({p0, spec.alpha(), report.k, report.n_star_int, report.r_min});
  }
  return rows;
}

inline std::vector<SweepRow> sweep_alpha(ModelSpec spec, const TrotterErrorParams& params,
                                         const GateErrorModel& gate, double t, KOptMode mode,
                                         const std::vector<double>& alpha_grid, int k_max = 6) {
  std::vector<SweepRow> rows;
  rows.reserve(alpha_grid.size());
  for (double alpha : alpha_grid) {
    spec.field = alpha * spec.coupling;
    const OptimumReport report = k_opt(spec, params, gate, t, mode, k_max);
    rows.push_back({gate.p0, alpha, report.k, report.n_star_int, report.r_min});
  }
  return rows;
}

}  // namespace trotkit
