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
#include <string>

#include "trotkit/models.hpp"
#include "trotkit/pauli.hpp"
#include "trotkit/schedule.hpp"
#include "trotkit/statevector.hpp"

namespace trotkit {

/**
 * Additive gate-fault model: every exponential factor is one operation
 * with fault probability p0, and fault rates add across the circuit.
 */
struct GateErrorModel {
  double p0 = 1e-3;
  GateCountMode count_mode = GateCountMode::Eq6;

  void validate() const {
    if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("p0 must lie in (0, 1)");
  }
};

/** Shape of the k-dependent Taylor coefficient f(k) in the order-k bound. */
enum class FMode { InvK, InvFactorial, Unit };

inline std::string to_string(FMode mode) {
  switch (mode) {
    case FMode::InvK: return "inv_k";
    case FMode::InvFactorial: return "inv_factorial";
    default: return "unit";
  }
}

inline FMode f_mode_from_string(const std::string& s) {
  if (s == "inv_k") return FMode::InvK;
  if (s == "inv_factorial") return FMode::InvFactorial;
  if (s == "unit") return FMode::Unit;
  throw std::invalid_argument("unknown f mode: " + s);
}

inline double f_value(int k, FMode mode) {
  switch (mode) {
    case FMode::InvK: return 1.0 / k;
    case FMode::InvFactorial: {
      double fact = 1.0;
      for (int i = 2; i <= k; ++i) fact *= i;
      return 1.0 / fact;
    }
    default: return 1.0;
  }
}

/** Constants of the general order-k error estimate: the base A (> 1) and f(k). */
struct TrotterErrorParams {
  double a_const = 2.0;
  FMode f_mode = FMode::InvK;

  void validate() const {
    if (!(a_const > 1.0)) throw std::invalid_argument("a_const must be > 1");
  }
};

/** Gate error r_k^(g) = p0 * gate count under the selected counting mode. */
inline double gate_error(const GateErrorModel& m, long long n_terms, long long n, int k,
                         const Schedule* schedule = nullptr) {
  m.validate();
  return m.p0 * static_cast<double>(gate_count(n_terms, n, k, m.count_mode, schedule));
}

/**
 * Conversion between the model's published first-order error coefficient
 * and the coefficient one-norm of the symbolic commutator sum: the
 * analytic k = 1 value equals (t^2 / 2n) * constant * one-norm.
 *
 * For the Ising chain the published coefficient is half the one-norm
 * value (the 2(N-1) pair contributions of magnitude 2 J Gamma enter it
 * once instead of twice); for the XY chain the two agree.
 */
inline double symbolic_conversion_constant(ModelKind kind) {
  return kind == ModelKind::Tfim ? 0.5 : 1.0;
}

/**
 * Analytic Trotterization error r_k^(T) for the benchmark models.
 *
 * The k = 1 and k = 2 coefficients are the model-specific closed forms;
 * k >= 3 uses the general estimate
 *   t^{k+1} / n^k * f(k) * (commutator growth)^k-type base * N * a^k.
 * All expressions carry the t^{k+1} / n^k prefactor; the k = 1 XY bond
 * pair count is the exact 2(N-2).
 */
inline double analytic_trotter_error(const ModelSpec& spec, const TrotterErrorParams& params,
                                     int k, long long n, double t) {
  spec.validate();
  params.validate();
  if (k < 1) throw std::invalid_argument("order k must be >= 1");
  if (n < 1) throw std::invalid_argument("step count n must be >= 1");
  if (!(t > 0.0)) throw std::invalid_argument("time t must be positive");

  const double j = spec.coupling;
  const double g = spec.field;
  const double nn = static_cast<double>(spec.n_sites);
  const double dn = static_cast<double>(n);
  if (spec.kind == ModelKind::Tfim) {
    if (k == 1) return (t * t / dn) * j * g * (nn - 1);
    if (k == 2) return 4.0 * std::pow(t, 3) / (dn * dn) * j * g * (j + g) * (nn - 1);
    return std::pow(t, k + 1) / std::pow(dn, k) * f_value(k, params.f_mode) * j * g *
           std::pow(j + g, k - 1) * nn * std::pow(params.a_const, k);
  }
  if (k == 1) return (t * t / (2.0 * dn)) * (4.0 * (nn - 1) * j * g + 4.0 * (nn - 2) * j * j);
  if (k == 2) return std::pow(t, 3) / (dn * dn) * 4.0 * (nn - 1) * j * (g + 2.0 * j) * (g + 2.0 * j);
  return std::pow(t, k + 1) / std::pow(dn, k) * f_value(k, params.f_mode) * j *
         std::pow(j + 2.0 * g, k) * nn * std::pow(params.a_const, k);
}

/**
 * Measured Trotterization error: the infidelity of the order-k, n-step
 * schedule against the exact evolution, from the given initial state.
 */
inline double empirical_trotter_error(const ModelSpec& spec, int k, long long n, double t,
                                      const StateVector& psi0, bool normalize = true) {
  const Hamiltonian h = build_model(spec);
  const Schedule sched = build_schedule(h, k, static_cast<int>(n), t);
  return infidelity(h, sched, psi0, normalize);
}

enum class ErrorSource { Analytic, Empirical };

inline std::string to_string(ErrorSource s) {
  return s == ErrorSource::Analytic ? "analytic" : "empirical";
}

/** Total simulation error budget r = r^(g) + r^(T) for one (k, n). */
struct ErrorBudget {
  int k = 1;
  long long n = 1;
  double r_gate = 0.0;
  double r_trotter = 0.0;
  double r_total = 0.0;
  ErrorSource source = ErrorSource::Analytic;
};

inline ErrorBudget total_error(const GateErrorModel& gate, const ModelSpec& spec,
                               const TrotterErrorParams& params, int k, long long n, double t,
                               ErrorSource source = ErrorSource::Analytic,
                               const StateVector* psi0 = nullptr) {
  ErrorBudget b;
  b.k = k;
  b.n = n;
  b.source = source;
  const long long n_terms =
      spec.kind == ModelKind::Tfim ? 2LL * spec.n_sites - 1 : 3LL * spec.n_sites - 2;
  b.r_gate = gate_error(gate, n_terms, n, k);
  if (source == ErrorSource::Analytic) {
    b.r_trotter = analytic_trotter_error(spec, params, k, n, t);
  } else {
    if (psi0 == nullptr)
      throw std::invalid_argument("empirical error budget requires an initial state");
    b.r_trotter = empirical_trotter_error(spec, k, n, t, *psi0);
  }
  b.r_total = b.r_gate + b.r_trotter;
  return b;
}

}  // namespace trotkit
