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
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "trotkit/pauli.hpp"

namespace trotkit {

/**
 * One exponential factor exp(-i * weight * H_{term_index}) of a product
 * formula. Weights are complex for decomposition orders >= 2.
 */
struct Factor {
  int term_index = 0;  // 0-based index into the Hamiltonian term list
  Complex weight;      // units of time

  bool operator==(const Factor&) const = default;
};

/**
 * A product-formula realization of exp(-i t H): an ordered factor list in
 * application order (factors.front() is applied to the state first),
 * together with the decomposition order k, the step count n, and the
 * Hamiltonian shape it was built for.
 */
struct Schedule {
  std::vector<Factor> factors;
  int order_k = 1;
  int steps_n = 1;
  double total_time = 0.0;
  int n_terms = 0;
  int n_sites = 0;

  bool operator==(const Schedule&) const = default;
};

/**
 * Splitting coefficient p_k = (1 + exp(i pi / k))^{-1} of the complex
 * Suzuki recursion U_k(t) = U_{k-1}(p_k t) U_{k-1}((1 - p_k) t).
 *
 * Satisfies p_k + (1 - p_k) = 1 and p_k^k + (1 - p_k)^k = 0, which cancels
 * the leading error term of U_{k-1}. Defined for k >= 2; the recursion
 * bottoms out at the explicit first-order formula.
 */
inline Complex split_coefficient(int k) {
  if (k < 2) throw std::domain_error("split coefficient requires k >= 2");
  const Complex root = std::exp(Complex(0.0, std::numbers::pi / k));
  return 1.0 / (1.0 + root);
}

namespace detail {

inline void append_step(std::vector<Factor>& out, int n_terms, int k, Complex tau) {
  if (k == 1) {
    // First-order block exp(-i tau H_1) ... exp(-i tau H_K), rightmost
    // operator factor first in application order.
    for (int i = n_terms - 1; i >= 0; --i) out.push_back({i, tau});
    return;
  }
  const Complex p = split_coefficient(k);
  append_step(out, n_terms, k - 1, (1.0 - p) * tau);
  append_step(out, n_terms, k - 1, p * tau);
}

}  // namespace detail

/**
 * Builds the order-k schedule for exp(-i t H) with n steps: one step is the
 * Suzuki recursion unwound to first-order blocks over the Hamiltonian's
 * fixed term order, repeated n times. The factor count is 2^{k-1} * K * n,
 * and per step the weights of each term sum to t / n.
 */
inline Schedule build_schedule(const Hamiltonian& h, int k, int n, double t, int k_max = 6) {
  if (k < 1 || k > k_max)
    throw std::invalid_argument("decomposition order k must be in 1.." + std::to_string(k_max));
  if (n < 1) throw std::invalid_argument("step count n must be >= 1");
  if (!std::isfinite(t)) throw std::invalid_argument("evolution time must be finite");

  const int n_terms = static_cast<int>(h.n_terms());
  Schedule s;
  s.order_k = k;
  s.steps_n = n;
  s.total_time = t;
  s.n_terms = n_terms;
  s.n_sites = static_cast<int>(h.n_sites());
  s.factors.reserve(static_cast<std::size_t>(n_terms) * n << (k - 1));

  std::vector<Factor> step;
  detail::append_step(step, n_terms, k, Complex(t / n, 0.0));
  for (int rep = 0; rep < n; ++rep) s.factors.insert(s.factors.end(), step.begin(), step.end());
  return s;
}

/**
 * Combines runs of adjacent factors that share a term index by adding
 * their weights; the operator product is unchanged. Factors whose merged
 * weight is exactly zero are dropped.
 */
inline Schedule merge_adjacent(const Schedule& s) {
  Schedule out = s;
  out.factors.clear();
  for (const auto& f : s.factors) {
    if (!out.factors.empty() && out.factors.back().term_index == f.term_index) {
      out.factors.back().weight += f.weight;
      if (out.factors.back().weight == Complex(0.0, 0.0)) out.factors.pop_back();
    } else {
      out.factors.push_back(f);
    }
  }
  return out;
}

/**
 * Gate-count conventions for an order-k, n-step schedule over K terms.
 *
 * `Literal` counts the factors of an actual schedule. `Eq6` is the
 * published general-case count 2^{k-2} K n (with K n at k = 1), and
 * `Doubling` is the recursion-faithful 2^{k-1} K n. The published count
 * and the recursion count disagree at k = 2; both are kept selectable.
 */
enum class GateCountMode { Literal, Eq6, Doubling };

inline std::string to_string(GateCountMode mode) {
  switch (mode) {
    case GateCountMode::Literal: return "literal";
    case GateCountMode::Eq6: return "eq6";
    default: return "doubling";
  }
}

inline GateCountMode gate_count_mode_from_string(const std::string& s) {
  if (s == "literal") return GateCountMode::Literal;
  if (s == "eq6") return GateCountMode::Eq6;
  if (s == "doubling") return GateCountMode::Doubling;
  throw std::invalid_argument("unknown gate count mode: " + s);
}

inline long long gate_count(long long n_terms, long long n, int k, GateCountMode mode,
                            const Schedule* schedule = nullptr) {
  if (k < 1) throw std::invalid_argument("gate count requires k >= 1");
  switch (mode) {
    case GateCountMode::Literal:
      if (schedule == nullptr)
        throw std::invalid_argument("literal gate count requires a schedule");
      return static_cast<long long>(schedule->factors.size());
    case GateCountMode::Eq6:
      return k == 1 ? n_terms * n : (n_terms * n) << (k - 2);
    default:
      return (n_terms * n) << (k - 1);
  }
}

}  // namespace trotkit
