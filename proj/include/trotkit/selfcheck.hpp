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
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trotkit/errors.hpp"
#include "trotkit/models.hpp"
#include "trotkit/optimizer.hpp"
#include "trotkit/pauli.hpp"
#include "trotkit/schedule.hpp"
#include "trotkit/serialization.hpp"
#include "trotkit/statevector.hpp"

namespace trotkit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/**
 * Frozen scalar probes: quantities the library computes that are pinned to
 * reference values. The expected values can be overridden from a fixture
 * file, in which case a corrupted file makes the checks fail.
 */
struct FixtureProbe {
  std::string name;
  std::function<double()> compute;
  double expected = 0.0;
  double tolerance = 1e-12;
};

inline std::vector<FixtureProbe> fixture_probes() {
  return {
      {"tfim_n3_noncommuting_pairs",
       [] { return static_cast<double>(noncommuting_pairs(build_tfim({ModelKind::Tfim, 3, 1.0, 1.0})).size()); },
       4.0},
      {"tfim_n3_first_order_one_norm",
       [] { return one_norm(first_order_commutator_sum(build_tfim({ModelKind::Tfim, 3, 1.0, 1.0})).sum); },
       8.0},
      {"xy_n4_noncommuting_pairs",
       [] { return static_cast<double>(noncommuting_pairs(build_xy({ModelKind::Xy, 4, 1.0, 1.0})).size()); },
       10.0},
      {"tfim_n2_nested_k2_one_norm",
       [] { return one_norm(nested_commutator_sum(build_tfim({ModelKind::Tfim, 2, 1.0, 1.0}), 2)); },
       24.0},
      {"tfim_n2_nested_k3_one_norm",
       [] { return one_norm(nested_commutator_sum(build_tfim({ModelKind::Tfim, 2, 1.0, 1.0}), 3)); },
       80.0},
      {"split_coefficient_p4_imag", [] { return split_coefficient(4).imag(); },
       -0.2071067811865475, 1e-14},
      {"tfim_n5_total_error_k1_n100",
       [] {
         return total_error(GateErrorModel{5e-5, GateCountMode::Eq6},
                            {ModelKind::Tfim, 5, 1.0, 1.0}, {}, 1, 100, 1.0)
             .r_total;
       },
       0.085, 1e-14},
      {"optimal_steps_first_order_r_min",
       [] { return optimal_steps(CostPair{2.0 * 5 * 5e-5, 5.0, 1}).r_min; }, 0.1, 1e-13},
      {"phi_b125_k2", [] { return phi_value(2, 125.0, FMode::InvK); }, 20.0, 1e-12},
  };
}

namespace detail {

inline double dense_max_diff(const DenseOperator& a, const DenseOperator& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
  return worst;
}

// Exact dense evolution operator assembled column by column from the
// certified matrix-free oracle.
inline DenseOperator exact_dense_operator(const Hamiltonian& h, double t) {
  const std::size_t dim = std::size_t{1} << h.n_sites();
  DenseOperator u;
  u.dim = dim;
  u.entries.assign(dim * dim, Complex(0.0, 0.0));
  for (std::size_t col = 0; col < dim; ++col) {
    auto psi = exact_evolve(h, t, basis_state(static_cast<int>(h.n_sites()), col));
    for (std::size_t row = 0; row < dim; ++row) u.at(row, col) = psi.amps[row];
  }
  return u;
}

inline PauliTerm random_check_term(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> axis(0, 3);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::vector<Pauli> axes(n);
  for (auto& a : axes) a = static_cast<Pauli>(axis(rng));
  return {Complex(coeff(rng), coeff(rng)), PauliString(std::move(axes))};
}

}  // namespace detail

/**
 * Runs every oracle and property suite plus the fixture probes; returns
 * one result per check. Expected fixture values can be overridden (for
 * all or a subset of probe names) through `fixture_overrides`.
 */
inline std::vector<CheckResult> run_self_checks(
    const std::map<std::string, double>* fixture_overrides = nullptr) {
  std::vector<CheckResult> results;
  auto run = [&results](const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = body();  // empty detail means pass
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  };

  run("pauli_product_closure", [] {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
      auto a = detail::random_check_term(rng, 3).string;
      auto b = detail::random_check_term(rng, 3).string;
      auto prod = multiply(a, b);
      if (std::abs(std::abs(prod.phase) - 1.0) > 1e-15) return std::string("non-unit phase");
      auto lhs = multiply(dense_operator(PauliSum({{1.0, a}}), 3),
                          dense_operator(PauliSum({{1.0, b}}), 3));
      auto rhs = dense_operator(PauliSum({{prod.phase, prod.string}}), 3);
      if (detail::dense_max_diff(lhs, rhs) > 1e-12) return std::string("product mismatch");
    }
    return std::string();
  });

  run("commutator_antisymmetry", [] {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 50; ++trial) {
      auto a = detail::random_check_term(rng, 3);
      auto b = detail::random_check_term(rng, 3);
      if (one_norm(commutator(a, b) + commutator(b, a)) != 0.0)
        return std::string("not exactly antisymmetric");
    }
    return std::string();
  });

  run("jacobi_identity", [] {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 30; ++trial) {
      auto a = detail::random_check_term(rng, 3);
      auto b = detail::random_check_term(rng, 3);
      auto c = detail::random_check_term(rng, 3);
      PauliSum total = commutator(a, commutator(b, c));
      total += commutator(b, commutator(c, a));
      total += commutator(c, commutator(a, b));
      if (one_norm(total) > 1e-12) return std::string("Jacobi residual too large");
    }
    return std::string();
  });

  run("commutator_dense_agreement", [] {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 30; ++trial) {
      auto a = detail::random_check_term(rng, 3);
      auto b = detail::random_check_term(rng, 3);
      auto da = dense_operator(PauliSum({a}), 3);
      auto db = dense_operator(PauliSum({b}), 3);
      auto lhs = multiply(da, db);
      auto rhs = multiply(db, da);
      for (std::size_t i = 0; i < lhs.entries.size(); ++i) lhs.entries[i] -= rhs.entries[i];
      if (detail::dense_max_diff(dense_operator(commutator(a, b), 3), lhs) > 1e-12)
        return std::string("symbolic and dense commutators differ");
    }
    return std::string();
  });

  run("split_coefficient_roots", [] {
    for (int k = 2; k <= 8; ++k) {
      const Complex p = split_coefficient(k);
      if (std::abs(std::pow(p, k) + std::pow(1.0 - p, k)) > 1e-12)
        return "root property fails at k = " + std::to_string(k);
    }
    return std::string();
  });

  run("schedule_telescoping", [] {
    auto h = build_xy({ModelKind::Xy, 3, 1.0, 0.8});
    const double t = 0.7;
    const int n = 2;
    for (int k = 1; k <= 6; ++k) {
      auto s = build_schedule(h, k, n, t);
      const std::size_t per_step = s.factors.size() / n;
      for (int step = 0; step < n; ++step) {
        std::map<int, Complex> sums;
        for (std::size_t i = step * per_step; i < (step + 1) * per_step; ++i)
          sums[s.factors[i].term_index] += s.factors[i].weight;
        for (const auto& [term, sum] : sums)
          if (std::abs(sum - t / n) > 1e-12)
            return "weight sum off at k = " + std::to_string(k);
      }
    }
    return std::string();
  });

  run("schedule_order_scaling", [] {
    auto h = build_tfim({ModelKind::Tfim, 3, 1.0, 1.0});
    const double t = 0.4;
    for (int k = 1; k <= 3; ++k) {
      const double d8 =
          operator_distance(dense_operator(build_schedule(h, k, 8, t), h),
                            detail::exact_dense_operator(h, t));
      const double d16 =
          operator_distance(dense_operator(build_schedule(h, k, 16, t), h),
                            detail::exact_dense_operator(h, t));
      const double ratio = d16 / d8;
      const double expected = std::ldexp(1.0, -k);
      if (ratio < expected * 0.8 || ratio > expected * 1.25)
        return "error ratio off at k = " + std::to_string(k);
    }
    return std::string();
  });

  run("apply_schedule_dense_agreement", [] {
    auto h = build_tfim({ModelKind::Tfim, 3, 1.0, 0.6});
    auto psi = plus_state(3);
    for (int k = 1; k <= 3; ++k) {
      auto sched = build_schedule(h, k, 4, 0.9);
      auto evolved = apply_schedule(sched, h, psi);
      auto u = dense_operator(sched, h);
      for (std::size_t row = 0; row < u.dim; ++row) {
        Complex expected(0.0, 0.0);
        for (std::size_t col = 0; col < u.dim; ++col) expected += u.at(row, col) * psi.amps[col];
        if (std::abs(expected - evolved.amps[row]) > 1e-10)
          return "state and operator routes differ at k = " + std::to_string(k);
      }
    }
    return std::string();
  });

  run("exact_evolve_group_property", [] {
    auto h = build_xy({ModelKind::Xy, 3, 1.0, 0.5});
    auto psi = plus_state(3);
    auto split = exact_evolve(h, 0.45, exact_evolve(h, 0.25, psi));
    auto whole = exact_evolve(h, 0.7, psi);
    double dist = 0.0;
    for (std::size_t i = 0; i < split.dim(); ++i) dist += std::norm(split.amps[i] - whole.amps[i]);
    return std::sqrt(dist) < 1e-10 ? std::string() : std::string("composition drift too large");
  });

  run("infidelity_commuting_zero", [] {
    Hamiltonian h(2, {{-0.8, PauliString::parse("XI")}, {-0.6, PauliString::parse("IX")}});
    auto psi = basis_state("00");
    for (int k = 1; k <= 6; ++k)
      if (infidelity(h, build_schedule(h, k, 1, 1.1), psi) > 1e-12)
        return "commuting chain not exact at k = " + std::to_string(k);
    return std::string();
  });

  run("optimal_steps_grid_agreement", [] {
    std::mt19937 rng(113);
    std::uniform_real_distribution<double> log_cg(-9.0, -4.0);
    std::uniform_real_distribution<double> log_ct(-1.0, 3.0);
    std::uniform_int_distribution<int> order(1, 4);
    for (int trial = 0; trial < 10; ++trial) {
      CostPair c{std::exp(log_cg(rng)), std::exp(log_ct(rng)), order(rng)};
      auto report = optimal_steps(c);
      long long best_n = 1;
      double best = c.total_error_at(1.0);
      for (long long n = 2; n <= 100000; ++n) {
        const double r = c.total_error_at(static_cast<double>(n));
        if (r < best) {
          best = r;
          best_n = n;
        }
      }
      if (std::llabs(best_n - report.n_star_int) > 1)
        return std::string("grid and closed-form minimizers disagree");
    }
    return std::string();
  });

  run("kopt_staircase_monotone", [] {
    ModelSpec spec{ModelKind::Tfim, 8, 1.0, 1.0};
    TrotterErrorParams params;
    int last = 100;
    for (double p0 : log_grid(1e-8, 1e-2, 15)) {
      GateErrorModel gate{p0, GateCountMode::Eq6};
      const int k = k_opt(spec, params, gate, 1.0, KOptMode::Analytic).k;
      if (k > last) return std::string("staircase not monotone");
      last = k;
    }
    return std::string();
  });

  run("schedule_roundtrip", [] {
    ModelSpec spec{ModelKind::Xy, 3, 0.75, 1.5};
    auto h = build_xy(spec);
    auto s = build_schedule(h, 3, 2, 0.37);
    auto parsed = parse_schedule(json::parse(export_schedule(s, h, spec).dump()));
    return (parsed.schedule == s && parsed.model == spec)
               ? std::string()
               : std::string("round-trip changed the schedule");
  });

  for (const auto& probe : fixture_probes()) {
    run("fixture_" + probe.name, [&probe, fixture_overrides] {
      double expected = probe.expected;
      if (fixture_overrides != nullptr) {
        auto it = fixture_overrides->find(probe.name);
        if (it != fixture_overrides->end()) expected = it->second;
      }
      const double got = probe.compute();
      if (std::abs(got - expected) <= probe.tolerance) return std::string();
      std::ostringstream oss;
      oss << "expected " << expected << ", got " << got;
      return oss.str();
    });
  }

  if (fixture_overrides != nullptr) {
    for (const auto& [name, value] : *fixture_overrides) {
      bool known = false;
      for (const auto& probe : fixture_probes()) known = known || probe.name == name;
      if (!known)
        results.push_back({"fixture_" + name, false, "unknown fixture name in override file"});
    }
  }

  return results;
}

}  // namespace trotkit
