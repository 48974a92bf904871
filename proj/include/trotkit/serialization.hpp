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

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "trotkit/errors.hpp"
#include "trotkit/models.hpp"
#include "trotkit/pauli.hpp"
#include "trotkit/schedule.hpp"

namespace trotkit {

using json = nlohmann::json;

inline void to_json(json& j, const ModelSpec& spec) {
  j = json{{"kind", to_string(spec.kind)},
           {"n_sites", spec.n_sites},
           {"j", spec.coupling},
           {"gamma", spec.field}};
}

inline void from_json(const json& j, ModelSpec& spec) {
  spec.kind = model_kind_from_string(j.at("kind").get<std::string>());
  spec.n_sites = j.at("n_sites").get<int>();
  spec.coupling = j.at("j").get<double>();
  spec.field = j.at("gamma").get<double>();
}

inline void to_json(json& j, const ErrorBudget& b) {
  j = json{{"k", b.k},           {"n", b.n},
           {"r_gate", b.r_gate}, {"r_trotter", b.r_trotter},
           {"r_total", b.r_total}, {"source", to_string(b.source)}};
}

inline json complex_to_json(const Complex& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

inline Complex complex_from_json(const json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

/**
 * Schedule document:
 * {"model": ModelSpec, "order": k, "steps": n, "time": t,
 *  "terms": [{"coeff": real, "paulis": "ZZI"}, ...],
 *  "factors": [{"term": int (0-based), "weight": {"re": ..., "im": ...}}, ...]}
 * Factors are listed in application order.
 */
inline json export_schedule(const Schedule& s, const Hamiltonian& h, const ModelSpec& spec) {
  if (s.n_terms != static_cast<int>(h.n_terms()) || s.n_sites != static_cast<int>(h.n_sites()))
    throw std::invalid_argument("schedule does not match the Hamiltonian shape");
  json terms = json::array();
  for (const auto& t : h.terms())
    terms.push_back(json{{"coeff", t.coeff.real()}, {"paulis", t.string.str()}});
  json factors = json::array();
  for (const auto& f : s.factors)
    factors.push_back(json{{"term", f.term_index}, {"weight", complex_to_json(f.weight)}});
  return json{{"model", spec},       {"order", s.order_k}, {"steps", s.steps_n},
              {"time", s.total_time}, {"terms", terms},     {"factors", factors}};
}

struct ScheduleDocument {
  ModelSpec model;
  Hamiltonian hamiltonian;
  Schedule schedule;
};

inline ScheduleDocument parse_schedule(const json& j) {
  const ModelSpec spec = j.at("model").get<ModelSpec>();
  std::vector<PauliTerm> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back({Complex(t.at("coeff").get<double>(), 0.0),
                     PauliString::parse(t.at("paulis").get<std::string>())});
  Hamiltonian h(static_cast<std::size_t>(spec.n_sites), std::move(terms));

  Schedule s;
  s.order_k = j.at("order").get<int>();
  s.steps_n = j.at("steps").get<int>();
  s.total_time = j.at("time").get<double>();
  s.n_terms = static_cast<int>(h.n_terms());
  s.n_sites = spec.n_sites;
  for (const auto& f : j.at("factors")) {
    const int term = f.at("term").get<int>();
    if (term < 0 || term >= s.n_terms)
      throw std::invalid_argument("schedule factor refers to a missing term");
    s.factors.push_back({term, complex_from_json(f.at("weight"))});
  }
  return {spec, std::move(h), std::move(s)};
}

}  // namespace trotkit
