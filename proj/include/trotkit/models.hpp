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

#include "trotkit/pauli.hpp"

namespace trotkit {

enum class ModelKind { Tfim, Xy };

inline std::string to_string(ModelKind kind) {
  return kind == ModelKind::Tfim ? "tfim" : "xy";
}

inline ModelKind model_kind_from_string(const std::string& s) {
  if (s == "tfim") return ModelKind::Tfim;
  if (s == "xy") return ModelKind::Xy;
  throw std::invalid_argument("unknown model kind: " + s);
}

/**
 * Parameters of the two benchmark spin chains: coupling J, transverse
 * field Gamma, and the chain length N >= 2. Open boundary conditions.
 */
struct ModelSpec {
  ModelKind kind = ModelKind::Tfim;
  int n_sites = 2;
  double coupling = 1.0;  // J
  double field = 1.0;     // Gamma

  /** Field-to-coupling ratio alpha = Gamma / J. Requires J != 0. */
  double alpha() const {
    if (coupling == 0.0) throw std::domain_error("alpha undefined for J = 0");
    return field / coupling;
  }

  void validate() const {
    if (n_sites < 2) throw std::invalid_argument("model needs n_sites >= 2");
    if (!std::isfinite(coupling) || !std::isfinite(field))
      throw std::invalid_argument("model coupling and field must be finite");
  }

  bool operator==(const ModelSpec&) const = default;
};

/**
 * Transverse-field Ising chain, H = -J sum Z_i Z_{i+1} - Gamma sum X_i.
 *
 * Term order: the N-1 bond terms first, then the N field terms; K = 2N-1.
 * The order is fixed because the product-formula error depends on it.
 */
inline Hamiltonian build_tfim(const ModelSpec& spec) {
  spec.validate();
  if (spec.kind != ModelKind::Tfim) throw std::invalid_argument("build_tfim requires kind tfim");
  const std::size_t n = static_cast<std::size_t>(spec.n_sites);
  std::vector<PauliTerm> terms;
  terms.reserve(2 * n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<Pauli> axes(n, Pauli::I);
    axes[i] = Pauli::Z;
    axes[i + 1] = Pauli::Z;
    terms.push_back({-spec.coupling, PauliString(std::move(axes))});
  }
  for (std::size_t i = 0; i < n; ++i)
    terms.push_back({-spec.field, PauliString::single(n, i, Pauli::X)});
  return Hamiltonian(n, std::move(terms));
}

/**
 * XY chain with a transverse field,
 * H = -J sum X_i X_{i+1} - J sum Y_i Y_{i+1} - Gamma sum X_i.
 *
 * Term order: the XX bond block, then the YY bond block, then the field
 * block; K = 3N-2.
 */
inline Hamiltonian build_xy(const ModelSpec& spec) {
  spec.validate();
  if (spec.kind != ModelKind::Xy) throw std::invalid_argument("build_xy requires kind xy");
  const std::size_t n = static_cast<std::size_t>(spec.n_sites);
  std::vector<PauliTerm> terms;
  terms.reserve(3 * n - 2);
  for (Pauli axis : {Pauli::X, Pauli::Y}) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<Pauli> axes(n, Pauli::I);
      axes[i] = axis;
      axes[i + 1] = axis;
      terms.push_back({-spec.coupling, PauliString(std::move(axes))});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    terms.push_back({-spec.field, PauliString::single(n, i, Pauli::X)});
  return Hamiltonian(n, std::move(terms));
}

inline Hamiltonian build_model(const ModelSpec& spec) {
  return spec.kind == ModelKind::Tfim ? build_tfim(spec) : build_xy(spec);
}

}  // namespace trotkit
