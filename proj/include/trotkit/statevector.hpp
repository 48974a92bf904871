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

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trotkit/pauli.hpp"
#include "trotkit/schedule.hpp"

namespace trotkit {

/**
 * A full state vector of 2^N complex amplitudes.
 *
 * Bit convention: site 1 maps to the most significant bit of the basis
 * index, so basis_state("10") has its amplitude at index 2. Freshly built
 * basis and product states have unit norm; states evolved with complex
 * factor weights may drift off the unit sphere and the drift is tracked
 * rather than forbidden.
 */
struct StateVector {
  int n_sites = 0;
  std::vector<Complex> amps;

  std::size_t dim() const { return amps.size(); }
};

inline StateVector basis_state(int n_sites, std::uint64_t index) {
  if (n_sites < 1 || n_sites > 30) throw std::invalid_argument("n_sites out of range");
  StateVector s;
  s.n_sites = n_sites;
  s.amps.assign(std::size_t{1} << n_sites, Complex(0.0, 0.0));
  if (index >= s.amps.size()) throw std::invalid_argument("basis index out of range");
  s.amps[index] = 1.0;
  return s;
}

/** Computational basis state from a bitstring, site 1 leftmost ("0...0" -> index 0). */
inline StateVector basis_state(const std::string& bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring must be over {0,1}");
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return basis_state(static_cast<int>(bits.size()), index);
}

/** Uniform superposition |+>^N. */
inline StateVector plus_state(int n_sites) {
  if (n_sites < 1 || n_sites > 30) throw std::invalid_argument("n_sites out of range");
  StateVector s;
  s.n_sites = n_sites;
  const std::size_t dim = std::size_t{1} << n_sites;
  s.amps.assign(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  return s;
}

/** Inner product <a|b>, conjugate-linear in the first argument. */
inline Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("state dimension mismatch");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amps[i]) * b.amps[i];
  return acc;
}

inline double norm_sq(const StateVector& s) {
  double acc = 0.0;
  for (const auto& a : s.amps) acc += std::norm(a);
  return acc;
}

namespace detail {

// Bit masks describing the action of a Pauli string on basis indices:
// P |b> = i^phase_q * (-1)^{popcount(b & z_mask)} |b ^ x_mask>.
struct PauliMasks {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  int phase_q = 0;  // i^phase_q from Y = i X Z per site
};

inline PauliMasks masks_of(const PauliString& p) {
  PauliMasks m;
  const int n = static_cast<int>(p.size());
  for (int site = 0; site < n; ++site) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - site);  // site 1 = MSB
    switch (p.axis(static_cast<std::size_t>(site))) {
      case Pauli::I: break;
      case Pauli::X: m.x_mask |= bit; break;
      case Pauli::Y:
        m.x_mask |= bit;
        m.z_mask |= bit;
        m.phase_q += 1;
        break;
      case Pauli::Z: m.z_mask |= bit; break;
    }
  }
  m.phase_q &= 3;
  return m;
}

inline Complex pauli_phase(const PauliMasks& m, std::uint64_t source_index) {
  const int sign = std::popcount(source_index & m.z_mask) & 1 ? -1 : 1;
  return static_cast<double>(sign) * phase_from_q(m.phase_q);
}

// out += coeff * P * in
inline void add_pauli_applied(const PauliMasks& m, Complex coeff,
                              const std::vector<Complex>& in, std::vector<Complex>& out) {
  const std::size_t dim = in.size();
  for (std::size_t b = 0; b < dim; ++b)
    out[b ^ m.x_mask] += coeff * pauli_phase(m, b) * in[b];
}

}  // namespace detail

/**
 * Applies exp(-i * weight * c * P) to the state in place, using
 * exp(-i w c P) = cos(wc) Id - i sin(wc) P for P^2 = Id. Valid for complex
 * weights through the complex cosine and sine; real weights preserve the
 * norm.
 */
inline void apply_factor(const Factor& f, const Hamiltonian& h, StateVector& s) {
  if (f.term_index < 0 || static_cast<std::size_t>(f.term_index) >= h.n_terms())
    throw std::invalid_argument("factor term index out of range");
  if (h.n_sites() != static_cast<std::size_t>(s.n_sites))
    throw std::invalid_argument("Hamiltonian and state site counts differ");

  const PauliTerm& term = h.term(static_cast<std::size_t>(f.term_index));
  const Complex theta = f.weight * term.coeff;
  const Complex c = std::cos(theta);
  const Complex ms = Complex(0.0, -1.0) * std::sin(theta);  // -i sin(theta)
  const auto m = detail::masks_of(term.string);

  const std::size_t dim = s.dim();
  if (m.x_mask == 0) {
    for (std::size_t b = 0; b < dim; ++b) {
      const int sign = std::popcount(b & m.z_mask) & 1 ? -1 : 1;
      s.amps[b] *= c + ms * static_cast<double>(sign);
    }
    return;
  }
  for (std::size_t b = 0; b < dim; ++b) {
    const std::size_t partner = b ^ m.x_mask;
    if (partner < b) continue;
    const Complex vb = s.amps[b];
    const Complex vp = s.amps[partner];
    s.amps[b] = c * vb + ms * detail::pauli_phase(m, partner) * vp;
    s.amps[partner] = c * vp + ms * detail::pauli_phase(m, b) * vb;
  }
}

/** Applies every factor of the schedule in list order and returns the result. */
inline StateVector apply_schedule(const Schedule& sched, const Hamiltonian& h, StateVector psi) {
  if (sched.n_terms != static_cast<int>(h.n_terms()) ||
      sched.n_sites != static_cast<int>(h.n_sites()))
    throw std::invalid_argument("schedule does not match the Hamiltonian shape");
  for (const auto& f : sched.factors) apply_factor(f, h, psi);
  return psi;
}

/**
 * Exact evolution oracle: returns exp(-i t H) psi with vector-norm error
 * at most `tol`.
 *
 * The evolution is split into m substeps with m >= |t| * ||H||_1 and each
 * substep applies a truncated Taylor series of exp(-i (t/m) H) matrix-free,
 * term by term. The truncation degree d is chosen from the remainder bound
 * theta^{d+1}/(d+1)! * e^theta <= tol/m with theta = |t| ||H||_1 / m, so the
 * m per-substep errors add up to at most tol.
 */
inline StateVector exact_evolve(const Hamiltonian& h, double t, const StateVector& psi,
                                double tol = 1e-12) {
  if (h.n_sites() != static_cast<std::size_t>(psi.n_sites))
    throw std::invalid_argument("Hamiltonian and state site counts differ");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (t == 0.0) return psi;

  const double norm1 = std::abs(t) * h.coefficient_one_norm();
  const int substeps = std::max(1, static_cast<int>(std::ceil(norm1)));
  const double theta = norm1 / substeps;

  constexpr int kDegreeCap = 64;
  int degree = -1;
  double power = theta;  // theta^{d+1} for d = 0
  double factorial = 1.0;
  for (int d = 0; d <= kDegreeCap; ++d) {
    factorial *= d + 1;
    if (power / factorial * std::exp(theta) <= tol / substeps) {
      degree = d;
      break;
    }
    power *= theta;
  }
  if (degree < 0)
    throw std::runtime_error("exact_evolve: Taylor degree cap reached before tolerance");

  std::vector<detail::PauliMasks> masks;
  masks.reserve(h.n_terms());
  for (const auto& term : h.terms()) masks.push_back(detail::masks_of(term.string));

  const Complex step_factor(0.0, -t / substeps);  // -i t/m
  StateVector out = psi;
  std::vector<Complex> v(psi.dim());
  std::vector<Complex> hv(psi.dim());
  for (int s = 0; s < substeps; ++s) {
    v = out.amps;
    for (int j = 1; j <= degree; ++j) {
      std::fill(hv.begin(), hv.end(), Complex(0.0, 0.0));
      for (std::size_t i = 0; i < masks.size(); ++i)
        detail::add_pauli_applied(masks[i], h.term(i).coeff, v, hv);
      const Complex scale = step_factor / static_cast<double>(j);
      for (std::size_t b = 0; b < hv.size(); ++b) {
        v[b] = scale * hv[b];
        out.amps[b] += v[b];
      }
    }
  }
  return out;
}

/** Expectation <psi| S |psi> of a Pauli sum. */
inline Complex expectation(const PauliSum& sum, const StateVector& psi) {
  std::vector<Complex> acc(psi.dim(), Complex(0.0, 0.0));
  for (const auto& term : sum.terms())
    detail::add_pauli_applied(detail::masks_of(term.string), term.coeff, psi.amps, acc);
  Complex value(0.0, 0.0);
  for (std::size_t b = 0; b < psi.dim(); ++b) value += std::conj(psi.amps[b]) * acc[b];
  return value;
}

/**
 * Trotterization infidelity 1 - |<phi|chi>|^2 between the exact evolution
 * phi = exp(-i t H) psi0 and the schedule evolution chi.
 *
 * With `normalize` on (the default) the overlap is divided by <chi|chi>,
 * which keeps the value meaningful for the non-unitary complex-coefficient
 * orders; there the result can only dip below 0 by rounding, and anything
 * under -1e-12 raises a numeric error. The raw value is bounded below by
 * 1 - <chi|chi> instead (the overlap may exceed 1 when the norm drifts
 * upward), so the guard allows that much before erroring. Either way the
 * returned value is clamped to [0, 1].
 */
inline double infidelity(const Hamiltonian& h, const Schedule& sched, const StateVector& psi0,
                         bool normalize = true) {
  const StateVector phi = exact_evolve(h, sched.total_time, psi0);
  const StateVector chi = apply_schedule(sched, h, psi0);
  const double chi_sq = norm_sq(chi);
  if (chi_sq == 0.0) throw std::runtime_error("infidelity: evolved state has zero norm");
  double overlap_sq = std::norm(inner(phi, chi));
  if (normalize) overlap_sq /= chi_sq;
  double value = 1.0 - overlap_sq;
  const double lower_bound = normalize ? 0.0 : std::min(0.0, 1.0 - chi_sq);
  if (value < lower_bound - 1e-12)
    throw std::runtime_error("infidelity: overlap exceeds its norm bound, value " +
                             std::to_string(value));
  return std::min(std::max(value, 0.0), 1.0);
}

/** A dense 2^N x 2^N matrix, for small-system oracle checks only. */
struct DenseOperator {
  std::size_t dim = 0;
  std::vector<Complex> entries;  // row-major

  Complex& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
  const Complex& at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
};

inline DenseOperator identity_operator(std::size_t dim) {
  DenseOperator m;
  m.dim = dim;
  m.entries.assign(dim * dim, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

inline DenseOperator multiply(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim != b.dim) throw std::invalid_argument("operator dimension mismatch");
  DenseOperator out;
  out.dim = a.dim;
  out.entries.assign(a.dim * a.dim, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < a.dim; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

namespace detail {

inline void check_oracle_limit(std::size_t n_sites, int oracle_limit) {
  if (static_cast<int>(n_sites) > oracle_limit)
    throw std::invalid_argument("dense operator limited to " + std::to_string(oracle_limit) +
                                " sites, got " + std::to_string(n_sites));
}

// Dense matrix of a Pauli string: one nonzero per column.
inline void add_dense_pauli(DenseOperator& m, const PauliMasks& masks, Complex coeff) {
  for (std::size_t col = 0; col < m.dim; ++col)
    m.at(col ^ masks.x_mask, col) += coeff * pauli_phase(masks, col);
}

}  // namespace detail

inline DenseOperator dense_operator(const PauliSum& sum, std::size_t n_sites,
                                    int oracle_limit = 6) {
  detail::check_oracle_limit(n_sites, oracle_limit);
  DenseOperator m;
  m.dim = std::size_t{1} << n_sites;
  m.entries.assign(m.dim * m.dim, Complex(0.0, 0.0));
  for (const auto& term : sum.terms())
    detail::add_dense_pauli(m, detail::masks_of(term.string), term.coeff);
  return m;
}

inline DenseOperator dense_operator(const Hamiltonian& h, int oracle_limit = 6) {
  detail::check_oracle_limit(h.n_sites(), oracle_limit);
  DenseOperator m;
  m.dim = std::size_t{1} << h.n_sites();
  m.entries.assign(m.dim * m.dim, Complex(0.0, 0.0));
  for (const auto& term : h.terms())
    detail::add_dense_pauli(m, detail::masks_of(term.string), term.coeff);
  return m;
}

/** Dense ordered product of the schedule's factor exponentials. */
inline DenseOperator dense_operator(const Schedule& sched, const Hamiltonian& h,
                                    int oracle_limit = 6) {
  detail::check_oracle_limit(h.n_sites(), oracle_limit);
  if (sched.n_terms != static_cast<int>(h.n_terms()) ||
      sched.n_sites != static_cast<int>(h.n_sites()))
    throw std::invalid_argument("schedule does not match the Hamiltonian shape");

  const std::size_t dim = std::size_t{1} << h.n_sites();
  DenseOperator product = identity_operator(dim);
  for (const auto& f : sched.factors) {
    const PauliTerm& term = h.term(static_cast<std::size_t>(f.term_index));
    const Complex theta = f.weight * term.coeff;
    DenseOperator factor;
    factor.dim = dim;
    factor.entries.assign(dim * dim, Complex(0.0, 0.0));
    const Complex c = std::cos(theta);
    for (std::size_t i = 0; i < dim; ++i) factor.at(i, i) = c;
    detail::add_dense_pauli(factor, detail::masks_of(term.string),
                            Complex(0.0, -1.0) * std::sin(theta));
    product = multiply(factor, product);  // applied after the factors so far
  }
  return product;
}

/** Frobenius-norm distance between two dense operators. */
inline double operator_distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim != b.dim) throw std::invalid_argument("operator dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) acc += std::norm(a.entries[i] - b.entries[i]);
  return std::sqrt(acc);
}

}  // namespace trotkit
