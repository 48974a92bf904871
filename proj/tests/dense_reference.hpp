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
//
// Test-only dense-matrix reference. Everything here is built from explicit
// 2x2 Pauli matrices and Kronecker products, independently of the library's
// symbolic algebra and mask-based state updates, so it can serve as an
// oracle for them.

#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "trotkit/pauli.hpp"

namespace dense_ref {

using Complex = std::complex<double>;
using Mat = std::vector<std::vector<Complex>>;
using Vec = std::vector<Complex>;

inline Mat zeros(std::size_t n) { return Mat(n, Vec(n, Complex(0.0, 0.0))); }

inline Mat eye(std::size_t n) {
  Mat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat pauli_mat(char p) {
  const Complex i(0.0, 1.0);
  switch (p) {
    case 'I': return {{1, 0}, {0, 1}};
    case 'X': return {{0, 1}, {1, 0}};
    case 'Y': return {{0, -i}, {i, 0}};
    case 'Z': return {{1, 0}, {0, -1}};
    default: throw std::invalid_argument("bad pauli char");
  }
}

inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t na = a.size(), nb = b.size();
  Mat m = zeros(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) m[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return m;
}

/** Dense matrix of a Pauli string in text form, site 1 leftmost. */
inline Mat string_mat(const std::string& paulis) {
  Mat m = {{1.0}};
  for (char c : paulis) m = kron(m, pauli_mat(c));
  return m;
}

inline Mat add(const Mat& a, const Mat& b) {
  Mat m = a;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] += b[i][j];
  return m;
}

inline Mat sub(const Mat& a, const Mat& b) {
  Mat m = a;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] -= b[i][j];
  return m;
}

inline Mat scale(Complex s, const Mat& a) {
  Mat m = a;
  for (auto& row : m)
    for (auto& x : row) x *= s;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) m[i][j] += a[i][k] * b[k][j];
    }
  return m;
}

inline Vec mul_vec(const Mat& a, const Vec& v) {
  Vec out(v.size(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline Mat commutator(const Mat& a, const Mat& b) { return sub(mul(a, b), mul(b, a)); }

inline double max_abs_diff(const Mat& a, const Mat& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
  return worst;
}

inline double frobenius(const Mat& a) {
  double acc = 0.0;
  for (const auto& row : a)
    for (const auto& x : row) acc += std::norm(x);
  return std::sqrt(acc);
}

inline double one_norm_inf(const Mat& a) {
  // max row sum of |entries|, used to pick the expm scaling power
  double worst = 0.0;
  for (const auto& row : a) {
    double s = 0.0;
    for (const auto& x : row) s += std::abs(x);
    worst = std::max(worst, s);
  }
  return worst;
}

/** Matrix exponential by scaling and squaring with a long Taylor series. */
inline Mat expm(const Mat& a) {
  int squarings = 0;
  double norm = one_norm_inf(a);
  while (norm > 0.5 && squarings < 60) {
    norm /= 2.0;
    ++squarings;
  }
  const Mat small = scale(1.0 / std::ldexp(1.0, squarings), a);
  Mat sum = eye(a.size());
  Mat term = eye(a.size());
  for (int j = 1; j <= 30; ++j) {
    term = scale(1.0 / j, mul(term, small));
    sum = add(sum, term);
  }
  for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
  return sum;
}

inline Mat dagger(const Mat& a) {
  const std::size_t n = a.size();
  Mat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = std::conj(a[j][i]);
  return m;
}

/** Expands a dense matrix in the Pauli-string basis via trace inner products. */
inline std::map<std::string, Complex> pauli_decompose(const Mat& m, int n_sites) {
  std::map<std::string, Complex> out;
  const std::size_t dim = m.size();
  std::string axes(n_sites, 'I');
  const char alphabet[] = {'I', 'X', 'Y', 'Z'};
  std::vector<int> digits(n_sites, 0);
  while (true) {
    for (int s = 0; s < n_sites; ++s) axes[s] = alphabet[digits[s]];
    const Mat p = string_mat(axes);
    Complex tr(0.0, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) tr += std::conj(p[k][i]) * m[k][i];
    tr /= static_cast<double>(dim);
    if (std::abs(tr) > 1e-13) out[axes] = tr;
    int pos = n_sites - 1;
    while (pos >= 0 && digits[pos] == 3) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
  return out;
}

inline double coeff_one_norm(const Mat& m, int n_sites) {
  double total = 0.0;
  for (const auto& [axes, coeff] : pauli_decompose(m, n_sites)) total += std::abs(coeff);
  return total;
}

// Bridges from library types: only the stored text/coefficients are read.
inline Mat term_mat(const trotkit::PauliTerm& t) { return scale(t.coeff, string_mat(t.string.str())); }

inline Mat hamiltonian_mat(const trotkit::Hamiltonian& h) {
  Mat m = zeros(std::size_t{1} << h.n_sites());
  for (const auto& t : h.terms()) m = add(m, term_mat(t));
  return m;
}

inline Mat sum_mat(const trotkit::PauliSum& s, int n_sites) {
  Mat m = zeros(std::size_t{1} << n_sites);
  for (const auto& t : s.terms()) m = add(m, term_mat(t));
  return m;
}

}  // namespace dense_ref
