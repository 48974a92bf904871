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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trotkit {

using Complex = std::complex<double>;

/** Single-site Pauli operator (and identity). */
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char to_char(Pauli p) {
  constexpr char names[] = {'I', 'X', 'Y', 'Z'};
  return names[static_cast<std::uint8_t>(p)];
}

inline Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("invalid Pauli character: ") + c);
  }
}

namespace detail {

// Single-site products a*b: resulting axis and the power q of the phase i^q.
// Rows are a, columns are b, in the order I, X, Y, Z.
inline constexpr std::uint8_t kProductAxis[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
inline constexpr std::uint8_t kProductPhaseQ[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

inline Complex phase_from_q(int q) {
  switch (q & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace detail

/**
 * A tensor product of single-site Pauli operators, one per site.
 *
 * Site 1 is the leftmost entry; the text form is one character per site
 * from {I, X, Y, Z}, e.g. "ZZI" for Z_1 Z_2 on three sites. Ordering is
 * lexicographic with I < X < Y < Z, which fixes the canonical term order
 * of PauliSum.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> axes) : axes_(std::move(axes)) {}

  static PauliString identity(std::size_t n_sites) {
    return PauliString(std::vector<Pauli>(n_sites, Pauli::I));
  }

  /** Parses the text form, e.g. "ZZI". Throws on empty or invalid input. */
  static PauliString parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("PauliString must have at least one site");
    std::vector<Pauli> axes;
    axes.reserve(text.size());
    for (char c : text) axes.push_back(pauli_from_char(c));
    return PauliString(std::move(axes));
  }

  /** Builds a string that is `p` on the given 0-based site and I elsewhere. */
  static PauliString single(std::size_t n_sites, std::size_t site, Pauli p) {
    if (site >= n_sites) throw std::invalid_argument("site index out of range");
    std::vector<Pauli> axes(n_sites, Pauli::I);
    axes[site] = p;
    return PauliString(std::move(axes));
  }

  std::size_t size() const { return axes_.size(); }
  Pauli axis(std::size_t site) const { return axes_.at(site); }
  const std::vector<Pauli>& axes() const { return axes_; }

  bool is_identity() const {
    return std::all_of(axes_.begin(), axes_.end(), [](Pauli p) { return p == Pauli::I; });
  }

  std::string str() const {
    std::string s;
    s.reserve(axes_.size());
    for (Pauli p : axes_) s.push_back(to_char(p));
    return s;
  }

  auto operator<=>(const PauliString&) const = default;

 private:
  std::vector<Pauli> axes_;
};

/** Result of a Pauli string product: a*b = phase * string. */
struct PauliProduct {
  Complex phase;  // one of {1, -1, i, -i}
  PauliString string;
};

namespace detail {

struct RawProduct {
  int phase_q;  // phase is i^phase_q
  PauliString string;
};

inline RawProduct multiply_raw(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("Pauli string length mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  std::vector<Pauli> axes(a.size());
  int q = 0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    const auto ia = static_cast<std::uint8_t>(a.axis(s));
    const auto ib = static_cast<std::uint8_t>(b.axis(s));
    axes[s] = static_cast<Pauli>(kProductAxis[ia][ib]);
    q += kProductPhaseQ[ia][ib];
  }
  return {q & 3, PauliString(std::move(axes))};
}

}  // namespace detail

inline PauliProduct multiply(const PauliString& a, const PauliString& b) {
  auto raw = detail::multiply_raw(a, b);
  return {detail::phase_from_q(raw.phase_q), std::move(raw.string)};
}

/** A weighted Pauli string. A zero coefficient is the zero term. */
struct PauliTerm {
  Complex coeff;
  PauliString string;

  bool operator==(const PauliTerm&) const = default;
};

/**
 * A sum of weighted Pauli strings in canonical form: terms sorted
 * lexicographically by axes, duplicate strings merged, exact-zero
 * coefficients dropped. Canonicalization is idempotent.
 */
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::vector<PauliTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  PauliSum& operator+=(const PauliSum& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    canonicalize();
    return *this;
  }

  friend PauliSum operator+(PauliSum a, const PauliSum& b) {
    a += b;
    return a;
  }

  PauliSum scaled(Complex factor) const {
    std::vector<PauliTerm> ts = terms_;
    for (auto& t : ts) t.coeff *= factor;
    return PauliSum(std::move(ts));
  }

  bool operator==(const PauliSum&) const = default;

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return a.string < b.string; });
    std::vector<PauliTerm> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().string == t.string) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [](const PauliTerm& t) {
      return t.coeff.real() == 0.0 && t.coeff.imag() == 0.0;
    });
    terms_ = std::move(merged);
  }

  std::vector<PauliTerm> terms_;
};

/** Sum of |coeff| over the canonical terms; zero iff the sum is empty. */
inline double one_norm(const PauliSum& s) {
  double total = 0.0;
  for (const auto& t : s.terms()) total += std::abs(t.coeff);
  return total;
}

/**
 * Commutator [a, b] = ab - ba of two weighted Pauli strings.
 *
 * Pauli strings either commute or anticommute, so the result is either the
 * empty sum or the single term 2 * coeff_a * coeff_b * phase(ab) * (ab).
 */
inline PauliSum commutator(const PauliTerm& a, const PauliTerm& b) {
  auto ab = detail::multiply_raw(a.string, b.string);
  auto ba = detail::multiply_raw(b.string, a.string);
  if (ab.phase_q == ba.phase_q) return {};
  Complex coeff = 2.0 * a.coeff * b.coeff * detail::phase_from_q(ab.phase_q);
  return PauliSum({PauliTerm{coeff, std::move(ab.string)}});
}

/** Commutator of a term with every term of a sum, [a, s]. */
inline PauliSum commutator(const PauliTerm& a, const PauliSum& s) {
  std::vector<PauliTerm> out;
  out.reserve(s.size());
  for (const auto& t : s.terms()) {
    PauliSum c = commutator(a, t);
    for (const auto& ct : c.terms()) out.push_back(ct);
  }
  return PauliSum(std::move(out));
}

/**
 * An ordered list of K weighted Pauli strings over N sites with real
 * coefficients. The term order is fixed at construction and defines the
 * factor order of the product-formula schedules.
 */
class Hamiltonian {
 public:
  Hamiltonian(std::size_t n_sites, std::vector<PauliTerm> terms)
      : n_sites_(n_sites), terms_(std::move(terms)) {
    if (n_sites_ < 1) throw std::invalid_argument("Hamiltonian needs at least one site");
    if (terms_.empty()) throw std::invalid_argument("Hamiltonian needs at least one term");
    for (const auto& t : terms_) {
      if (t.string.size() != n_sites_)
        throw std::invalid_argument("Hamiltonian term length does not match n_sites");
      if (t.coeff.imag() != 0.0)
        throw std::invalid_argument("Hamiltonian coefficients must be real");
      if (!std::isfinite(t.coeff.real()))
        throw std::invalid_argument("Hamiltonian coefficients must be finite");
    }
  }

  std::size_t n_sites() const { return n_sites_; }
  std::size_t n_terms() const { return terms_.size(); }
  const PauliTerm& term(std::size_t i) const { return terms_.at(i); }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  /** Sum of |coeff_i|; bounds the spectral norm from above. */
  double coefficient_one_norm() const {
    double total = 0.0;
    for (const auto& t : terms_) total += std::abs(t.coeff.real());
    return total;
  }

 private:
  std::size_t n_sites_;
  std::vector<PauliTerm> terms_;
};

/** The single-term commutator of one non-commuting Hamiltonian term pair. */
struct PairCommutator {
  std::size_t first;   // term index, first < second
  std::size_t second;  // term index
  PauliTerm term;      // [H_first, H_second], never zero

  double magnitude() const { return std::abs(term.coeff); }
};

/** All ordered pairs (i < j) of Hamiltonian terms that fail to commute. */
inline std::vector<PairCommutator> noncommuting_pairs(const Hamiltonian& h) {
  std::vector<PairCommutator> pairs;
  const std::size_t k = h.n_terms();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      PauliSum c = commutator(h.term(i), h.term(j));
      if (!c.empty()) pairs.push_back({i, j, c.terms().front()});
    }
  }
  return pairs;
}

struct CommutatorSum {
  PauliSum sum;
  std::size_t noncommuting_pair_count = 0;
};

/**
 * First-order commutator sum over ordered term pairs,
 * sum_{i<j} [H_i, H_j], together with the non-commuting pair count.
 *
 * The sum over i != j vanishes identically by antisymmetry, so the ordered
 * form is the one that carries information; it reproduces the standard
 * pair counting for nearest-neighbour chains.
 */
inline CommutatorSum first_order_commutator_sum(const Hamiltonian& h) {
  auto pairs = noncommuting_pairs(h);
  std::vector<PauliTerm> terms;
  terms.reserve(pairs.size());
  for (auto& p : pairs) terms.push_back(std::move(p.term));
  return {PauliSum(std::move(terms)), pairs.size()};
}

/**
 * Right-nested commutator sum of depth k+1,
 * sum [H_{i_1}, [H_{i_2}, ... [H_{i_k}, H_{i_{k+1}}] ...]].
 *
 * The innermost pair runs over i_k < i_{k+1}; outer indices are
 * unrestricted. Fully unrestricted index tuples would cancel to zero at
 * every depth (the sums collapse to [H, [H, ... [H, H]]]), so the ordered
 * innermost pair plays the same role here as it does in
 * first_order_commutator_sum, to which the k = 1 case reduces.
 *
 * The depth k+1 must not exceed `tuple_depth_limit`.
 */
inline PauliSum nested_commutator_sum(const Hamiltonian& h, int k, int tuple_depth_limit = 4) {
  if (k < 1) throw std::invalid_argument("nested commutator order k must be >= 1");
  if (k + 1 > tuple_depth_limit)
    throw std::length_error("nested commutator depth " + std::to_string(k + 1) +
                            " exceeds the tuple depth limit " + std::to_string(tuple_depth_limit));
  PauliSum sum = first_order_commutator_sum(h).sum;
  for (int level = 1; level < k; ++level) {
    PauliSum next;
    for (const auto& t : h.terms()) next += commutator(t, sum);
    sum = std::move(next);
  }
  return sum;
}

}  // namespace trotkit
