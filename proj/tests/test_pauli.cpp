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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dense_reference.hpp"
#include "trotkit/models.hpp"
#include "trotkit/pauli.hpp"

using namespace trotkit;
using Catch::Approx;

namespace {

PauliString random_string(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> axis(0, 3);
  std::vector<Pauli> axes(n);
  for (auto& a : axes) a = static_cast<Pauli>(axis(rng));
  return PauliString(std::move(axes));
}

PauliTerm random_term(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  return {Complex(coeff(rng), coeff(rng)), random_string(rng, n)};
}

}  // namespace

TEST_CASE("single-site products match the Pauli algebra") {
  auto x = PauliString::parse("X");
  auto y = PauliString::parse("Y");

  auto xx = multiply(x, x);
  CHECK(xx.phase == Complex(1.0, 0.0));
  CHECK(xx.string.is_identity());

  auto xy = multiply(x, y);
  CHECK(xy.phase == Complex(0.0, 1.0));
  CHECK(xy.string.str() == "Z");

  auto zx = multiply(PauliString::parse("ZI"), PauliString::parse("IX"));
  CHECK(zx.phase == Complex(1.0, 0.0));
  CHECK(zx.string.str() == "ZX");

  CHECK_THROWS_AS(multiply(PauliString::parse("XX"), x), std::invalid_argument);
}

TEST_CASE("products close over phases and strings against dense matrices") {
  // all 16 single-site pairs
  const std::string axes = "IXYZ";
  for (char a : axes) {
    for (char b : axes) {
      auto prod = multiply(PauliString::parse(std::string(1, a)), PauliString::parse(std::string(1, b)));
      const bool unit_phase = std::abs(std::abs(prod.phase) - 1.0) < 1e-15;
      CHECK(unit_phase);
      auto expected = dense_ref::mul(dense_ref::pauli_mat(a), dense_ref::pauli_mat(b));
      auto got = dense_ref::scale(prod.phase, dense_ref::string_mat(prod.string.str()));
      CHECK(dense_ref::max_abs_diff(expected, got) < 1e-12);
    }
  }

  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> len(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = len(rng);
    auto a = random_string(rng, n);
    auto b = random_string(rng, n);
    auto prod = multiply(a, b);
    auto expected = dense_ref::mul(dense_ref::string_mat(a.str()), dense_ref::string_mat(b.str()));
    auto got = dense_ref::scale(prod.phase, dense_ref::string_mat(prod.string.str()));
    REQUIRE(dense_ref::max_abs_diff(expected, got) < 1e-12);
  }
}

TEST_CASE("pauli sum canonicalization merges, sorts and drops zeros") {
  auto zz = PauliString::parse("ZZ");
  auto xi = PauliString::parse("XI");
  PauliSum s({{1.0, zz}, {2.0, xi}, {0.5, zz}, {Complex(0.0, 0.0), PauliString::parse("YY")}});
  REQUIRE(s.size() == 2);
  CHECK(s.terms()[0].string.str() == "XI");  // I < X < Y < Z, lexicographic
  CHECK(s.terms()[1].string.str() == "ZZ");
  CHECK(s.terms()[1].coeff == Complex(1.5, 0.0));

  // idempotence
  PauliSum again(std::vector<PauliTerm>(s.terms()));
  CHECK(again == s);

  // exact cancellation leaves nothing behind
  PauliSum cancel({{1.0, zz}, {-1.0, zz}});
  CHECK(cancel.empty());
  CHECK(one_norm(cancel) == 0.0);
}

TEST_CASE("commutator of weighted strings") {
  const double j = 1.5, g = 0.5;
  auto x1 = PauliTerm{-g, PauliString::parse("XI")};

  SECTION("self-commutator vanishes") {
    CHECK(commutator(x1, x1).empty());
  }

  SECTION("[Z1Z2, X1] gives 2i J Gamma Y1Z2") {
    auto bond = PauliTerm{-j, PauliString::parse("ZZ")};
    auto c = commutator(bond, x1);
    REQUIRE(c.size() == 1);
    CHECK(c.terms()[0].string.str() == "YZ");
    CHECK(c.terms()[0].coeff.real() == Approx(0.0).margin(1e-15));
    CHECK(c.terms()[0].coeff.imag() == Approx(2.0 * j * g));
  }

  SECTION("[Y1Y2, X2X3] has magnitude 2 J^2, dense checked") {
    auto yy = PauliTerm{-j, PauliString::parse("YYI")};
    auto xx = PauliTerm{-j, PauliString::parse("IXX")};
    auto c = commutator(yy, xx);
    REQUIRE(c.size() == 1);
    CHECK(std::abs(c.terms()[0].coeff) == Approx(2.0 * j * j));
    auto expected = dense_ref::commutator(dense_ref::term_mat(yy), dense_ref::term_mat(xx));
    CHECK(dense_ref::max_abs_diff(expected, dense_ref::sum_mat(c, 3)) < 1e-12);
  }

  SECTION("length mismatch is rejected") {
    CHECK_THROWS_AS(commutator(x1, PauliTerm{1.0, PauliString::parse("X")}),
                    std::invalid_argument);
  }
}

TEST_CASE("commutator antisymmetry is exact") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_term(rng, 3);
    auto b = random_term(rng, 3);
    CHECK(one_norm(commutator(a, b) + commutator(b, a)) == 0.0);
  }
}

TEST_CASE("Jacobi identity holds to rounding") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<std::size_t> len(2, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = len(rng);
    auto a = random_term(rng, n);
    auto b = random_term(rng, n);
    auto c = random_term(rng, n);
    PauliSum total = commutator(a, commutator(b, c));
    total += commutator(b, commutator(c, a));
    total += commutator(c, commutator(a, b));
    CHECK(one_norm(total) <= 1e-12);
  }
}

TEST_CASE("first-order commutator sum of the Ising chain") {
  ModelSpec spec{ModelKind::Tfim, 3, 1.0, 1.0};
  auto h = build_tfim(spec);
  auto result = first_order_commutator_sum(h);
  CHECK(result.noncommuting_pair_count == 4);
  CHECK(one_norm(result.sum) == Approx(8.0));

  // dense oracle agreement, entrywise
  const std::size_t k = h.n_terms();
  auto expected = dense_ref::zeros(8);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      expected = dense_ref::add(
          expected, dense_ref::commutator(dense_ref::term_mat(h.term(i)), dense_ref::term_mat(h.term(j))));
  CHECK(dense_ref::max_abs_diff(expected, dense_ref::sum_mat(result.sum, 3)) < 1e-12);
}

TEST_CASE("first-order pair census of the XY chain") {
  ModelSpec spec{ModelKind::Xy, 4, 1.0, 0.5};
  auto h = build_xy(spec);
  auto pairs = noncommuting_pairs(h);
  int bond_field = 0, bond_bond = 0;
  for (const auto& p : pairs) {
    if (p.magnitude() == Approx(2.0 * 1.0 * 0.5)) ++bond_field;
    if (p.magnitude() == Approx(2.0 * 1.0 * 1.0)) ++bond_bond;
  }
  CHECK(pairs.size() == 10);
  CHECK(bond_field == 6);  // 2(N-1) of magnitude 2 J Gamma
  CHECK(bond_bond == 4);   // 2(N-2) of magnitude 2 J^2
}

TEST_CASE("pairwise commuting Hamiltonians give an empty sum") {
  // single-axis Ising chain: Gamma = 0
  auto h = build_tfim({ModelKind::Tfim, 3, 1.0, 0.0});
  auto result = first_order_commutator_sum(h);
  CHECK(result.noncommuting_pair_count == 0);
  CHECK(result.sum.empty());
}

TEST_CASE("nested commutator sum") {
  ModelSpec spec{ModelKind::Tfim, 2, 1.0, 1.0};
  auto h = build_tfim(spec);

  SECTION("k = 1 delegates to the ordered pair sum") {
    CHECK(nested_commutator_sum(h, 1) == first_order_commutator_sum(h).sum);
  }

  SECTION("k = 2 fixture and dense oracle") {
    auto s = nested_commutator_sum(h, 2);
    CHECK(one_norm(s) == Approx(24.0));

    // Contributions come only from bond-field inner pairs; every inner
    // commutator is of the [Z1Z2, X_i] family.
    for (const auto& p : noncommuting_pairs(h)) {
      CHECK(h.term(p.first).string.str() == "ZZ");
      CHECK(h.term(p.second).string.str().find('X') != std::string::npos);
    }

    // dense: sum_i [H_i, C1] with C1 the ordered pair sum
    auto c1 = dense_ref::sum_mat(first_order_commutator_sum(h).sum, 2);
    auto expected = dense_ref::zeros(4);
    for (const auto& t : h.terms())
      expected = dense_ref::add(expected, dense_ref::commutator(dense_ref::term_mat(t), c1));
    CHECK(dense_ref::max_abs_diff(expected, dense_ref::sum_mat(s, 2)) < 1e-12);
  }

  SECTION("k = 3 fixture") {
    CHECK(one_norm(nested_commutator_sum(h, 3)) == Approx(80.0));
  }

  SECTION("single-term Hamiltonian vanishes at every order") {
    Hamiltonian single(2, {{-1.0, PauliString::parse("ZZ")}});
    for (int k = 1; k <= 3; ++k) CHECK(nested_commutator_sum(single, k).empty());
  }

  SECTION("depth limit is enforced") {
    CHECK_THROWS_AS(nested_commutator_sum(h, 4), std::length_error);
    CHECK_NOTHROW(nested_commutator_sum(h, 4, 5));
    CHECK_THROWS_AS(nested_commutator_sum(h, 0), std::invalid_argument);
  }
}

TEST_CASE("one norm") {
  CHECK(one_norm(PauliSum{}) == 0.0);
  PauliSum s({{Complex(0.0, 2.0), PauliString::parse("YZ")},
              {Complex(0.0, -2.0), PauliString::parse("ZY")}});
  CHECK(one_norm(s) == Approx(4.0));
}

TEST_CASE("hamiltonian validation") {
  CHECK_THROWS_AS(Hamiltonian(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(Hamiltonian(2, {{Complex(0.0, 1.0), PauliString::parse("ZZ")}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Hamiltonian(3, {{1.0, PauliString::parse("ZZ")}}), std::invalid_argument);
}
