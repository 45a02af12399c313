/*
   Copyright 2026 The semiharm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "semiharm/group.hpp"

using namespace semiharm;

TEST_CASE("S_3 closure: order, reflections, hyperplanes") {
  auto G = builtin_group("symmetric:3");
  CHECK(G.order() == 6);
  CHECK(G.reflections().size() == 3);
  CHECK(G.hyperplanes().size() == 3);
  for (const auto& h : G.hyperplanes()) {
    CHECK(h.stabilizer_order == 2);
    CHECK(h.alpha.leading_coefficient().is_one());
    CHECK(h.alpha.degree() == 1);
  }
  CHECK(verify_group_closure(G));
}

TEST_CASE("B_2 closure: order 8 and the four hyperplanes") {
  auto G = builtin_group("hyperoctahedral:2");
  CHECK(G.order() == 8);
  REQUIRE(G.hyperplanes().size() == 4);
  std::set<std::string> alphas;
  for (const auto& h : G.hyperplanes()) alphas.insert(h.alpha.to_string());
  CHECK(alphas == std::set<std::string>{"x1", "x2", "x1 + -1*x2", "x1 + x2"});
}

TEST_CASE("cyclic:3 has one hyperplane with |G_H| = 3") {
  auto G = builtin_group("cyclic:3");
  CHECK(G.order() == 3);
  CHECK(G.reflections().size() == 2);
  REQUIRE(G.hyperplanes().size() == 1);
  CHECK(G.hyperplanes()[0].stabilizer_order == 3);
}

TEST_CASE("builtin group orders") {
  CHECK(builtin_group("symmetric:4").order() == 24);
  CHECK(builtin_group("hyperoctahedral:3").order() == 48);
  CHECK(builtin_group("demihyperoctahedral:3").order() == 24);
  CHECK(builtin_group("dihedral:5").order() == 10);
  CHECK(builtin_group("cyclic:6").order() == 6);
  CHECK(builtin_group("gmpn:3,1,2").order() == 18);
  CHECK(builtin_group("gmpn:3,3,2").order() == 6);
  CHECK(builtin_group("gmpn:4,2,2").order() == 16);
  CHECK_THROWS_AS(builtin_group("nowhere:1"), UnknownSpec);
}

TEST_CASE("order cap is enforced") {
  CHECK_THROWS_AS(builtin_group("symmetric:4", 10), OrderCapExceeded);
}

TEST_CASE("closure of a larger group verifies by sampling") {
  auto G = builtin_group("hyperoctahedral:4");
  CHECK(G.order() == 384);
  CHECK(verify_group_closure(G, 64, 1));
}

TEST_CASE("reflection count equals sum of (|G_H| - 1)") {
  for (const char* spec :
       {"symmetric:4", "hyperoctahedral:2", "dihedral:4", "cyclic:5", "gmpn:3,1,2"}) {
    auto G = builtin_group(spec);
    std::size_t sum = 0;
    for (const auto& h : G.hyperplanes()) sum += h.stabilizer_order - 1;
    CHECK(sum == G.reflections().size());
  }
}

TEST_CASE("non-reflection group is rejected") {
  // rotation by 90 degrees in the plane fixes only the origin
  Matrix rot(2, 2);
  rot.at(0, 1) = Scalar(-1);
  rot.at(1, 0) = Scalar(1);
  CHECK_THROWS_AS(ReflectionGroup::close({rot}), NotGeneratedByReflections);
}

TEST_CASE("defining module and standard module on S_3") {
  auto G = builtin_group("symmetric:3");
  auto def = builtin_module(G, "defining");
  for (std::size_t i = 0; i < G.order(); ++i) CHECK(def.matrix(i) == G.element(i));

  auto std_rep = builtin_module(G, "standard");
  CHECK(std_rep.dim() == 2);
  // character values by class: identity 2, transpositions 0, 3-cycles -1
  std::multiset<std::string> values;
  for (std::size_t i = 0; i < G.order(); ++i) values.insert(std_rep.trace(i).to_string());
  CHECK(values == std::multiset<std::string>{"2", "0", "0", "0", "-1", "-1"});
  // multiplicativity
  for (std::size_t i = 0; i < G.order(); ++i)
    for (std::size_t j = 0; j < G.order(); ++j)
      CHECK(std_rep.matrix(i) * std_rep.matrix(j) == std_rep.matrix(G.product(i, j)));
}

TEST_CASE("det module on B_2") {
  auto G = builtin_group("hyperoctahedral:2");
  auto det = builtin_module(G, "det");
  Matrix flip = Matrix::identity(2);
  flip.at(0, 0) = Scalar(-1);
  CHECK(det.matrix(G.index_of(flip)).at(0, 0) == Scalar(-1));
  for (std::size_t i = 0; i < G.order(); ++i) {
    Scalar v = det.matrix(i).at(0, 0);
    CHECK((v == Scalar(1) || v == Scalar(-1)));
  }
}

TEST_CASE("quotient-standard on B_3 forgets signs") {
  auto G = builtin_group("hyperoctahedral:3");
  auto rep = builtin_module(G, "quotient-standard");
  CHECK(rep.dim() == 2);
  Matrix flip = Matrix::identity(3);
  flip.at(0, 0) = Scalar(-1);
  CHECK(rep.matrix(G.index_of(flip)).is_identity());
}

TEST_CASE("exterior power module") {
  auto G = builtin_group("symmetric:3");
  auto e2 = builtin_module(G, "exterior:2");
  CHECK(e2.dim() == 3);
  auto det3 = builtin_module(G, "exterior:3");
  CHECK(det3.dim() == 1);
  auto det = builtin_module(G, "det");
  for (std::size_t i = 0; i < G.order(); ++i) CHECK(det3.matrix(i) == det.matrix(i));
}

TEST_CASE("reynolds on polynomials") {
  auto G = builtin_group("symmetric:3");
  auto x1 = Polynomial::variable(PolySide::coordinates, 3, 0);
  auto x2 = Polynomial::variable(PolySide::coordinates, 3, 1);
  auto x3 = Polynomial::variable(PolySide::coordinates, 3, 2);
  auto triv = LinearCharacter::trivial(G);
  auto sign = LinearCharacter::det_v(G);

  Polynomial avg = reynolds(x1, G, triv);
  CHECK(avg == (x1 + x2 + x3).scaled(Scalar(1, 3)));
  CHECK(reynolds(x1, G, sign).is_zero());
  // idempotence on a few inputs
  Polynomial p = x1 * x1 * x2 + x3;
  CHECK(reynolds(reynolds(p, G, triv), G, triv) == reynolds(p, G, triv));
  // chi-twisted equivariance: g . R_chi(p) = chi(g) R_chi(p)
  Polynomial vand = reynolds(x1 * x1 * x2, G, sign);
  for (std::size_t i = 0; i < G.order(); ++i)
    CHECK(group_act(G, i, vand) == vand.scaled(sign.value(i)));
}

TEST_CASE("isotypic dimensions for S_3") {
  auto G = builtin_group("symmetric:3");
  FormSpace sp{PolySide::coordinates, ExtSide::dual_module, 3, 0};
  auto triv = LinearCharacter::trivial(G);
  auto sign = LinearCharacter::det_v(G);
  CHECK(isotypic_dimension(G, nullptr, sp, triv, 0, 0) == 1);
  CHECK(isotypic_dimension(G, nullptr, sp, triv, 2, 0) == 2);
  CHECK(isotypic_dimension(G, nullptr, sp, sign, 3, 0) == 1);
  CHECK(isotypic_dimension(G, nullptr, sp, sign, 1, 0) == 0);
}

TEST_CASE("molien series of S_3 invariants matches 1/((1-q)(1-q^2)(1-q^3))") {
  auto G = builtin_group("symmetric:3");
  auto triv = LinearCharacter::trivial(G);
  auto series = molien_series(G, PolySide::coordinates, nullptr, ExtSide::dual_module, triv, 8);
  auto expected = BigradedSeries::product_formula(0, {}, {1, 2, 3}, 8);
  CHECK(series.agrees_with(expected));
}

TEST_CASE("molien of the trivial group is the full polynomial series") {
  auto G = builtin_group("symmetric:1");
  auto triv = LinearCharacter::trivial(G);
  auto series = molien_series(G, PolySide::coordinates, nullptr, ExtSide::dual_module, triv, 6);
  for (unsigned a = 0; a <= 6; ++a) CHECK(series.at(a, 0) == 1);
}

TEST_CASE("molien coefficients equal the brute-force projector ranks") {
  for (const char* spec : {"symmetric:3", "hyperoctahedral:2", "dihedral:3", "cyclic:4"}) {
    auto G = builtin_group(spec);
    auto def = builtin_module(G, "defining");
    for (auto chi : {LinearCharacter::trivial(G), LinearCharacter::det_v(G)}) {
      FormSpace sp{PolySide::coordinates, ExtSide::dual_module, G.dimension(), def.dim()};
      auto series =
          molien_series(G, PolySide::coordinates, &def, ExtSide::dual_module, chi, 5);
      for (unsigned a = 0; a <= 5; ++a)
        for (unsigned b = 0; b <= def.dim(); ++b)
          CHECK(series.at(a, b) == isotypic_dimension(G, &def, sp, chi, a, b));
    }
  }
}

TEST_CASE("group action on forms is an algebra automorphism") {
  auto G = builtin_group("symmetric:3");
  auto def = builtin_module(G, "defining");
  FormSpace sp{PolySide::coordinates, ExtSide::dual_module, 3, 3};
  Monomial m0;
  m0.exp = {1, 0, 0};
  auto a = DifferentialForm::term(sp, m0, Wedge{1}, Scalar(1));
  Monomial m1;
  m1.exp = {0, 2, 0};
  auto b = DifferentialForm::term(sp, m1, Wedge{2, 3}, Scalar(1, 2));
  for (std::size_t i = 0; i < G.order(); ++i) {
    CHECK(group_act(G, i, wedge_mul(a, b), &def) ==
          wedge_mul(group_act(G, i, a, &def), group_act(G, i, b, &def)));
  }
  // identity acts as identity
  CHECK(group_act(G, 0, a, &def) == a);
}

TEST_CASE("the action is multiplicative on all four algebras") {
  auto G = builtin_group("gmpn:3,1,2");
  auto def = builtin_module(G, "defining");
  std::size_t i = 3 % G.order(), j = 5 % G.order();
  std::size_t ij = G.product(i, j);
  for (auto poly : {PolySide::coordinates, PolySide::duals})
    for (auto ext : {ExtSide::module, ExtSide::dual_module}) {
      FormSpace sp{poly, ext, 2, 2};
      Monomial m;
      m.exp = {2, 1};
      auto omega = DifferentialForm::term(sp, m, Wedge{1}, Scalar(1, 2)) +
                   DifferentialForm::term(sp, m, Wedge{1, 2}, Scalar::zeta(3));
      CHECK(group_act(G, i, group_act(G, j, omega, &def), &def) ==
            group_act(G, ij, omega, &def));
    }
}

TEST_CASE("S_2 swap sends x1 mu1 to x2 mu2 when M = V") {
  auto G = builtin_group("symmetric:2");
  auto def = builtin_module(G, "defining");
  FormSpace sp{PolySide::coordinates, ExtSide::dual_module, 2, 2};
  Monomial m;
  m.exp = {1, 0};
  auto f = DifferentialForm::term(sp, m, Wedge{1}, Scalar(1));
  Matrix swap(2, 2);
  swap.at(0, 1) = Scalar(1);
  swap.at(1, 0) = Scalar(1);
  auto g = group_act(G, G.index_of(swap), f, &def);
  FormKey expect;
  expect.mono.exp = {0, 1};
  expect.wedge = {2};
  CHECK(g.coefficient(expect) == Scalar(1));
  CHECK(g.term_count() == 1);
}
