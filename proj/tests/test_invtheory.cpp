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

#include "semiharm/invtheory.hpp"

using namespace semiharm;

namespace {

Polynomial vandermonde3() {
  auto x1 = Polynomial::variable(PolySide::coordinates, 3, 0);
  auto x2 = Polynomial::variable(PolySide::coordinates, 3, 1);
  auto x3 = Polynomial::variable(PolySide::coordinates, 3, 2);
  return (x1 - x2) * (x1 - x3) * (x2 - x3);
}

GModuleRep trivial_module(const ReflectionGroup& G) {
  std::vector<Matrix> gens(G.generators().size(), Matrix::identity(1));
  return module_from_generator_matrices(G, gens);
}

}  // namespace

TEST_CASE("degrees of the standard families") {
  CHECK(group_degrees(builtin_group("symmetric:3")) == std::vector<unsigned>{1, 2, 3});
  CHECK(group_degrees(builtin_group("symmetric:4")) == std::vector<unsigned>{1, 2, 3, 4});
  CHECK(group_degrees(builtin_group("hyperoctahedral:2")) == std::vector<unsigned>{2, 4});
  CHECK(group_degrees(builtin_group("hyperoctahedral:3")) == std::vector<unsigned>{2, 4, 6});
  for (unsigned m = 3; m <= 6; ++m)
    CHECK(group_degrees(builtin_group("dihedral:" + std::to_string(m))) ==
          std::vector<unsigned>{2, m});
  CHECK(group_degrees(builtin_group("gmpn:3,1,2")) == std::vector<unsigned>{3, 6});
}

TEST_CASE("basic invariants are invariant, monic, of the right degrees") {
  for (const char* spec : {"symmetric:3", "hyperoctahedral:2", "dihedral:3"}) {
    auto G = builtin_group(spec);
    for (auto side : {PolySide::coordinates, PolySide::duals}) {
      auto inv = basic_invariants(G, side);
      REQUIRE(inv.polys.size() == G.dimension());
      for (std::size_t i = 0; i < inv.polys.size(); ++i) {
        const auto& f = inv.polys[i];
        CHECK(f.is_homogeneous());
        CHECK(f.degree() == inv.degrees[i]);
        CHECK(f.leading_coefficient().is_one());
        for (std::size_t g = 0; g < G.order(); ++g) CHECK(group_act(G, g, f) == f);
      }
      CHECK_FALSE(inv.jacobian_certificate.is_zero());
    }
  }
}

TEST_CASE("exponents are degrees minus one for M = V") {
  for (const char* spec : {"symmetric:3", "symmetric:4", "hyperoctahedral:2", "dihedral:4",
                           "cyclic:5", "gmpn:3,1,2"}) {
    auto G = builtin_group(spec);
    GModuleRep defining(G.dimension(), G.elements());
    auto degs = group_degrees(G);
    auto exps = module_exponents(G, defining, PolySide::coordinates);
    REQUIRE(exps.size() == degs.size());
    for (std::size_t i = 0; i < degs.size(); ++i) CHECK(exps[i] == degs[i] - 1);
  }
}

TEST_CASE("B_3 pulled-back standard module has exponents 2, 4") {
  auto G = builtin_group("hyperoctahedral:3");
  auto M = builtin_module(G, "quotient-standard");
  CHECK(module_exponents(G, M, PolySide::coordinates) == std::vector<unsigned>{2, 4});
}

TEST_CASE("basic derivations for S_3 defining module") {
  auto G = builtin_group("symmetric:3");
  GModuleRep defining(3, G.elements());
  auto ds = basic_derivations(G, defining, PolySide::coordinates);
  CHECK(ds.exponents == std::vector<unsigned>{0, 1, 2});
  for (const auto& w : ds.omegas) {
    unsigned a, b;
    REQUIRE(w.is_homogeneous(&a, &b));
    CHECK(b == 1);
    for (std::size_t g = 0; g < G.order(); ++g) CHECK(group_act(G, g, w, &defining) == w);
  }
  // d f_i are basic derivations: exterior derivative of f_2 lands in the
  // exponent-1 slot, proportional to omega_2
  auto inv = basic_invariants(G, PolySide::coordinates);
  Polynomial f2 = inv.polys[1];
  DifferentialForm df2(ds.space);
  for (std::size_t j = 0; j < 3; ++j) {
    Polynomial pd = partial_derivative(f2, j);
    df2 += wedge_mul(DifferentialForm::from_polynomial(ds.space, pd),
                     DifferentialForm::generator(ds.space, j + 1));
  }
  const auto& w2 = ds.omegas[1];
  // proportional: df2 = c * w2 for some scalar c
  bool prop = false;
  for (const auto& [k, c] : w2.terms()) {
    Scalar ratio = df2.coefficient(k) / c;
    prop = (df2 == w2.scaled(ratio));
    break;
  }
  CHECK(prop);
}

TEST_CASE("Jacobians of S_3: both J_V and J_V* are the Vandermonde") {
  auto G = builtin_group("symmetric:3");
  GModuleRep defining(3, G.elements());
  auto jv = jacobian(basic_derivations(G, defining, PolySide::coordinates));
  CHECK(jv == vandermonde3().monic());
  auto jvstar =
      jacobian(basic_derivations(G, defining.contragredient(G), PolySide::coordinates));
  CHECK(jvstar == vandermonde3().monic());
}

TEST_CASE("one-dimensional module: J_M equals the Vandermondian of its character") {
  auto G = builtin_group("symmetric:3");
  auto det = builtin_module(G, "det");
  auto jm = jacobian(basic_derivations(G, det, PolySide::coordinates));
  auto delta = vandermondian(G, LinearCharacter::det_v(G), PolySide::coordinates);
  CHECK(jm == delta);
}

TEST_CASE("Vandermondians") {
  auto s3 = builtin_group("symmetric:3");
  CHECK(vandermondian(s3, LinearCharacter::det_v(s3), PolySide::coordinates) ==
        vandermonde3().monic());
  CHECK(vandermondian(s3, LinearCharacter::trivial(s3), PolySide::coordinates) ==
        Polynomial::constant(PolySide::coordinates, 3, Scalar(1)));

  auto b2 = builtin_group("hyperoctahedral:2");
  auto delta = vandermondian(b2, LinearCharacter::det_v(b2), PolySide::coordinates);
  auto x1 = Polynomial::variable(PolySide::coordinates, 2, 0);
  auto x2 = Polynomial::variable(PolySide::coordinates, 2, 1);
  CHECK(delta == (x1 * x2 * (x1 * x1 - x2 * x2)).monic());
  CHECK(delta.degree() == 4);
}

TEST_CASE("chi-semi-invariance of the Vandermondian") {
  for (const char* spec : {"symmetric:3", "hyperoctahedral:2", "dihedral:5"}) {
    auto G = builtin_group(spec);
    auto chi = LinearCharacter::det_v(G);
    auto delta = vandermondian(G, chi, PolySide::coordinates);
    for (std::size_t g = 0; g < G.order(); ++g)
      CHECK(group_act(G, g, delta) == delta.scaled(chi.value(g)));
  }
}

TEST_CASE("Gutkin product examples") {
  auto s3 = builtin_group("symmetric:3");
  GModuleRep defining(3, s3.elements());
  CHECK(gutkin_product(s3, defining) == vandermonde3().monic());
  CHECK(gutkin_multiplicities(s3, defining) == std::vector<unsigned>{1, 1, 1});

  auto c3 = builtin_group("cyclic:3");
  GModuleRep c3def(1, c3.elements());
  auto g = gutkin_product(c3, c3def);
  auto x = Polynomial::variable(PolySide::coordinates, 1, 0);
  CHECK(g == x * x);

  CHECK(gutkin_product(s3, trivial_module(s3)) ==
        Polynomial::constant(PolySide::coordinates, 3, Scalar(1)));
}

TEST_CASE("jacobian matches gutkin product for several modules") {
  auto G = builtin_group("symmetric:3");
  for (const char* mod : {"defining", "dual", "standard", "det"}) {
    auto M = builtin_module(G, mod);
    auto ds = basic_derivations(G, M, PolySide::coordinates);
    CHECK(proportional(jacobian(ds), gutkin_product(G, M)));
  }
}

TEST_CASE("Gutkin corollary report for S_3 standard") {
  auto G = builtin_group("symmetric:3");
  auto rep = check_gutkin_corollary(G, builtin_module(G, "standard"));
  CHECK(rep.item_a);
  CHECK(rep.item_b);
  CHECK(rep.mh_condition);
  CHECK(rep.jm_matches_dm);
  CHECK(rep.item_c);
  CHECK(rep.d_hypothesis);
  CHECK(rep.item_d);
  CHECK(rep.item_f);
  CHECK(rep.all_applicable());
}

TEST_CASE("Gutkin corollary detects J_M != Delta_M for sign + sign on S_3") {
  auto G = builtin_group("symmetric:3");
  // two copies of the sign character: m_H = 2 >= |G_H| = 2 at each hyperplane
  Matrix neg2 = Matrix::identity(2).scaled(Scalar(-1));
  auto M = module_from_generator_matrices(G, {neg2, neg2});
  auto rep = check_gutkin_corollary(G, M);
  CHECK_FALSE(rep.mh_condition);
  CHECK_FALSE(rep.jm_matches_dm);
  CHECK(rep.item_c);  // the equivalence still holds
  CHECK_FALSE(rep.d_hypothesis);
}

TEST_CASE("Delta_M, J_{det M} and Delta_{det M} agree up to scalar") {
  auto G = builtin_group("symmetric:3");
  auto M = builtin_module(G, "standard");
  auto det_m = LinearCharacter::determinant(G, M);
  Polynomial delta_m = vandermondian(G, det_m, PolySide::coordinates);
  // the one-dimensional module with character det_M
  std::vector<Matrix> images;
  for (const auto& gen : G.generators()) {
    Matrix one(1, 1);
    one.at(0, 0) = det_m.value(G.index_of(gen));
    images.push_back(std::move(one));
  }
  auto det_module = module_from_generator_matrices(G, images);
  Polynomial j_detm = jacobian(basic_derivations(G, det_module, PolySide::coordinates));
  Polynomial delta_detm =
      vandermondian(G, LinearCharacter::determinant(G, det_module), PolySide::coordinates);
  CHECK(proportional(delta_m, j_detm));
  CHECK(proportional(delta_m, delta_detm));
}

TEST_CASE("Delta_M always divides J_M") {
  for (const char* spec : {"symmetric:3", "hyperoctahedral:2"}) {
    auto G = builtin_group(spec);
    for (const char* mod : {"defining", "dual", "det"}) {
      auto M = builtin_module(G, mod);
      Polynomial j_m = jacobian(basic_derivations(G, M, PolySide::coordinates));
      Polynomial delta_m =
          vandermondian(G, LinearCharacter::determinant(G, M), PolySide::coordinates);
      CHECK(divide(j_m, delta_m).divisible());
    }
  }
}

TEST_CASE("Steinberg identity") {
  for (const char* spec : {"symmetric:3", "hyperoctahedral:2", "dihedral:4"}) {
    CHECK(steinberg_check(builtin_group(spec), 10));
  }
}

TEST_CASE("module exponents agree between the two polynomial sides") {
  // Hilb((S(V) (x) M)^G; q) = Hilb((S(V*) (x) M*)^G; q)
  {
    auto G = builtin_group("symmetric:3");
    auto M = builtin_module(G, "standard");
    CHECK(module_exponents(G, M, PolySide::coordinates) ==
          module_exponents(G, M, PolySide::duals));
  }
  {
    auto G = builtin_group("gmpn:3,1,2");
    GModuleRep defining(2, G.elements());
    CHECK(module_exponents(G, defining, PolySide::coordinates) ==
          module_exponents(G, defining, PolySide::duals));
    auto dual = defining.contragredient(G);
    CHECK(module_exponents(G, dual, PolySide::coordinates) ==
          module_exponents(G, dual, PolySide::duals));
  }
}

TEST_CASE("duals-side invariants and derivations mirror the coordinates side") {
  auto G = builtin_group("hyperoctahedral:2");
  auto inv_x = basic_invariants(G, PolySide::coordinates);
  auto inv_y = basic_invariants(G, PolySide::duals);
  CHECK(inv_x.degrees == inv_y.degrees);
  GModuleRep defining(2, G.elements());
  auto ds = basic_derivations(G, defining, PolySide::duals);
  CHECK(ds.space.ext_side == ExtSide::module);
  CHECK(ds.exponents == std::vector<unsigned>{1, 3});
  for (const auto& w : ds.omegas)
    for (std::size_t g = 0; g < G.order(); ++g) CHECK(group_act(G, g, w, &defining) == w);
}
