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

#include <random>

#include "semiharm/polyring.hpp"

using namespace semiharm;

namespace {

Polynomial var(std::size_t n, std::size_t i) {
  return Polynomial::variable(PolySide::coordinates, n, i);
}

Polynomial random_poly(std::mt19937_64& rng, std::size_t n, unsigned max_deg, unsigned terms) {
  Polynomial p(PolySide::coordinates, n);
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m;
    m.exp.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.exp[i] = rng() % (max_deg + 1);
    p.add_term(m, Scalar(static_cast<long>(rng() % 9) - 4));
  }
  return p;
}

}  // namespace

TEST_CASE("product of sum and difference") {
  auto x1 = var(2, 0), x2 = var(2, 1);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
}

TEST_CASE("multiplication by zero prunes all terms") {
  auto x1 = var(2, 0);
  Polynomial zero = Polynomial::zero(PolySide::coordinates, 2);
  CHECK((x1 * zero).is_zero());
  CHECK(x1.scaled(Scalar(0)).is_zero());
}

TEST_CASE("trinomial square") {
  auto x1 = var(3, 0), x2 = var(3, 1), x3 = var(3, 2);
  Polynomial s = x1 + x2 + x3;
  Polynomial sq = s * s;
  CHECK(sq.term_count() == 6);
  Monomial m;
  m.exp = {1, 1, 0};
  CHECK(sq.coefficient(m) == Scalar(2));
  m.exp = {2, 0, 0};
  CHECK(sq.coefficient(m) == Scalar(1));
  CHECK(sq.is_homogeneous());
  CHECK(sq.degree() == 2);
}

TEST_CASE("graded monomial enumeration") {
  auto b22 = graded_monomials(2, 2);
  REQUIRE(b22.size() == 3);
  CHECK(b22[0].exp == std::vector<std::uint32_t>{2, 0});
  CHECK(b22[1].exp == std::vector<std::uint32_t>{1, 1});
  CHECK(b22[2].exp == std::vector<std::uint32_t>{0, 2});
  CHECK(graded_monomials(3, 0).size() == 1);
  CHECK(graded_monomials(3, 2).size() == 6);
  // leading-first order
  for (std::size_t i = 0; i + 1 < b22.size(); ++i) CHECK(grlex_less(b22[i + 1], b22[i]));
}

TEST_CASE("single divisor division") {
  auto x1 = var(2, 0), x2 = var(2, 1);
  auto res = divide(x1 * x1 - x2 * x2, x1 - x2);
  CHECK(res.divisible());
  CHECK(res.quotient == x1 + x2);

  auto res2 = divide(x2, x1);
  CHECK_FALSE(res2.divisible());
  CHECK(res2.remainder == x2);
}

TEST_CASE("Vandermonde division for three variables") {
  auto x1 = var(3, 0), x2 = var(3, 1), x3 = var(3, 2);
  Polynomial vand = (x1 - x2) * (x1 - x3) * (x2 - x3);
  Polynomial sum = x1 + x2 + x3;
  auto res = divide(vand * sum, vand);
  CHECK(res.divisible());
  CHECK(res.quotient == sum);
}

TEST_CASE("division recovers random cofactors") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 25; ++t) {
    Polynomial p = random_poly(rng, 3, 3, 4);
    Polynomial g = random_poly(rng, 3, 2, 3);
    if (g.is_zero()) continue;
    auto res = divide(p * g, g);
    CHECK(res.divisible());
    CHECK(res.quotient == p);
    CHECK(res.quotient * g == p * g);
  }
}

TEST_CASE("monic normalization uses the graded-lex leading term") {
  auto x1 = var(2, 0), x2 = var(2, 1);
  Polynomial p = (x1 * x2).scaled(Scalar(3)) + x2 * x2 + x1;
  Monomial lead;
  lead.exp = {1, 1};
  CHECK(p.leading_monomial() == lead);
  CHECK(p.monic().leading_coefficient().is_one());
}

TEST_CASE("linear substitution") {
  // x1 -> x1 + x2, x2 -> x2
  Matrix s(2, 2);
  s.at(0, 0) = Scalar(1);
  s.at(0, 1) = Scalar(1);
  s.at(1, 1) = Scalar(1);
  SubstitutionCache cache(s, PolySide::coordinates);
  auto x1 = var(2, 0), x2 = var(2, 1);
  CHECK(cache.apply(x1 * x1) == (x1 + x2) * (x1 + x2));
  CHECK(cache.apply(x2) == x2);
}
