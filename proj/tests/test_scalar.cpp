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

#include "semiharm/scalar.hpp"

using namespace semiharm;

namespace {

Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& field) {
  Scalar acc = Scalar::zero(field);
  unsigned phi = Scalar::phi(field.conductor);
  for (unsigned k = 0; k < phi; ++k) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 4);
    acc += Scalar(num, den) * Scalar::zeta(field.conductor, k);
  }
  return acc;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK(Scalar(3) * Scalar(0) == Scalar(0));
  CHECK(Scalar(7, 3) / Scalar(7, 3) == Scalar(1));
  CHECK((-Scalar(5, 2)).to_string() == "-5/2");
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST_CASE("zeta_4 squares to -1") {
  Scalar z = Scalar::zeta(4);
  CHECK(z * z == Scalar(-1));
  CHECK(z.conjugate() == -z);
}

TEST_CASE("Phi_5 relation: 1 + z + z^2 + z^3 + z^4 = 0") {
  Scalar sum = Scalar::zero(FieldSpec{5});
  for (long k = 0; k < 5; ++k) sum += Scalar::zeta(5, k);
  CHECK(sum.is_zero());
}

TEST_CASE("zeta_m is a primitive m-th root of unity for every supported conductor") {
  for (unsigned m = 1; m <= 60; ++m) {
    Scalar z = Scalar::zeta(m);
    CHECK(z.pow(m).is_one());
    CHECK(z.root_of_unity_order(m) == m);
    CHECK(z * z.conjugate() == Scalar(1));
  }
}

TEST_CASE("conductor cap is enforced") {
  CHECK_THROWS_AS(Scalar::zeta(61), UnsupportedConductor);
}

TEST_CASE("conjugation is the identity on rationals and an involution") {
  CHECK(Scalar(3, 7).conjugate() == Scalar(3, 7));
  std::mt19937_64 rng(7);
  for (unsigned m : {4u, 5u, 7u, 12u}) {
    for (int t = 0; t < 10; ++t) {
      Scalar s = random_scalar(rng, FieldSpec{m});
      CHECK(s.conjugate().conjugate() == s);
      // conjugation is a ring morphism
      Scalar u = random_scalar(rng, FieldSpec{m});
      CHECK((s * u).conjugate() == s.conjugate() * u.conjugate());
      CHECK((s + u).conjugate() == s.conjugate() + u.conjugate());
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (unsigned m : {1u, 3u, 5u, 8u}) {
    FieldSpec f{m};
    for (int t = 0; t < 12; ++t) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Scalar::one(f));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("mixing distinct cyclotomic fields is rejected") {
  CHECK_THROWS_AS(Scalar::zeta(3) + Scalar::zeta(4), FieldMismatch);
  CHECK(Scalar::zeta(5) * Scalar(1, 2) == Scalar(1, 2) * Scalar::zeta(5));
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(23);
  for (unsigned m : {1u, 4u, 5u, 12u}) {
    for (int t = 0; t < 10; ++t) {
      Scalar s = random_scalar(rng, FieldSpec{m});
      CHECK(Scalar::parse(s.to_string()) == s);
    }
  }
  CHECK(Scalar::parse("5/6") == Scalar(5, 6));
  CHECK(Scalar::parse("-2") == Scalar(-2));
  CHECK(Scalar::parse("0 + 1*z@4") == Scalar::zeta(4));
  CHECK(Scalar::parse("1/2 + -1/3*z^2@5") ==
        Scalar(1, 2) + Scalar(-1, 3) * Scalar::zeta(5, 2));
}
