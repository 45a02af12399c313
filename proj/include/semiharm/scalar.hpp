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

#ifndef SEMIHARM_SCALAR_HPP
#define SEMIHARM_SCALAR_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "semiharm/errors.hpp"

namespace semiharm {

// Exact field of definition: the rationals (conductor 1) or a cyclotomic
// extension Q(zeta_m). Rationals are the m = 1 case throughout.
struct FieldSpec {
  unsigned conductor = 1;

  bool is_rational() const { return conductor == 1; }
  bool operator==(const FieldSpec&) const = default;
};

// An element of Q or Q(zeta_m), stored on the power basis 1, z, ...,
// z^{phi(m)-1} and kept reduced modulo the m-th cyclotomic polynomial.
// Immutable value semantics; all arithmetic is exact.
class Scalar {
 public:
  Scalar() : conductor_(1), coeffs_(1) {}
  Scalar(long value) : conductor_(1), coeffs_{mpq_class(value)} {}
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : conductor_(1), coeffs_{q} {
    coeffs_[0].canonicalize();
  }

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  // zeta_m^power as an element of Q(zeta_m)
  static Scalar zeta(unsigned m, long power = 1);
  static unsigned phi(unsigned m);

  FieldSpec field() const { return FieldSpec{conductor_}; }
  unsigned conductor() const { return conductor_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in Q (all higher power-basis coordinates 0).
  bool is_rational_value() const;
  mpq_class rational_value() const;  // requires is_rational_value()

  Scalar operator-() const;
  Scalar conjugate() const;  // z -> z^{-1}; identity on Q
  Scalar inverse() const;    // throws DivisionByZero on 0
  Scalar pow(long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  // Multiplicative order if the element is a root of unity, 0 otherwise.
  unsigned root_of_unity_order(unsigned limit) const;

  // Text form: rationals as "a/b" (plain "a" for integers); cyclotomics as
  // "c0 + c1*z + ...@m". Used verbatim in all JSON I/O.
  std::string to_string() const;
  static Scalar parse(const std::string& text);

 private:
  Scalar(unsigned conductor, std::vector<mpq_class> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  // Promotes a rational operand into the other operand's field.
  static void align(Scalar& a, Scalar& b);
  Scalar promoted(unsigned m) const;

  unsigned conductor_;
  std::vector<mpq_class> coeffs_;  // length phi(conductor_)
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace semiharm

#endif
