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

#ifndef SEMIHARM_POLYRING_HPP
#define SEMIHARM_POLYRING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "semiharm/linalg.hpp"
#include "semiharm/scalar.hpp"

namespace semiharm {

// Which of the two polynomial algebras a polynomial lives in: the
// x-variables are coordinates on V (spanning S(V*)), the y-variables are the
// dual generators (spanning S(V)).
enum class PolySide { coordinates, duals };

inline const char* side_name(PolySide s) {
  return s == PolySide::coordinates ? "x" : "y";
}

struct Monomial {
  std::vector<std::uint32_t> exp;

  std::size_t size() const { return exp.size(); }
  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool operator==(const Monomial&) const = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Graded lexicographic: first by total degree, ties by lex with x1 > x2 > ...
bool grlex_less(const Monomial& a, const Monomial& b);

// All monomials of total degree d in n variables, leading (graded-lex
// largest) first; count = C(n+d-1, d).
std::vector<Monomial> graded_monomials(std::size_t n, unsigned d);

// Sparse multivariate polynomial over the scalar field, fixed side and
// variable count. Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() : side_(PolySide::coordinates), n_(0) {}
  Polynomial(PolySide side, std::size_t n) : side_(side), n_(n) {}

  static Polynomial zero(PolySide side, std::size_t n) { return Polynomial(side, n); }
  static Polynomial constant(PolySide side, std::size_t n, const Scalar& c);
  static Polynomial variable(PolySide side, std::size_t n, std::size_t index);
  static Polynomial monomial(PolySide side, Monomial m, const Scalar& c);

  PolySide side() const { return side_; }
  std::size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::unordered_map<Monomial, Scalar, MonomialHash>& terms() const { return terms_; }

  Scalar coefficient(const Monomial& m) const;
  void set_coefficient(const Monomial& m, const Scalar& c);
  void add_term(const Monomial& m, const Scalar& c);

  // Maximal total degree (0 for the zero polynomial) and homogeneity flag.
  unsigned degree() const;
  bool is_homogeneous() const;

  Monomial leading_monomial() const;  // graded-lex maximum; requires non-zero
  Scalar leading_coefficient() const;
  Polynomial monic() const;  // leading coefficient scaled to 1

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  bool operator==(const Polynomial& other) const;

  // Homogeneous component of total degree d.
  Polynomial component(unsigned d) const;

  // Coordinates in the given monomial list (typically graded_monomials).
  std::vector<Scalar> coordinates(const std::vector<Monomial>& basis) const;
  static Polynomial from_coordinates(PolySide side, std::size_t n,
                                     const std::vector<Monomial>& basis,
                                     const std::vector<Scalar>& coords);

  // Terms sorted leading-first; canonical iteration order for output.
  std::vector<std::pair<Monomial, Scalar>> sorted_terms() const;
  std::string to_string() const;

 private:
  PolySide side_;
  std::size_t n_;
  std::unordered_map<Monomial, Scalar, MonomialHash> terms_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
  bool divisible() const { return remainder.is_zero(); }
};

// Graded-lex division by a single divisor: f = q*g + r with no term of r
// reducible by the leading term of g. f is divisible by g iff r = 0.
DivisionResult divide(const Polynomial& f, const Polynomial& g);

// Formal partial derivative with respect to the var-th variable of p's side.
Polynomial partial_derivative(const Polynomial& p, std::size_t var);

// Mutual divisibility with equal degree ("equal up to a non-zero scalar").
bool proportional(const Polynomial& p, const Polynomial& q);

// Linear variable substitution var_k -> sum_j subst(k, j) * var_j, applied
// multiplicatively. subst is n x n.
class SubstitutionCache {
 public:
  explicit SubstitutionCache(const Matrix& subst, PolySide side);
  const Polynomial& power(std::size_t var, unsigned e);
  Polynomial apply(const Polynomial& p);
  Polynomial apply_monomial(const Monomial& m);

 private:
  PolySide side_;
  std::size_t n_;
  std::vector<Polynomial> linear_images_;
  std::vector<std::map<unsigned, Polynomial>> powers_;
};

}  // namespace semiharm

#endif
