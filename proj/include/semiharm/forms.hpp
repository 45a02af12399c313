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

#ifndef SEMIHARM_FORMS_HPP
#define SEMIHARM_FORMS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semiharm/polyring.hpp"

namespace semiharm {

// Exterior factor of a form algebra: the module M itself (generators m_i,
// paired with the duals polynomial side) or its dual M* (generators mu_i).
enum class ExtSide { module, dual_module };

// One of the four bigraded algebras S(V +/-) (x) /\ M +/-.
struct FormSpace {
  PolySide poly_side = PolySide::coordinates;
  ExtSide ext_side = ExtSide::dual_module;
  std::size_t n = 0;  // polynomial variables
  std::size_t r = 0;  // exterior generators

  bool operator==(const FormSpace&) const = default;
};

// Strictly increasing subset of {1..r}, stored 1-based.
using Wedge = std::vector<std::uint8_t>;

struct FormKey {
  Monomial mono;
  Wedge wedge;
  bool operator==(const FormKey&) const = default;
};

struct FormKeyHash {
  std::size_t operator()(const FormKey& k) const {
    std::size_t h = MonomialHash{}(k.mono);
    for (auto i : k.wedge) {
      h ^= i;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Sign and merged index set of wedging two disjoint increasing sets;
// returns false when they intersect (the product vanishes).
bool wedge_merge(const Wedge& a, const Wedge& b, Wedge& merged, int& sign);

// All (monomial, subset) pairs of bidegree (a, b): |monomial| = a, |I| = b.
// Monomials leading-first, subsets in lexicographic order.
std::vector<FormKey> bidegree_basis(const FormSpace& space, unsigned a, unsigned b);

std::vector<Wedge> subsets_of_size(std::size_t r, unsigned b);

// Element of one of the four form algebras; bigraded, wedge-normalized
// (index sets strictly increasing, adjacent swaps contribute -1).
class DifferentialForm {
 public:
  DifferentialForm() = default;
  explicit DifferentialForm(FormSpace space) : space_(space) {}

  static DifferentialForm zero(FormSpace space) { return DifferentialForm(space); }
  static DifferentialForm one(FormSpace space);
  // polynomial as an exterior-degree-0 form
  static DifferentialForm from_polynomial(FormSpace space, const Polynomial& p);
  // single generator wedge term
  static DifferentialForm generator(FormSpace space, std::size_t index_1based);
  static DifferentialForm term(FormSpace space, Monomial m, Wedge w, const Scalar& c);

  const FormSpace& space() const { return space_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::unordered_map<FormKey, Scalar, FormKeyHash>& terms() const { return terms_; }

  Scalar coefficient(const FormKey& k) const;
  void add_term(const FormKey& k, const Scalar& c);

  DifferentialForm operator-() const;
  friend DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b);
  friend DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b);
  DifferentialForm scaled(const Scalar& c) const;
  DifferentialForm& operator+=(const DifferentialForm& b) { return *this = *this + b; }
  DifferentialForm& operator-=(const DifferentialForm& b) { return *this = *this - b; }
  bool operator==(const DifferentialForm& other) const;

  // Wedge multiplication: polynomial factors commute, exterior factors
  // anticommute.
  friend DifferentialForm wedge_mul(const DifferentialForm& a, const DifferentialForm& b);

  // The (a, b) bidegree component; bidegrees() lists the occupied cells.
  DifferentialForm bidegree_component(unsigned a, unsigned b) const;
  std::vector<std::pair<unsigned, unsigned>> bidegrees() const;
  bool is_homogeneous(unsigned* a_out = nullptr, unsigned* b_out = nullptr) const;

  // Polynomial coefficient of a single wedge word.
  Polynomial wedge_coefficient(const Wedge& w) const;

  std::vector<Scalar> coordinates(const std::vector<FormKey>& basis) const;
  static DifferentialForm from_coordinates(FormSpace space, const std::vector<FormKey>& basis,
                                           const std::vector<Scalar>& coords);

  // Diagonal action: poly_subst acts on the variables, ext_subst on the
  // exterior generators (row k = image coefficients of generator k).
  DifferentialForm acted(const Matrix& poly_subst, const Matrix& ext_subst) const;

  std::string to_string() const;

 private:
  FormSpace space_;
  std::unordered_map<FormKey, Scalar, FormKeyHash> terms_;
};

DifferentialForm wedge_mul(const DifferentialForm& a, const DifferentialForm& b);

}  // namespace semiharm

#endif
