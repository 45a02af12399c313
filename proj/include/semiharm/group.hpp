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

#ifndef SEMIHARM_GROUP_HPP
#define SEMIHARM_GROUP_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semiharm/forms.hpp"
#include "semiharm/linalg.hpp"
#include "semiharm/series.hpp"

namespace semiharm {

struct HyperplaneData {
  Polynomial alpha;                 // linear form with ker = H, leading coefficient 1
  unsigned stabilizer_order = 1;    // |G_H|, identity included
  std::size_t stabilizer_generator = 0;  // element index generating the cyclic G_H
  std::vector<std::size_t> stabilizer_elements;
};

// Finite matrix pseudo-reflection group with its full element list and
// reflection/hyperplane inventory. Immutable after construction.
class ReflectionGroup {
 public:
  // Orbit closure of the generators. Rejects groups exceeding the order cap
  // (0 = configured default) and groups not generated by pseudo-reflections.
  static ReflectionGroup close(std::vector<Matrix> generators, std::size_t order_cap = 0);

  // Rebuilds a group from a previously closed element list (cache path);
  // validates membership of the generators, identity, and sampled products.
  static ReflectionGroup from_elements(std::vector<Matrix> generators,
                                       std::vector<Matrix> elements,
                                       std::size_t order_cap = 0);

  FieldSpec field() const { return field_; }
  std::size_t dimension() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Matrix>& generators() const { return generators_; }

  std::size_t index_of(const Matrix& m) const;  // throws on a non-element
  std::size_t product(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverse_index_[i]; }
  // BFS word structure: element i = element(parent) * generator(gen);
  // identity has parent -1.
  const std::vector<std::pair<int, int>>& words() const { return words_; }

  const std::vector<std::size_t>& reflections() const { return reflections_; }
  const std::vector<HyperplaneData>& hyperplanes() const { return hyperplanes_; }

  // Substitution matrix (row k = image coefficients of variable k) for the
  // action of element i on the given polynomial side.
  Matrix poly_substitution(std::size_t i, PolySide side) const;

 private:
  static void build_hyperplanes(ReflectionGroup& G);

  FieldSpec field_;
  std::size_t n_ = 0;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
  std::vector<std::pair<int, int>> words_;
  std::vector<std::size_t> inverse_index_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> reflections_;
  std::vector<HyperplaneData> hyperplanes_;
};

// Spec grammar: symmetric:n | hyperoctahedral:n | demihyperoctahedral:n |
// dihedral:m | cyclic:m | gmpn:m,p,n | file:<path>.
ReflectionGroup builtin_group(const std::string& spec, std::size_t order_cap = 0);

// Explicit r x r matrices for every group element.
class GModuleRep {
 public:
  GModuleRep() = default;
  GModuleRep(std::size_t r, std::vector<Matrix> matrices)
      : r_(r), mats_(std::move(matrices)) {}

  std::size_t dim() const { return r_; }
  const Matrix& matrix(std::size_t i) const { return mats_[i]; }
  std::size_t size() const { return mats_.size(); }

  // Substitution matrix for the exterior generators under element i.
  Matrix ext_substitution(const ReflectionGroup& G, std::size_t i, ExtSide side) const;
  GModuleRep contragredient(const ReflectionGroup& G) const;
  Scalar trace(std::size_t i) const;

 private:
  std::size_t r_ = 0;
  std::vector<Matrix> mats_;
};

// Spec grammar: defining | dual | det | detdual | standard | exterior:k |
// quotient-standard | file:<path>.
GModuleRep builtin_module(const ReflectionGroup& G, const std::string& spec);
// Word-evaluates generator images over the BFS structure; spot-checks
// multiplicativity and the identity image.
GModuleRep module_from_generator_matrices(const ReflectionGroup& G,
                                          const std::vector<Matrix>& generator_images);

class LinearCharacter {
 public:
  LinearCharacter() = default;
  explicit LinearCharacter(std::vector<Scalar> values) : values_(std::move(values)) {}

  const Scalar& value(std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  bool operator==(const LinearCharacter& other) const { return values_ == other.values_; }

  static LinearCharacter trivial(const ReflectionGroup& G);
  static LinearCharacter determinant(const ReflectionGroup& G, const GModuleRep& rep);
  static LinearCharacter det_v(const ReflectionGroup& G);
  static LinearCharacter det_v_dual(const ReflectionGroup& G);
  LinearCharacter inverse_character() const;
  LinearCharacter product(const LinearCharacter& other) const;
  bool is_trivial() const;

 private:
  std::vector<Scalar> values_;
};

// Diagonal action of element i on a form; rep may be null when the space has
// r = 0 exterior generators.
DifferentialForm group_act(const ReflectionGroup& G, std::size_t i, const DifferentialForm& form,
                           const GModuleRep* rep);
Polynomial group_act(const ReflectionGroup& G, std::size_t i, const Polynomial& p);

// (1/|G|) sum_g chi(g)^{-1} g . omega — idempotent projector onto the
// chi-isotypic component; trivial chi gives the plain Reynolds operator.
DifferentialForm reynolds(const DifferentialForm& form, const ReflectionGroup& G,
                          const GModuleRep* rep, const LinearCharacter& chi);
Polynomial reynolds(const Polynomial& p, const ReflectionGroup& G, const LinearCharacter& chi);

// Matrix of element i acting on the bidegree-(a, b) monomial/wedge basis.
Matrix cell_action_matrix(const ReflectionGroup& G, const GModuleRep* rep, const FormSpace& space,
                          std::size_t elem, const std::vector<FormKey>& cell);

// Projector onto the chi-isotypic part of the (a, b) component, and its rank
// (the brute-force dimension oracle).
Matrix isotypic_projector(const ReflectionGroup& G, const GModuleRep* rep, const FormSpace& space,
                          const LinearCharacter& chi, unsigned a, unsigned b);
int isotypic_dimension(const ReflectionGroup& G, const GModuleRep* rep, const FormSpace& space,
                       const LinearCharacter& chi, unsigned a, unsigned b);

// Per-element closed form: (1/|G|) sum_g chi(g)^{-1} det(1 + z ext(g)) / det(1 - q poly(g)),
// expanded to q_max. Coefficientwise equal to isotypic_dimension.
BigradedSeries molien_series(const ReflectionGroup& G, PolySide poly_side, const GModuleRep* rep,
                             ExtSide ext_side, const LinearCharacter& chi, unsigned q_max);

// Exhaustive (|G| <= 200) or sampled product/inverse closure check.
bool verify_group_closure(const ReflectionGroup& G, unsigned samples = 64, unsigned seed = 0);

}  // namespace semiharm

#endif
