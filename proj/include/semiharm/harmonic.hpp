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

#ifndef SEMIHARM_HARMONIC_HPP
#define SEMIHARM_HARMONIC_HPP

#include <map>
#include <optional>

#include "semiharm/calculus.hpp"

namespace semiharm {

// Per-bidegree basis matrices in canonical column echelon form.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  explicit GradedSubspace(FormSpace ambient) : ambient_(ambient) {}

  const FormSpace& ambient() const { return ambient_; }
  void set_cell(unsigned a, unsigned b, Matrix basis);
  const Matrix* cell(unsigned a, unsigned b) const;
  unsigned dim(unsigned a, unsigned b) const;
  const std::map<std::pair<unsigned, unsigned>, Matrix>& cells() const { return cells_; }

 private:
  FormSpace ambient_;
  std::map<std::pair<unsigned, unsigned>, Matrix> cells_;
};

// Shared data for the harmonic-space operations on S(V*) (x) /\M*.
struct HarmonicContext {
  const ReflectionGroup* G = nullptr;
  const GModuleRep* M = nullptr;
  FormSpace up;    // S(V*) (x) /\M*
  FormSpace down;  // S(V) (x) /\M
  BasicInvariantSet inv_x, inv_z;
  DerivationSet derivs_m_x;  // omega_i^M over S(V*) — ideal generators
  Polynomial j_mstar;        // Jacobian of M* over S(V*)
  StarOperators stars;
  bool orlik_solomon_generators = false;  // m_H(M) < |G_H| for all H
  bool module_has_no_invariants = false;  // M^G = 0
};

HarmonicContext make_harmonic_context(const ReflectionGroup& G, const GModuleRep& M);

// Kernel of the stacked d_{z_j} per polynomial degree up to d_max; the total
// dimension reaches |G| once d_max passes the top degree.
GradedSubspace harmonics_poly(const ReflectionGroup& G, const BasicInvariantSet& duals_invariants,
                              unsigned d_max);

// Per-degree dimensions of the polynomial coinvariant ideal I* (span of
// f_i * monomials).
std::vector<unsigned> coinvariant_ideal_poly_dims(const ReflectionGroup& G,
                                                  const BasicInvariantSet& coords_invariants,
                                                  unsigned d_max);

// The bigraded coinvariant ideal J_M* of S(V*) (x) /\M*: generated by
// {f_i, omega_i^M} when the Orlik-Solomon condition holds, otherwise by a
// spanning set of all positive-total-degree invariants up to the cap.
GradedSubspace coinvariant_ideal(const HarmonicContext& ctx, unsigned q_cap);

// Common kernel of the duals-side generator actions (d_{z_j} and delta_i* on
// the fast path). When ideal is supplied, the direct-sum identity
// dim H + dim J = ambient dim is certified per bidegree.
GradedSubspace harmonics_forms(const HarmonicContext& ctx, unsigned q_cap,
                               const GradedSubspace* ideal = nullptr);

struct HypothesisFailure {
  std::string which;
  Polynomial witness_remainder;    // non-zero division remainder, when relevant
  int invariant_dimension = -1;    // dim M^G, when relevant
};

struct AlternantBasisResult {
  bool ok = false;
  std::optional<HypothesisFailure> failure;
  Polynomial delta_chi;
  std::vector<Wedge> subsets;  // colex order
  std::vector<DifferentialForm> elements;
  unsigned rank = 0;
  BigradedSeries census;     // bidegree multiset of the elements
  BigradedSeries predicted;  // q^{deg Delta} prod_i (1 + z q^{-e_i^{M*}})
};

// The 2^r elements d_I* Delta_chi with membership, semi-invariance, rank and
// census certificates; requires J_{M*} | Delta_chi.
AlternantBasisResult alternant_harmonic_basis(const HarmonicContext& ctx,
                                              const LinearCharacter& chi);

struct ModuleBasesResult {
  bool ok = false;
  std::optional<HypothesisFailure> failure;
  BigradedSeries predicted;  // q^{deg Delta} prod (1 + z q^{-e_i}) / prod (1 - q^{d_j})
  BigradedSeries family_invariants_first;  // ranks of {f^a d_I* Delta}
  BigradedSeries family_operators_first;   // ranks of {d_I* f^a Delta}
};

// Both generating families of the chi-isotypic component, cellwise ranks
// checked against the product formula up to q_cap.
ModuleBasesResult semiinvariant_module_bases(const HarmonicContext& ctx,
                                             const LinearCharacter& chi, unsigned q_cap);

struct CoinvariantBasisResult {
  bool ok = false;
  std::optional<HypothesisFailure> failure;
  Polynomial delta_chi;
  std::vector<Wedge> subsets;
  std::vector<DifferentialForm> elements;
  unsigned rank = 0;
  BigradedSeries census;
  BigradedSeries predicted;
  bool independent_modulo_ideal = false;
};

// The same 2^r elements, certified inside the form harmonics (all d_{z_j}
// and delta_j* vanish) and independent modulo J_M* per bidegree; requires
// J_{M*} | Delta_chi and M^G = 0.
CoinvariantBasisResult coinvariant_alternant_basis(const HarmonicContext& ctx,
                                                   const LinearCharacter& chi);

// chi-isotypic dimension of a G-stable subspace of a bidegree cell.
int chi_dimension_of_subspace(const ReflectionGroup& G, const GModuleRep* rep,
                              const FormSpace& space, const LinearCharacter& chi, unsigned a,
                              unsigned b, const Matrix& basis);

enum class Table1Character { invariants, det_v_star, det_v };

struct Table1Cell {
  bool has_closed_form = false;
  BigradedSeries closed_form;
  BigradedSeries molien;
  bool match = false;  // trivially true for the dashed cells
};

// One cell of the invariants/alternants product-formula table for M = V:
// closed-form product against the Molien expansion.
Table1Cell table1_series(const ReflectionGroup& G, PolySide poly_side, ExtSide ext_side,
                         Table1Character column, unsigned q_max);

struct WedgeMultiplicityResult {
  bool ok = false;
  std::optional<HypothesisFailure> failure;
  std::vector<QSeries> per_k;  // sigma_k(q^{e_1^M} .. q^{e_r^M}), k = 0..r
};

// Hilb(Hom_G(/\^k M, S(V*)/I*); q) as elementary symmetric polynomials in
// q^{e_i^M}, verified against the harmonic-subspace projector oracle.
WedgeMultiplicityResult wedge_multiplicity_series(const HarmonicContext& ctx, unsigned q_max);

}  // namespace semiharm

#endif
