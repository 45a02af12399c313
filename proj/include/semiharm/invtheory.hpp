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

#ifndef SEMIHARM_INVTHEORY_HPP
#define SEMIHARM_INVTHEORY_HPP

#include "semiharm/group.hpp"

namespace semiharm {

// Basic invariants f_1..f_n (or z_1..z_n on the duals side), ascending
// degree, graded-lex monic, with the Jacobian-criterion certificate.
struct BasicInvariantSet {
  PolySide side = PolySide::coordinates;
  std::vector<Polynomial> polys;
  std::vector<unsigned> degrees;
  Polynomial jacobian_certificate;  // det(d_j f_i), non-zero
};

// Basic derivations for a module W: free-module generators of
// (S(V*) (x) W*)^G on the coordinates side, (S(V) (x) W)^G on the duals side.
struct DerivationSet {
  PolySide poly_side = PolySide::coordinates;
  FormSpace space;
  std::vector<DifferentialForm> omegas;  // exterior degree 1, ascending exponent
  std::vector<unsigned> exponents;
  std::vector<std::vector<Polynomial>> coeff_matrix;  // omega_i = sum_j J_ij (x) gen_j
};

// Degrees d_1 <= ... <= d_n read off the reciprocal of the invariant Molien
// series; Pi d_i = |G| and Sigma (d_i - 1) = #reflections are asserted.
std::vector<unsigned> group_degrees(const ReflectionGroup& G);

BasicInvariantSet basic_invariants(const ReflectionGroup& G, PolySide side);

// W-exponents e_1 <= ... <= e_r from the Molien numerator of (S (x) W^-)^G.
std::vector<unsigned> module_exponents(const ReflectionGroup& G, const GModuleRep& W,
                                       PolySide side);

DerivationSet basic_derivations(const ReflectionGroup& G, const GModuleRep& W, PolySide side,
                                const BasicInvariantSet* invariants = nullptr);

// det of the derivation coefficient matrix, graded-lex monic; its degree is
// the sum of the exponents.
Polynomial jacobian(const DerivationSet& ds);

// Minimal-degree non-zero chi-semi-invariant polynomial, monic; unique up to
// scalar (asserted via the isotypic dimension in its degree).
Polynomial vandermondian(const ReflectionGroup& G, const LinearCharacter& chi, PolySide side);

// Per-hyperplane multiplicities m_H(M): each eigenvalue of the stabilizer
// generator on M is det_{V*}(gen)^m with 0 <= m < |G_H|; m_H is their sum.
std::vector<unsigned> gutkin_multiplicities(const ReflectionGroup& G, const GModuleRep& M);

// prod_H alpha_H^{m_H(M)}, monic.
Polynomial gutkin_product(const ReflectionGroup& G, const GModuleRep& M);

struct GutkinReport {
  bool item_a = false;            // J_{V*} ~ prod alpha_H
  bool item_b = false;            // J_V ~ prod alpha_H^{|G_H|-1}
  bool mh_condition = false;      // m_H(M) < |G_H| for all H
  bool jm_matches_dm = false;     // J_M ~ Delta_M (bidirectional divides)
  bool item_c = false;            // mh_condition <-> jm_matches_dm
  bool d_hypothesis = false;      // reflections act on M as pseudo-reflections or identity
  bool item_d = false;            // d_hypothesis => jm_matches_dm
  bool item_f = false;            // Delta_chi | Delta_V for chi in {det_M, det_V, det_V*}
  unsigned jacobian_degree = 0;
  bool all_applicable() const { return item_a && item_b && item_c && item_d && item_f; }
};

GutkinReport check_gutkin_corollary(const ReflectionGroup& G, const GModuleRep& M);

// vandermondian(det_V) ~ jacobian(V) plus the per-degree dimension match of
// the det_V-isotypic component against the shifted invariant series.
bool steinberg_check(const ReflectionGroup& G, unsigned q_max = 12);

}  // namespace semiharm

#endif
