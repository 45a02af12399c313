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

#ifndef SEMIHARM_CALCULUS_HPP
#define SEMIHARM_CALCULUS_HPP

#include "semiharm/invtheory.hpp"

namespace semiharm {

// Natural perfect pairing S(V*) (x) /\M* x S(V) (x) /\M -> F: permanent rule
// on the polynomial factor, determinant rule on the exterior factor. On the
// monomial bases it is diagonal with entries alpha!.
Scalar pair_forms(const DifferentialForm& eta, const DifferentialForm& omega);

// d_s f for s in S(V), f in S(V*), by the multi-index rule.
Polynomial apply_partial(const Polynomial& s_duals, const Polynomial& f_coords);

// Operators on S(V*) (x) /\M*. The composite kinds realize the two algebra
// morphisms s (x) m -> d_s (x) iota_m and s (x) mu -> d_s (x) eps_mu.
class Operator {
 public:
  enum class Kind {
    partial,              // d_s for s in S(V)
    poly_mult,            // m_f for f in S(V*)
    interior_composite,   // payload in S(V) (x) /\M, acts d (x) iota
    exterior_composite,   // payload in S(V) (x) /\M*, acts d (x) eps
    exterior_derivative,  // sum_j d_{v_j} (x) eps_{lambda_j}, needs M = V
    d_star,               // exterior_composite with payload omega~_i^{M*}
    delta_star,           // interior_composite with payload omega~_j^M
    l_partial             // d_{L_ij}
  };

  static Operator partial(Polynomial s_duals);
  static Operator poly_mult(Polynomial f_coords);
  static Operator interior(DifferentialForm payload);
  static Operator exterior(DifferentialForm payload);
  static Operator exterior_derivative(std::size_t n);
  static Operator d_star_op(DifferentialForm payload, std::size_t i);
  static Operator delta_star_op(DifferentialForm payload, std::size_t j);
  static Operator l_partial(Polynomial l_duals, std::size_t i, std::size_t j);

  Kind kind() const { return kind_; }
  const Polynomial& poly_payload() const { return poly_; }
  const DifferentialForm& form_payload() const { return form_; }
  int index() const { return index_; }
  int index2() const { return index2_; }

 private:
  Kind kind_ = Kind::partial;
  Polynomial poly_;
  DifferentialForm form_;
  int index_ = -1, index2_ = -1;
};

DifferentialForm apply(const Operator& op, const DifferentialForm& omega);

// tilde-derivation payloads for M* and M over S(V), and the operators they
// induce: d_i* raises exterior degree, delta_j* lowers it.
struct StarOperators {
  DerivationSet derivs_mstar;  // omega~_i^{M*} in (S(V) (x) M*)^G
  DerivationSet derivs_m;      // omega~_j^{M} in (S(V) (x) M)^G
  std::vector<Operator> d_star;
  std::vector<Operator> delta_star;
  std::vector<unsigned> exponents_mstar;
  std::vector<unsigned> exponents_m;
};

StarOperators star_operators(const ReflectionGroup& G, const GModuleRep& M,
                             const BasicInvariantSet* duals_invariants = nullptr);

// d_i* delta_j* + delta_j* d_i* = d_{L_ij}; L recovered by interpolation and
// certified on the full monomial spanning set up to verify_degree.
struct LMatrixResult {
  std::vector<std::vector<Polynomial>> entries;  // in S(V), G-invariant
  bool module_has_no_invariants = false;         // M^G = 0
  unsigned verified_degree = 0;
};

LMatrixResult l_matrix(const ReflectionGroup& G, const GModuleRep& M, const StarOperators& ops,
                       unsigned verify_degree);

// Cross-check of the Hermitian-Gram expression for L_ij against the
// interpolated matrix.
bool l_matrix_hermitian_crosscheck(const ReflectionGroup& G, const GModuleRep& M,
                                   const StarOperators& ops, const LMatrixResult& L);

// G-invariant positive-definite Hermitian data from averaging the standard
// coordinate form, with the induced conjugate-linear ring isomorphism tau.
struct HermitianData {
  Matrix gram_v;  // (lambda_i, lambda_j) on V*
  Matrix gram_m;  // (mu_i, mu_j) on M*
  Matrix tau_v;   // row j = coefficients of tau(v_j) over the lambda basis
  Matrix tau_m;   // row j = coefficients of tau(m_j) over the mu basis
};

HermitianData hermitian_form(const ReflectionGroup& G, const GModuleRep* rep);

// Hermitian inner product on S(V*) (x) /\M*: permanent extension on the
// polynomial factor, determinant extension on the exterior factor;
// conjugate-linear in the second argument.
Scalar herm_inner(const DifferentialForm& a, const DifferentialForm& b, const HermitianData& h);

// tau: S(V) (x) /\M -> S(V*) (x) /\M*, conjugate-linear, multiplicative,
// satisfying <eta, omega> = (eta, tau(omega)).
DifferentialForm tau_map(const DifferentialForm& omega, const HermitianData& h);
Polynomial tau_map(const Polynomial& p_duals, const HermitianData& h);

struct WeylReport {
  bool passed = true;
  unsigned checks = 0;
  std::vector<std::string> failures;
};

// Verifies the commutation relations d_v m_lambda - m_lambda d_v = lambda(v),
// iota_m eps_xi + eps_xi iota_m = xi(m), and the anti-derivation Leibniz rule
// on seeded random samples in an (n, r) form space.
WeylReport super_weyl_check(std::size_t n, std::size_t r, unsigned samples, unsigned seed);

}  // namespace semiharm

#endif
