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

#include "semiharm/calculus.hpp"

#include <algorithm>
#include <sstream>

#include "semiharm/errors.hpp"
#include "semiharm/sampling.hpp"

namespace semiharm {
namespace {

Scalar multi_factorial(const Monomial& m) {
  mpz_class acc(1);
  for (auto e : m.exp) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), e);
    acc *= f;
  }
  return Scalar(mpq_class(acc));
}

// falling factorial prod_i gamma_i! / (gamma_i - beta_i)!, zero when beta > gamma
bool falling_factorial(const Monomial& gamma, const Monomial& beta, Scalar& out) {
  mpz_class acc(1);
  for (std::size_t i = 0; i < gamma.exp.size(); ++i) {
    if (beta.exp[i] > gamma.exp[i]) return false;
    for (std::uint32_t t = 0; t < beta.exp[i]; ++t) acc *= gamma.exp[i] - t;
  }
  out = Scalar(mpq_class(acc));
  return true;
}

// iota_{m_j} on an increasing wedge word: position sign (-1)^{pos-1}
bool contract_single(const Wedge& w, std::uint8_t j, Wedge& out, int& sign) {
  auto it = std::find(w.begin(), w.end(), j);
  if (it == w.end()) return false;
  sign = ((it - w.begin()) % 2 == 0) ? 1 : -1;
  out.clear();
  out.reserve(w.size() - 1);
  for (auto x : w)
    if (x != j) out.push_back(x);
  return true;
}

// iota_{m^I} for I = {i1 < ... < ik} contracts i1 first, making it adjoint
// to left wedge multiplication by m^I.
bool contract_word(const Wedge& target, const Wedge& I, Wedge& out, int& sign) {
  out = target;
  sign = 1;
  for (auto j : I) {
    Wedge next;
    int s;
    if (!contract_single(out, j, next, s)) return false;
    sign *= s;
    out = std::move(next);
  }
  return true;
}

void check_target_space(const DifferentialForm& omega) {
  if (omega.space().poly_side != PolySide::coordinates ||
      omega.space().ext_side != ExtSide::dual_module)
    throw KindMismatch("operators act on S(V*) (x) /\\M*");
}

// d_{y^beta} (x) (iota or eps)_{word} applied to a form
DifferentialForm composite_term_apply(const DifferentialForm& omega, const Monomial& beta,
                                      const Wedge& word, const Scalar& coef, bool interior) {
  DifferentialForm out(omega.space());
  for (const auto& [k, c] : omega.terms()) {
    Scalar ff;
    if (!falling_factorial(k.mono, beta, ff)) continue;
    Monomial mono = k.mono;
    for (std::size_t i = 0; i < mono.exp.size(); ++i) mono.exp[i] -= beta.exp[i];
    Wedge w;
    int sign;
    if (interior) {
      if (!contract_word(k.wedge, word, w, sign)) continue;
    } else {
      if (!wedge_merge(word, k.wedge, w, sign)) continue;
    }
    Scalar val = coef * c * ff;
    if (sign < 0) val = -val;
    out.add_term(FormKey{std::move(mono), std::move(w)}, val);
  }
  return out;
}

}  // namespace

Scalar pair_forms(const DifferentialForm& eta, const DifferentialForm& omega) {
  const FormSpace& se = eta.space();
  const FormSpace& so = omega.space();
  if (se.n != so.n || se.r != so.r) throw DimensionMismatch("pairing spaces disagree");
  if (se.poly_side != PolySide::coordinates || so.poly_side != PolySide::duals)
    throw DimensionMismatch("pairing expects S(V*) (x) /\\M* against S(V) (x) /\\M");
  Scalar acc(0);
  const bool eta_smaller = eta.term_count() <= omega.term_count();
  const auto& outer = eta_smaller ? eta.terms() : omega.terms();
  const auto& inner = eta_smaller ? omega : eta;
  for (const auto& [k, c] : outer) {
    Scalar other = inner.coefficient(k);
    if (other.is_zero()) continue;
    acc += c * other * multi_factorial(k.mono);
  }
  return acc;
}

Polynomial apply_partial(const Polynomial& s_duals, const Polynomial& f_coords) {
  if (s_duals.side() != PolySide::duals || f_coords.side() != PolySide::coordinates)
    throw KindMismatch("apply_partial expects S(V) acting on S(V*)");
  Polynomial out(PolySide::coordinates, f_coords.nvars());
  for (const auto& [beta, bc] : s_duals.terms()) {
    for (const auto& [gamma, gc] : f_coords.terms()) {
      Scalar ff;
      if (!falling_factorial(gamma, beta, ff)) continue;
      Monomial m = gamma;
      for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] -= beta.exp[i];
      out.add_term(m, bc * gc * ff);
    }
  }
  return out;
}

Operator Operator::partial(Polynomial s_duals) {
  if (s_duals.side() != PolySide::duals) throw KindMismatch("partial payload must be in S(V)");
  Operator op;
  op.kind_ = Kind::partial;
  op.poly_ = std::move(s_duals);
  return op;
}

Operator Operator::poly_mult(Polynomial f_coords) {
  if (f_coords.side() != PolySide::coordinates)
    throw KindMismatch("multiplication payload must be in S(V*)");
  Operator op;
  op.kind_ = Kind::poly_mult;
  op.poly_ = std::move(f_coords);
  return op;
}

Operator Operator::interior(DifferentialForm payload) {
  if (payload.space().poly_side != PolySide::duals)
    throw KindMismatch("interior payload must have S(V) coefficients");
  Operator op;
  op.kind_ = Kind::interior_composite;
  op.form_ = std::move(payload);
  return op;
}

Operator Operator::exterior(DifferentialForm payload) {
  if (payload.space().poly_side != PolySide::duals)
    throw KindMismatch("exterior payload must have S(V) coefficients");
  Operator op;
  op.kind_ = Kind::exterior_composite;
  op.form_ = std::move(payload);
  return op;
}

Operator Operator::exterior_derivative(std::size_t n) {
  Operator op;
  op.kind_ = Kind::exterior_derivative;
  op.index_ = static_cast<int>(n);
  return op;
}

Operator Operator::d_star_op(DifferentialForm payload, std::size_t i) {
  Operator op = exterior(std::move(payload));
  op.kind_ = Kind::d_star;
  op.index_ = static_cast<int>(i);
  return op;
}

Operator Operator::delta_star_op(DifferentialForm payload, std::size_t j) {
  Operator op = interior(std::move(payload));
  op.kind_ = Kind::delta_star;
  op.index_ = static_cast<int>(j);
  return op;
}

Operator Operator::l_partial(Polynomial l_duals, std::size_t i, std::size_t j) {
  Operator op = partial(std::move(l_duals));
  op.kind_ = Kind::l_partial;
  op.index_ = static_cast<int>(i);
  op.index2_ = static_cast<int>(j);
  return op;
}

DifferentialForm apply(const Operator& op, const DifferentialForm& omega) {
  check_target_space(omega);
  switch (op.kind()) {
    case Operator::Kind::partial:
    case Operator::Kind::l_partial: {
      DifferentialForm out(omega.space());
      for (const auto& [bm, bc] : op.poly_payload().terms())
        out += composite_term_apply(omega, bm, Wedge{}, bc, true);
      return out;
    }
    case Operator::Kind::poly_mult: {
      return wedge_mul(DifferentialForm::from_polynomial(
                           FormSpace{PolySide::coordinates, omega.space().ext_side,
                                     omega.space().n, omega.space().r},
                           op.poly_payload()),
                       omega);
    }
    case Operator::Kind::interior_composite:
    case Operator::Kind::delta_star: {
      DifferentialForm out(omega.space());
      for (const auto& [k, c] : op.form_payload().terms())
        out += composite_term_apply(omega, k.mono, k.wedge, c, true);
      return out;
    }
    case Operator::Kind::exterior_composite:
    case Operator::Kind::d_star: {
      DifferentialForm out(omega.space());
      for (const auto& [k, c] : op.form_payload().terms())
        out += composite_term_apply(omega, k.mono, k.wedge, c, false);
      return out;
    }
    case Operator::Kind::exterior_derivative: {
      if (omega.space().r != omega.space().n)
        throw SpaceMismatch("exterior derivative needs M = V");
      DifferentialForm out(omega.space());
      for (const auto& [k, c] : omega.terms()) {
        for (std::size_t j = 0; j < omega.space().n; ++j) {
          if (k.mono.exp[j] == 0) continue;
          Monomial mono = k.mono;
          mono.exp[j] -= 1;
          Wedge w;
          int sign;
          if (!wedge_merge(Wedge{static_cast<std::uint8_t>(j + 1)}, k.wedge, w, sign)) continue;
          Scalar val = c * Scalar(static_cast<long>(k.mono.exp[j]));
          if (sign < 0) val = -val;
          out.add_term(FormKey{std::move(mono), std::move(w)}, val);
        }
      }
      return out;
    }
  }
  throw KindMismatch("unknown operator kind");
}

StarOperators star_operators(const ReflectionGroup& G, const GModuleRep& M,
                             const BasicInvariantSet* duals_invariants) {
  StarOperators out;
  BasicInvariantSet local;
  if (!duals_invariants) {
    local = basic_invariants(G, PolySide::duals);
    duals_invariants = &local;
  }
  GModuleRep mstar = M.contragredient(G);
  out.derivs_mstar = basic_derivations(G, mstar, PolySide::duals, duals_invariants);
  out.derivs_m = basic_derivations(G, M, PolySide::duals, duals_invariants);
  out.exponents_mstar = out.derivs_mstar.exponents;
  out.exponents_m = out.derivs_m.exponents;
  for (std::size_t i = 0; i < out.derivs_mstar.omegas.size(); ++i)
    out.d_star.push_back(Operator::d_star_op(out.derivs_mstar.omegas[i], i + 1));
  for (std::size_t j = 0; j < out.derivs_m.omegas.size(); ++j)
    out.delta_star.push_back(Operator::delta_star_op(out.derivs_m.omegas[j], j + 1));
  return out;
}

LMatrixResult l_matrix(const ReflectionGroup& G, const GModuleRep& M, const StarOperators& ops,
                       unsigned verify_degree) {
  std::size_t n = G.dimension();
  std::size_t r = M.dim();
  FormSpace target{PolySide::coordinates, ExtSide::dual_module, n, r};
  LMatrixResult res;
  res.entries.assign(r, std::vector<Polynomial>(r, Polynomial(PolySide::duals, n)));
  res.verified_degree = verify_degree;

  // M^G = 0 <=> the averaged module projector vanishes
  Matrix avg(r, r);
  for (std::size_t g = 0; g < G.order(); ++g) avg = avg + M.matrix(g);
  res.module_has_no_invariants = rank(avg) == 0;

  auto anticommutator = [&](std::size_t i, std::size_t j,
                            const DifferentialForm& w) -> DifferentialForm {
    return apply(ops.d_star[i], apply(ops.delta_star[j], w)) +
           apply(ops.delta_star[j], apply(ops.d_star[i], w));
  };

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      unsigned deg = ops.exponents_mstar[i] + ops.exponents_m[j];
      Polynomial L(PolySide::duals, n);
      for (const auto& mono : graded_monomials(n, deg)) {
        DifferentialForm probe = DifferentialForm::term(target, mono, Wedge{}, Scalar(1));
        DifferentialForm image = anticommutator(i, j, probe);
        Monomial zero_mono;
        zero_mono.exp.assign(n, 0);
        Scalar c0 = image.coefficient(FormKey{zero_mono, {}});
        if (!c0.is_zero()) L.add_term(mono, c0 / multi_factorial(mono));
      }
      // certify the operator identity on the monomial spanning set
      Operator l_op = Operator::l_partial(L, i + 1, j + 1);
      for (unsigned d = 0; d <= verify_degree; ++d) {
        for (const auto& key : bidegree_basis(target, d, 0)) {
          for (unsigned b = 0; b <= r; ++b) {
            for (const auto& w : subsets_of_size(r, b)) {
              DifferentialForm probe = DifferentialForm::term(target, key.mono, w, Scalar(1));
              if (!(anticommutator(i, j, probe) == apply(l_op, probe)))
                throw CommutatorNotScalarDifferential(
                    "d_i* delta_j* + delta_j* d_i* is not the expected differential at (" +
                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
          }
        }
      }
      // G-invariance certificate
      for (std::size_t g = 0; g < G.order(); ++g)
        if (!(group_act(G, g, L) == L))
          throw CommutatorNotScalarDifferential("L entry is not G-invariant");
      res.entries[i][j] = std::move(L);
    }
  }
  return res;
}

bool l_matrix_hermitian_crosscheck(const ReflectionGroup& G, const GModuleRep& M,
                                   const StarOperators& ops, const LMatrixResult& L) {
  std::size_t n = G.dimension();
  std::size_t r = M.dim();
  HermitianData h = hermitian_form(G, &M);
  // rewrite the d* payload in the basis tau(m_1), ..., tau(m_r) of M*
  Matrix basis_change = inverse(h.tau_m);  // mu_a = sum_j B[a][j] tau(m_j)
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Polynomial expected(PolySide::duals, n);
      for (std::size_t k = 0; k < r; ++k) {
        // J~tau^{M*}_{ik} = sum_a C_ia B[a][k]
        Polynomial jtau(PolySide::duals, n);
        for (std::size_t a = 0; a < r; ++a)
          jtau += ops.derivs_mstar.coeff_matrix[i][a].scaled(basis_change.at(a, k));
        for (std::size_t l = 0; l < r; ++l) {
          Scalar gram_kl = h.tau_m.at(k, l);
          if (gram_kl.is_zero()) continue;
          expected += (jtau * ops.derivs_m.coeff_matrix[j][l]).scaled(gram_kl);
        }
      }
      if (!(expected == L.entries[i][j])) return false;
    }
  return true;
}

static HermitianData hermitianform_impl(const ReflectionGroup& G, const GModuleRep* rep) {
  std::size_t n = G.dimension();
  HermitianData h;
  Scalar inv_order(1, static_cast<long>(G.order()));
  {
    Matrix acc(n, n);
    for (std::size_t g = 0; g < G.order(); ++g) {
      Matrix s = G.poly_substitution(g, PolySide::coordinates);
      acc = acc + s * s.conjugate_transpose();
    }
    h.gram_v = acc.scaled(inv_order);
  }
  if (rep && rep->dim() > 0) {
    std::size_t r = rep->dim();
    Matrix acc(r, r);
    for (std::size_t g = 0; g < G.order(); ++g) {
      Matrix s = rep->ext_substitution(G, g, ExtSide::dual_module);
      acc = acc + s * s.conjugate_transpose();
    }
    h.gram_m = acc.scaled(inv_order);
  } else {
    h.gram_m = Matrix(0, 0);
  }
  if (determinant(h.gram_v).is_zero()) throw DegenerateForm("Gram matrix on V* is singular");
  if (h.gram_m.rows() > 0 && determinant(h.gram_m).is_zero())
    throw DegenerateForm("Gram matrix on M* is singular");
  h.tau_v = inverse(h.gram_v);
  h.tau_m = h.gram_m.rows() > 0 ? inverse(h.gram_m) : Matrix(0, 0);
  return h;
}

HermitianData hermitian_form(const ReflectionGroup& G, const GModuleRep* rep) {
  return hermitianform_impl(G, rep);
}

namespace {

// permanent of the Gram block for monomial pair (alpha, beta)
Scalar gram_permanent(const Monomial& alpha, const Monomial& beta, const Matrix& gram) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < alpha.exp.size(); ++i)
    for (std::uint32_t t = 0; t < alpha.exp[i]; ++t) rows.push_back(i);
  for (std::size_t i = 0; i < beta.exp.size(); ++i)
    for (std::uint32_t t = 0; t < beta.exp[i]; ++t) cols.push_back(i);
  if (rows.size() != cols.size()) return Scalar(0);
  std::size_t k = rows.size();
  if (k == 0) return Scalar(1);
  // dp over used-column bitmask
  std::vector<Scalar> dp(std::size_t(1) << k, Scalar(0));
  dp[0] = Scalar(1);
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == k) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (std::size_t(1) << j)) continue;
      const Scalar& e = gram.at(rows[row], cols[j]);
      if (e.is_zero()) continue;
      dp[mask | (std::size_t(1) << j)] += dp[mask] * e;
    }
  }
  return dp[dp.size() - 1];
}

}  // namespace

Scalar herm_inner(const DifferentialForm& a, const DifferentialForm& b, const HermitianData& h) {
  check_target_space(a);
  check_target_space(b);
  Scalar acc(0);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.mono.degree() != kb.mono.degree() || ka.wedge.size() != kb.wedge.size()) continue;
      Scalar p = gram_permanent(ka.mono, kb.mono, h.gram_v);
      if (p.is_zero()) continue;
      Scalar d(1);
      if (!ka.wedge.empty()) {
        std::vector<std::size_t> rows, cols;
        for (auto x : ka.wedge) rows.push_back(x - 1);
        for (auto x : kb.wedge) cols.push_back(x - 1);
        d = minor_determinant(h.gram_m, rows, cols);
        if (d.is_zero()) continue;
      }
      acc += ca * cb.conjugate() * p * d;
    }
  }
  return acc;
}

DifferentialForm tau_map(const DifferentialForm& omega, const HermitianData& h) {
  const FormSpace& sp = omega.space();
  if (sp.poly_side != PolySide::duals || sp.ext_side != ExtSide::module)
    throw KindMismatch("tau is defined on S(V) (x) /\\M");
  FormSpace target{PolySide::coordinates, ExtSide::dual_module, sp.n, sp.r};
  SubstitutionCache cache(h.tau_v, PolySide::coordinates);
  DifferentialForm out(target);
  for (const auto& [k, c] : omega.terms()) {
    Polynomial poly_img = cache.apply_monomial(k.mono);
    std::vector<std::pair<Wedge, Scalar>> wedge_img;
    if (k.wedge.empty()) {
      wedge_img.emplace_back(Wedge{}, Scalar(1));
    } else {
      std::vector<std::size_t> rows;
      for (auto x : k.wedge) rows.push_back(x - 1);
      for (const auto& target_w : subsets_of_size(sp.r, k.wedge.size())) {
        std::vector<std::size_t> cols;
        for (auto x : target_w) cols.push_back(x - 1);
        Scalar d = minor_determinant(h.tau_m, rows, cols);
        if (!d.is_zero()) wedge_img.emplace_back(target_w, d);
      }
    }
    Scalar cc = c.conjugate();
    for (const auto& [pm, pc] : poly_img.terms())
      for (const auto& [tw, tc] : wedge_img) out.add_term(FormKey{pm, tw}, cc * pc * tc);
  }
  return out;
}

Polynomial tau_map(const Polynomial& p_duals, const HermitianData& h) {
  if (p_duals.side() != PolySide::duals) throw KindMismatch("tau is defined on S(V)");
  SubstitutionCache cache(h.tau_v, PolySide::coordinates);
  Polynomial out(PolySide::coordinates, p_duals.nvars());
  for (const auto& [m, c] : p_duals.terms())
    out += cache.apply_monomial(m).scaled(c.conjugate());
  return out;
}

WeylReport super_weyl_check(std::size_t n, std::size_t r, unsigned samples, unsigned seed) {
  WeylReport report;
  Sampler sampler(seed);
  FormSpace space{PolySide::coordinates, ExtSide::dual_module, n, r};
  auto fail = [&](const std::string& what) {
    report.passed = false;
    report.failures.push_back(what);
  };

  for (unsigned s = 0; s < samples; ++s) {
    DifferentialForm omega = sampler.form(space, 3, 3);
    // d_v m_lambda - m_lambda d_v = lambda(v) id
    std::size_t vi = static_cast<std::size_t>(sampler.integer(0, static_cast<long>(n) - 1));
    std::size_t lj = static_cast<std::size_t>(sampler.integer(0, static_cast<long>(n) - 1));
    Operator dv = Operator::partial(Polynomial::variable(PolySide::duals, n, vi));
    Operator ml = Operator::poly_mult(Polynomial::variable(PolySide::coordinates, n, lj));
    DifferentialForm comm = apply(dv, apply(ml, omega)) - apply(ml, apply(dv, omega));
    DifferentialForm expected = vi == lj ? omega : DifferentialForm::zero(space);
    ++report.checks;
    if (!(comm == expected)) fail("Weyl commutator failed at sample " + std::to_string(s));

    if (r > 0) {
      // iota_m eps_xi + eps_xi iota_m = xi(m) id
      std::size_t mi = static_cast<std::size_t>(sampler.integer(1, static_cast<long>(r)));
      std::size_t xj = static_cast<std::size_t>(sampler.integer(1, static_cast<long>(r)));
      FormSpace payload_m{PolySide::duals, ExtSide::module, n, r};
      FormSpace payload_mu{PolySide::duals, ExtSide::dual_module, n, r};
      Monomial one;
      one.exp.assign(n, 0);
      Operator iota = Operator::interior(DifferentialForm::term(
          payload_m, one, Wedge{static_cast<std::uint8_t>(mi)}, Scalar(1)));
      Operator eps = Operator::exterior(DifferentialForm::term(
          payload_mu, one, Wedge{static_cast<std::uint8_t>(xj)}, Scalar(1)));
      DifferentialForm anti = apply(iota, apply(eps, omega)) + apply(eps, apply(iota, omega));
      DifferentialForm expected2 = mi == xj ? omega : DifferentialForm::zero(space);
      ++report.checks;
      if (!(anti == expected2))
        fail("Clifford anticommutator failed at sample " + std::to_string(s));

      // anti-derivation Leibniz rule on homogeneous exterior words
      unsigned ka = static_cast<unsigned>(sampler.integer(0, static_cast<long>(r)));
      Monomial mono_a = sampler.monomial(n, 2);
      Monomial mono_b = sampler.monomial(n, 2);
      Wedge wa = sampler.wedge_of_size(r, ka);
      DifferentialForm fa = DifferentialForm::term(space, mono_a, wa, sampler.scalar());
      DifferentialForm fb = sampler.form(space, 2, 2);
      DifferentialForm lhs = apply(iota, wedge_mul(fa, fb));
      DifferentialForm rhs = wedge_mul(apply(iota, fa), fb) +
                             (ka % 2 == 0 ? wedge_mul(fa, apply(iota, fb))
                                          : -wedge_mul(fa, apply(iota, fb)));
      ++report.checks;
      if (!(lhs == rhs)) fail("anti-derivation rule failed at sample " + std::to_string(s));
    }
  }
  return report;
}

}  // namespace semiharm
