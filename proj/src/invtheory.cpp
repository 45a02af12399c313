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

#include "semiharm/invtheory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "semiharm/errors.hpp"

namespace semiharm {
namespace {

// Products prod_i polys[i]^{a_i} of weighted degree exactly d.
void weighted_products_rec(const std::vector<Polynomial>& polys,
                           const std::vector<unsigned>& degs, unsigned d, std::size_t from,
                           const Polynomial& acc, std::vector<Polynomial>& out) {
  if (d == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i < polys.size(); ++i)
    if (degs[i] <= d) weighted_products_rec(polys, degs, d - degs[i], i, acc * polys[i], out);
}

std::vector<Polynomial> weighted_products(PolySide side, std::size_t n,
                                          const std::vector<Polynomial>& polys,
                                          const std::vector<unsigned>& degs, unsigned d) {
  std::vector<Polynomial> out;
  weighted_products_rec(polys, degs, d, 0, Polynomial::constant(side, n, Scalar(1)), out);
  return out;
}

// Determinant of a square polynomial matrix by Laplace expansion with
// column-subset memoization.
Polynomial poly_matrix_det(const std::vector<std::vector<Polynomial>>& m, PolySide side,
                           std::size_t n) {
  std::size_t r = m.size();
  if (r == 0) return Polynomial::constant(side, n, Scalar(1));
  std::map<std::vector<std::size_t>, Polynomial> memo;
  // det over rows [r - |S| .. r) and column set S
  std::function<const Polynomial&(std::vector<std::size_t>)> det =
      [&](std::vector<std::size_t> cols) -> const Polynomial& {
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    std::size_t row = r - cols.size();
    Polynomial acc(side, n);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Polynomial& entry = m[row][cols[k]];
      if (entry.is_zero()) continue;
      std::vector<std::size_t> rest;
      rest.reserve(cols.size() - 1);
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (j != k) rest.push_back(cols[j]);
      Polynomial sub = rest.empty() ? Polynomial::constant(side, n, Scalar(1)) : det(rest);
      Polynomial contrib = entry * sub;
      if (k % 2 == 0)
        acc += contrib;
      else
        acc -= contrib;
    }
    return memo.emplace(std::move(cols), std::move(acc)).first->second;
  };
  std::vector<std::size_t> all(r);
  std::iota(all.begin(), all.end(), 0);
  return det(all);
}

QSeries molien_poly_series(const ReflectionGroup& G, unsigned cap) {
  auto s = molien_series(G, PolySide::coordinates, nullptr, ExtSide::dual_module,
                         LinearCharacter::trivial(G), cap);
  QSeries out(cap + 1);
  for (unsigned a = 0; a <= cap; ++a) out[a] = s.at(a, 0);
  return out;
}

}  // namespace

std::vector<unsigned> group_degrees(const ReflectionGroup& G) {
  std::size_t n = G.dimension();
  unsigned cap = static_cast<unsigned>(n + G.reflections().size());
  QSeries h = molien_poly_series(G, cap);
  QSeries r = qseries_inverse(h, cap);
  std::vector<unsigned> degrees;
  // r = prod (1 - q^{d_i}); peel factors from the lowest degree up
  while (true) {
    unsigned d = 0;
    for (unsigned k = 1; k <= cap; ++k)
      if (r[k] != 0) {
        d = k;
        break;
      }
    if (d == 0) break;
    if (r[d] > 0) throw GenerationFailure("invariant series reciprocal is not a degree product");
    std::int64_t mult = -r[d];
    QSeries geo(cap + 1, 0);
    for (unsigned k = 0; k <= cap; k += d) geo[k] = 1;
    for (std::int64_t t = 0; t < mult; ++t) {
      r = qseries_mul(r, geo, cap);
      degrees.push_back(d);
    }
  }
  if (r[0] != 1) throw GenerationFailure("degree extraction left a non-trivial series");
  std::sort(degrees.begin(), degrees.end());
  unsigned long long prod = 1;
  unsigned long long refl = 0;
  for (auto d : degrees) {
    prod *= d;
    refl += d - 1;
  }
  if (degrees.size() != n || prod != G.order() || refl != G.reflections().size())
    throw GenerationFailure("degrees fail the order / reflection-count checks");
  return degrees;
}

BasicInvariantSet basic_invariants(const ReflectionGroup& G, PolySide side) {
  std::size_t n = G.dimension();
  auto degrees = group_degrees(G);
  auto triv = LinearCharacter::trivial(G);

  BasicInvariantSet out;
  out.side = side;
  out.degrees = degrees;

  std::vector<unsigned> chosen_degs;
  for (unsigned d : degrees) {
    auto basis = graded_monomials(n, d);
    SpanTracker span;
    for (const auto& prod :
         weighted_products(side, n, out.polys, chosen_degs, d))
      span.add(prod.coordinates(basis));
    bool found = false;
    for (const auto& mono : basis) {
      Polynomial cand = reynolds(Polynomial::monomial(side, mono, Scalar(1)), G, triv);
      if (cand.is_zero()) continue;
      if (span.add(cand.coordinates(basis))) {
        out.polys.push_back(cand.monic());
        chosen_degs.push_back(d);
        found = true;
        break;
      }
    }
    if (!found)
      throw GenerationFailure("no new invariant generator in degree " + std::to_string(d));
  }

  // classical Jacobian criterion certifies algebraic independence
  std::vector<std::vector<Polynomial>> jac(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = partial_derivative(out.polys[i], j);
  out.jacobian_certificate = poly_matrix_det(jac, side, n);
  if (out.jacobian_certificate.is_zero())
    throw GenerationFailure("Jacobian criterion failed for the chosen invariants");
  return out;
}

std::vector<unsigned> module_exponents(const ReflectionGroup& G, const GModuleRep& W,
                                       PolySide side) {
  std::size_t r = W.dim();
  if (r == 0) return {};
  ExtSide ext = side == PolySide::coordinates ? ExtSide::dual_module : ExtSide::module;
  unsigned cap = static_cast<unsigned>(r * G.reflections().size() + 1);
  auto series = molien_series(G, side, &W, ext, LinearCharacter::trivial(G), cap);
  auto degrees = group_degrees(G);
  // numerator = series_{z^1} * prod (1 - q^{d_i})
  QSeries num(cap + 1, 0);
  for (unsigned a = 0; a <= cap; ++a) num[a] = series.at(a, 1);
  for (unsigned d : degrees) {
    QSeries f(cap + 1, 0);
    f[0] = 1;
    if (d <= cap) f[d] = -1;
    num = qseries_mul(num, f, cap);
  }
  std::vector<unsigned> exps;
  for (unsigned a = 0; a <= cap; ++a) {
    if (num[a] < 0) throw FreenessCertificateFailure("negative Molien numerator coefficient");
    for (std::int64_t t = 0; t < num[a]; ++t) exps.push_back(a);
  }
  if (exps.size() != r)
    throw FreenessCertificateFailure("Molien numerator does not sum to the module dimension");
  return exps;
}

DerivationSet basic_derivations(const ReflectionGroup& G, const GModuleRep& W, PolySide side,
                                const BasicInvariantSet* invariants) {
  std::size_t n = G.dimension();
  std::size_t r = W.dim();
  ExtSide ext = side == PolySide::coordinates ? ExtSide::dual_module : ExtSide::module;
  BasicInvariantSet local;
  if (!invariants) {
    local = basic_invariants(G, side);
    invariants = &local;
  }
  auto exponents = module_exponents(G, W, side);
  auto triv = LinearCharacter::trivial(G);

  DerivationSet out;
  out.poly_side = side;
  out.space = FormSpace{side, ext, n, r};
  out.exponents = exponents;

  std::size_t next = 0;
  while (next < exponents.size()) {
    unsigned e = exponents[next];
    std::size_t count = 0;
    while (next + count < exponents.size() && exponents[next + count] == e) ++count;
    auto cell = bidegree_basis(out.space, e, 1);
    SpanTracker span;
    for (std::size_t j = 0; j < out.omegas.size(); ++j) {
      unsigned ej = out.exponents[j];
      for (const auto& p : weighted_products(side, n, invariants->polys, invariants->degrees,
                                             e - ej)) {
        auto prod = wedge_mul(DifferentialForm::from_polynomial(out.space, p), out.omegas[j]);
        span.add(prod.coordinates(cell));
      }
    }
    std::size_t found = 0;
    for (const auto& key : cell) {
      if (found == count) break;
      auto cand = reynolds(DifferentialForm::term(out.space, key.mono, key.wedge, Scalar(1)), G,
                           &W, triv);
      if (cand.is_zero()) continue;
      auto coords = cand.coordinates(cell);
      if (!span.add(coords)) continue;
      // scale the first non-zero coordinate to 1 for a deterministic output
      Scalar lead(0);
      for (const auto& c : coords)
        if (!c.is_zero()) {
          lead = c;
          break;
        }
      out.omegas.push_back(cand.scaled(lead.inverse()));
      ++found;
    }
    if (found != count)
      throw FreenessCertificateFailure("found " + std::to_string(found) + " of " +
                                       std::to_string(count) + " derivations in degree " +
                                       std::to_string(e));
    next += count;
  }

  out.coeff_matrix.assign(r, std::vector<Polynomial>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      out.coeff_matrix[i][j] =
          out.omegas[i].wedge_coefficient(Wedge{static_cast<std::uint8_t>(j + 1)});
  if (r > 0 && poly_matrix_det(out.coeff_matrix, side, n).is_zero())
    throw FreenessCertificateFailure("derivation coefficient matrix is singular");
  return out;
}

Polynomial jacobian(const DerivationSet& ds) {
  std::size_t n = ds.space.n;
  Polynomial det = poly_matrix_det(ds.coeff_matrix, ds.poly_side, n);
  if (det.is_zero()) throw ZeroDeterminant("Jacobian vanished; derivations are not free");
  unsigned expect = 0;
  for (auto e : ds.exponents) expect += e;
  if (det.degree() != expect || !det.is_homogeneous())
    throw ZeroDeterminant("Jacobian degree mismatch");
  return det.monic();
}

Polynomial vandermondian(const ReflectionGroup& G, const LinearCharacter& chi, PolySide side) {
  std::size_t n = G.dimension();
  unsigned cap = static_cast<unsigned>(G.reflections().size()) + 1;
  for (unsigned d = 0; d <= cap; ++d) {
    Polynomial first(side, n);
    SpanTracker span;
    auto basis = graded_monomials(n, d);
    for (const auto& mono : basis) {
      Polynomial cand = reynolds(Polynomial::monomial(side, mono, Scalar(1)), G, chi);
      if (cand.is_zero()) continue;
      if (span.add(cand.coordinates(basis)) && first.is_zero()) first = cand;
    }
    if (span.dim() > 1)
      throw NotUniqueInMinDegree("chi-isotypic component has dimension " +
                                 std::to_string(span.dim()) + " in degree " + std::to_string(d));
    if (span.dim() == 1) return first.monic();
  }
  throw GenerationFailure("no chi-semi-invariant found up to degree cap");
}

std::vector<unsigned> gutkin_multiplicities(const ReflectionGroup& G, const GModuleRep& M) {
  std::size_t r = M.dim();
  std::vector<unsigned> out;
  for (const auto& h : G.hyperplanes()) {
    std::size_t gi = h.stabilizer_generator;
    unsigned k = h.stabilizer_order;
    // det_{V*}(g) = det(g^{-1}) generates the character group of the cyclic G_H
    Scalar det_vstar = determinant(G.element(G.inverse(gi)));
    const Matrix& R = M.matrix(gi);
    unsigned total_mult = 0;
    unsigned m_h = 0;
    for (unsigned m = 0; m < k; ++m) {
      Matrix shifted = R - Matrix::identity(r).scaled(det_vstar.pow(m));
      unsigned mult = static_cast<unsigned>(r - rank(shifted));
      total_mult += mult;
      m_h += m * mult;
    }
    if (total_mult != r)
      throw NotDiagonalizable(
          "stabilizer action not diagonalizable over the field; required conductor " +
          std::to_string(std::lcm<unsigned>(G.field().conductor, k)));
    out.push_back(m_h);
  }
  return out;
}

Polynomial gutkin_product(const ReflectionGroup& G, const GModuleRep& M) {
  std::size_t n = G.dimension();
  auto mults = gutkin_multiplicities(G, M);
  Polynomial prod = Polynomial::constant(PolySide::coordinates, n, Scalar(1));
  for (std::size_t h = 0; h < mults.size(); ++h)
    for (unsigned t = 0; t < mults[h]; ++t) prod *= G.hyperplanes()[h].alpha;
  return prod.monic();
}

GutkinReport check_gutkin_corollary(const ReflectionGroup& G, const GModuleRep& M) {
  std::size_t n = G.dimension();
  GutkinReport rep;
  auto invariants = basic_invariants(G, PolySide::coordinates);

  GModuleRep defining(n, G.elements());
  Polynomial j_vstar =
      jacobian(basic_derivations(G, defining.contragredient(G), PolySide::coordinates,
                                 &invariants));
  Polynomial alpha_prod = Polynomial::constant(PolySide::coordinates, n, Scalar(1));
  for (const auto& h : G.hyperplanes()) alpha_prod *= h.alpha;
  rep.item_a = proportional(j_vstar, alpha_prod);

  Polynomial j_v = jacobian(basic_derivations(G, defining, PolySide::coordinates, &invariants));
  Polynomial alpha_prod_b = Polynomial::constant(PolySide::coordinates, n, Scalar(1));
  for (const auto& h : G.hyperplanes())
    for (unsigned t = 0; t + 1 < h.stabilizer_order; ++t) alpha_prod_b *= h.alpha;
  rep.item_b = proportional(j_v, alpha_prod_b);

  auto mults = gutkin_multiplicities(G, M);
  rep.mh_condition = true;
  for (std::size_t h = 0; h < mults.size(); ++h)
    if (mults[h] >= G.hyperplanes()[h].stabilizer_order) rep.mh_condition = false;

  Polynomial j_m = jacobian(basic_derivations(G, M, PolySide::coordinates, &invariants));
  rep.jacobian_degree = j_m.degree();
  Polynomial delta_m =
      vandermondian(G, LinearCharacter::determinant(G, M), PolySide::coordinates);
  rep.jm_matches_dm = proportional(j_m, delta_m);
  rep.item_c = rep.mh_condition == rep.jm_matches_dm;

  rep.d_hypothesis = true;
  for (auto ri : G.reflections()) {
    const Matrix& R = M.matrix(ri);
    if (R.is_identity()) continue;
    if (M.dim() == 0 || rank(R - Matrix::identity(M.dim())) != 1) {
      rep.d_hypothesis = false;
      break;
    }
  }
  rep.item_d = !rep.d_hypothesis || rep.jm_matches_dm;

  Polynomial delta_v = vandermondian(G, LinearCharacter::det_v(G), PolySide::coordinates);
  rep.item_f = true;
  for (const auto& chi : {LinearCharacter::determinant(G, M), LinearCharacter::det_v(G),
                          LinearCharacter::det_v_dual(G)}) {
    Polynomial delta_chi = vandermondian(G, chi, PolySide::coordinates);
    if (!divide(delta_v, delta_chi).divisible()) rep.item_f = false;
  }
  return rep;
}

bool steinberg_check(const ReflectionGroup& G, unsigned q_max) {
  GModuleRep defining(G.dimension(), G.elements());
  Polynomial j_v = jacobian(basic_derivations(G, defining, PolySide::coordinates));
  Polynomial delta = vandermondian(G, LinearCharacter::det_v(G), PolySide::coordinates);
  if (!proportional(j_v, delta)) return false;
  auto det_series = molien_series(G, PolySide::coordinates, nullptr, ExtSide::dual_module,
                                  LinearCharacter::det_v(G), q_max);
  auto inv_series = molien_series(G, PolySide::coordinates, nullptr, ExtSide::dual_module,
                                  LinearCharacter::trivial(G), q_max);
  unsigned shift = j_v.degree();
  for (unsigned a = 0; a <= q_max; ++a) {
    std::int64_t expected = a >= shift ? inv_series.at(a - shift, 0) : 0;
    if (det_series.at(a, 0) != expected) return false;
  }
  return true;
}

}  // namespace semiharm
