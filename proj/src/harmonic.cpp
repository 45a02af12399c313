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

#include "semiharm/harmonic.hpp"

#include <algorithm>
#include <functional>

#include "semiharm/errors.hpp"

namespace semiharm {
namespace {

Matrix columns_to_matrix(const std::vector<std::vector<Scalar>>& cols, std::size_t dim) {
  Matrix m(dim, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = cols[c][r];
  return m;
}

// Shrinks a spanning set of forms to the common kernel of the operator.
std::vector<DifferentialForm> refine_kernel(const std::vector<DifferentialForm>& basis,
                                            const Operator& op) {
  if (basis.empty()) return basis;
  std::vector<DifferentialForm> images;
  images.reserve(basis.size());
  bool all_zero = true;
  for (const auto& f : basis) {
    images.push_back(apply(op, f));
    if (!images.back().is_zero()) all_zero = false;
  }
  if (all_zero) return basis;
  std::unordered_map<FormKey, std::size_t, FormKeyHash> rows;
  for (const auto& im : images)
    for (const auto& [k, c] : im.terms()) {
      std::size_t next = rows.size();
      rows.emplace(k, next);
    }
  Matrix m(rows.size(), basis.size());
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [k, v] : images[c].terms()) m.at(rows.at(k), c) = v;
  Matrix ker = kernel_basis(std::move(m));
  std::vector<DifferentialForm> out;
  out.reserve(ker.cols());
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    DifferentialForm f(basis[0].space());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (ker.at(j, c).is_zero()) continue;
      f += basis[j].scaled(ker.at(j, c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

// Spanning set of the invariants of every positive-total-degree bidegree of
// the given space, up to the polynomial cap.
std::vector<DifferentialForm> invariant_generators(const ReflectionGroup& G,
                                                   const GModuleRep& M, const FormSpace& space,
                                                   unsigned q_cap) {
  auto triv = LinearCharacter::trivial(G);
  std::vector<DifferentialForm> gens;
  for (unsigned a = 0; a <= q_cap; ++a) {
    for (unsigned b = 0; b <= space.r; ++b) {
      if (a + b == 0) continue;
      auto cell = bidegree_basis(space, a, b);
      SpanTracker span;
      for (const auto& key : cell) {
        auto img = reynolds(DifferentialForm::term(space, key.mono, key.wedge, Scalar(1)), G,
                            &M, triv);
        if (img.is_zero()) continue;
        if (span.add(img.coordinates(cell))) gens.push_back(std::move(img));
      }
    }
  }
  return gens;
}

BigradedSeries census_of(const std::vector<DifferentialForm>& elements, unsigned q_max,
                         unsigned z_max) {
  BigradedSeries s(q_max, z_max);
  for (const auto& e : elements) {
    unsigned a = 0, b = 0;
    if (!e.is_homogeneous(&a, &b)) throw RankDeficient("basis element is not bihomogeneous");
    s.at(a, b) += 1;
  }
  return s;
}

// subsets of {1..r} in colex order: bitmask order with bit k <-> element k+1
std::vector<Wedge> colex_subsets(std::size_t r) {
  std::vector<Wedge> out;
  out.reserve(std::size_t(1) << r);
  for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
    Wedge w;
    for (std::size_t k = 0; k < r; ++k)
      if (mask & (std::size_t(1) << k)) w.push_back(static_cast<std::uint8_t>(k + 1));
    out.push_back(std::move(w));
  }
  return out;
}

// d_{i1}* ... d_{ik}* omega, rightmost operator applied first
DifferentialForm apply_word(const StarOperators& stars, const Wedge& subset,
                            DifferentialForm omega) {
  for (auto it = subset.rbegin(); it != subset.rend(); ++it)
    omega = apply(stars.d_star[*it - 1], omega);
  return omega;
}

unsigned global_rank(const std::vector<DifferentialForm>& elements) {
  std::unordered_map<FormKey, std::size_t, FormKeyHash> rows;
  for (const auto& e : elements)
    for (const auto& [k, c] : e.terms()) {
      std::size_t next = rows.size();
      rows.emplace(k, next);
    }
  SpanTracker span;
  for (const auto& e : elements) {
    std::vector<Scalar> v(rows.size());
    for (const auto& [k, c] : e.terms()) v[rows.at(k)] = c;
    span.add(std::move(v));
  }
  return static_cast<unsigned>(span.dim());
}

}  // namespace

void GradedSubspace::set_cell(unsigned a, unsigned b, Matrix basis) {
  cells_[{a, b}] = std::move(basis);
}

const Matrix* GradedSubspace::cell(unsigned a, unsigned b) const {
  auto it = cells_.find({a, b});
  return it == cells_.end() ? nullptr : &it->second;
}

unsigned GradedSubspace::dim(unsigned a, unsigned b) const {
  const Matrix* m = cell(a, b);
  return m ? static_cast<unsigned>(m->cols()) : 0;
}

HarmonicContext make_harmonic_context(const ReflectionGroup& G, const GModuleRep& M) {
  HarmonicContext ctx;
  ctx.G = &G;
  ctx.M = &M;
  std::size_t n = G.dimension();
  std::size_t r = M.dim();
  ctx.up = FormSpace{PolySide::coordinates, ExtSide::dual_module, n, r};
  ctx.down = FormSpace{PolySide::duals, ExtSide::module, n, r};
  ctx.inv_x = basic_invariants(G, PolySide::coordinates);
  ctx.inv_z = basic_invariants(G, PolySide::duals);
  ctx.derivs_m_x = basic_derivations(G, M, PolySide::coordinates, &ctx.inv_x);
  ctx.j_mstar =
      jacobian(basic_derivations(G, M.contragredient(G), PolySide::coordinates, &ctx.inv_x));
  ctx.stars = star_operators(G, M, &ctx.inv_z);

  auto mults = gutkin_multiplicities(G, M);
  ctx.orlik_solomon_generators = true;
  for (std::size_t h = 0; h < mults.size(); ++h)
    if (mults[h] >= G.hyperplanes()[h].stabilizer_order) ctx.orlik_solomon_generators = false;

  if (r == 0) {
    ctx.module_has_no_invariants = true;
  } else {
    Matrix avg(r, r);
    for (std::size_t g = 0; g < G.order(); ++g) avg = avg + M.matrix(g);
    ctx.module_has_no_invariants = rank(avg) == 0;
  }
  return ctx;
}

GradedSubspace harmonics_poly(const ReflectionGroup& G, const BasicInvariantSet& duals_invariants,
                              unsigned d_max) {
  std::size_t n = G.dimension();
  GradedSubspace out(FormSpace{PolySide::coordinates, ExtSide::dual_module, n, 0});
  for (unsigned d = 0; d <= d_max; ++d) {
    auto basis = graded_monomials(n, d);
    // stack the maps d_{z_j} : S_d -> S_{d - deg z_j}
    std::vector<std::vector<Scalar>> rows;
    for (const auto& z : duals_invariants.polys) {
      unsigned dz = z.degree();
      if (dz > d) continue;
      auto target = graded_monomials(n, d - dz);
      std::vector<std::vector<Scalar>> block(target.size(),
                                             std::vector<Scalar>(basis.size()));
      for (std::size_t c = 0; c < basis.size(); ++c) {
        Polynomial img = apply_partial(
            z, Polynomial::monomial(PolySide::coordinates, basis[c], Scalar(1)));
        auto coords = img.coordinates(target);
        for (std::size_t t = 0; t < target.size(); ++t) block[t][c] = coords[t];
      }
      for (auto& row : block) rows.push_back(std::move(row));
    }
    Matrix m(rows.size(), basis.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) m.at(i, j) = rows[i][j];
    out.set_cell(d, 0, column_echelon(kernel_basis(std::move(m))));
  }
  return out;
}

std::vector<unsigned> coinvariant_ideal_poly_dims(const ReflectionGroup& G,
                                                  const BasicInvariantSet& coords_invariants,
                                                  unsigned d_max) {
  std::size_t n = G.dimension();
  std::vector<unsigned> dims(d_max + 1, 0);
  for (unsigned d = 0; d <= d_max; ++d) {
    auto basis = graded_monomials(n, d);
    SpanTracker span;
    for (std::size_t i = 0; i < coords_invariants.polys.size(); ++i) {
      unsigned df = coords_invariants.degrees[i];
      if (df > d) continue;
      for (const auto& mono : graded_monomials(n, d - df)) {
        Polynomial p = coords_invariants.polys[i] *
                       Polynomial::monomial(PolySide::coordinates, mono, Scalar(1));
        span.add(p.coordinates(basis));
      }
    }
    dims[d] = static_cast<unsigned>(span.dim());
  }
  return dims;
}

namespace {

std::vector<DifferentialForm> ideal_generators(const HarmonicContext& ctx, unsigned q_cap) {
  std::vector<DifferentialForm> gens;
  if (ctx.orlik_solomon_generators) {
    for (const auto& f : ctx.inv_x.polys)
      gens.push_back(DifferentialForm::from_polynomial(ctx.up, f));
    for (const auto& w : ctx.derivs_m_x.omegas) gens.push_back(w);
  } else {
    gens = invariant_generators(*ctx.G, *ctx.M, ctx.up, q_cap);
  }
  return gens;
}

Matrix ideal_cell_matrix(const HarmonicContext& ctx, const std::vector<DifferentialForm>& gens,
                         unsigned a, unsigned b) {
  auto cell = bidegree_basis(ctx.up, a, b);
  SpanTracker span;
  std::vector<std::vector<Scalar>> cols;
  for (const auto& g : gens) {
    unsigned ga = 0, gb = 0;
    if (!g.is_homogeneous(&ga, &gb)) throw Error("ideal generator is not bihomogeneous");
    if (ga > a || gb > b) continue;
    for (const auto& key : bidegree_basis(ctx.up, a - ga, b - gb)) {
      auto prod = wedge_mul(g, DifferentialForm::term(ctx.up, key.mono, key.wedge, Scalar(1)));
      if (prod.is_zero()) continue;
      auto coords = prod.coordinates(cell);
      if (span.add(coords)) cols.push_back(std::move(coords));
    }
  }
  return column_echelon(columns_to_matrix(cols, cell.size()));
}

}  // namespace

GradedSubspace coinvariant_ideal(const HarmonicContext& ctx, unsigned q_cap) {
  auto gens = ideal_generators(ctx, q_cap);
  GradedSubspace out(ctx.up);
  for (unsigned a = 0; a <= q_cap; ++a)
    for (unsigned b = 0; b <= ctx.up.r; ++b)
      out.set_cell(a, b, ideal_cell_matrix(ctx, gens, a, b));
  return out;
}

GradedSubspace harmonics_forms(const HarmonicContext& ctx, unsigned q_cap,
                               const GradedSubspace* ideal) {
  std::vector<Operator> ops;
  if (ctx.orlik_solomon_generators) {
    for (const auto& z : ctx.inv_z.polys) ops.push_back(Operator::partial(z));
    for (const auto& d : ctx.stars.delta_star) ops.push_back(d);
  } else {
    for (const auto& xi : invariant_generators(*ctx.G, *ctx.M, ctx.down, q_cap))
      ops.push_back(Operator::interior(xi));
  }
  GradedSubspace out(ctx.up);
  for (unsigned a = 0; a <= q_cap; ++a) {
    for (unsigned b = 0; b <= ctx.up.r; ++b) {
      auto cell = bidegree_basis(ctx.up, a, b);
      std::vector<DifferentialForm> basis;
      basis.reserve(cell.size());
      for (const auto& key : cell)
        basis.push_back(DifferentialForm::term(ctx.up, key.mono, key.wedge, Scalar(1)));
      for (const auto& op : ops) {
        basis = refine_kernel(basis, op);
        if (basis.empty()) break;
      }
      std::vector<std::vector<Scalar>> cols;
      cols.reserve(basis.size());
      for (const auto& f : basis) cols.push_back(f.coordinates(cell));
      Matrix cellbasis = column_echelon(columns_to_matrix(cols, cell.size()));
      if (ideal) {
        const Matrix* icell = ideal->cell(a, b);
        unsigned idim = icell ? static_cast<unsigned>(icell->cols()) : 0;
        if (cellbasis.cols() + idim != cell.size())
          throw Error("harmonic/ideal dimensions do not sum to the ambient cell");
        Matrix joint(cell.size(), cellbasis.cols() + idim);
        for (std::size_t c = 0; c < cellbasis.cols(); ++c)
          for (std::size_t r0 = 0; r0 < cell.size(); ++r0)
            joint.at(r0, c) = cellbasis.at(r0, c);
        for (std::size_t c = 0; c < idim; ++c)
          for (std::size_t r0 = 0; r0 < cell.size(); ++r0)
            joint.at(r0, cellbasis.cols() + c) = icell->at(r0, c);
        if (rank(joint) != cell.size())
          throw Error("harmonics and the coinvariant ideal do not form a direct sum");
      }
      out.set_cell(a, b, std::move(cellbasis));
    }
  }
  return out;
}

namespace {

std::optional<HypothesisFailure> check_divisibility(const HarmonicContext& ctx,
                                                    const Polynomial& delta_chi) {
  auto res = divide(delta_chi, ctx.j_mstar);
  if (res.divisible()) return std::nullopt;
  HypothesisFailure f;
  f.which = "J_{M*} divides Delta_chi";
  f.witness_remainder = res.remainder;
  return f;
}

}  // namespace

AlternantBasisResult alternant_harmonic_basis(const HarmonicContext& ctx,
                                              const LinearCharacter& chi) {
  AlternantBasisResult res;
  res.delta_chi = vandermondian(*ctx.G, chi, PolySide::coordinates);
  if (auto fail = check_divisibility(ctx, res.delta_chi)) {
    res.failure = std::move(fail);
    return res;
  }
  std::size_t r = ctx.up.r;
  unsigned deg_delta = res.delta_chi.degree();
  DifferentialForm delta_form = DifferentialForm::from_polynomial(ctx.up, res.delta_chi);
  res.subsets = colex_subsets(r);
  for (const auto& I : res.subsets)
    res.elements.push_back(apply_word(ctx.stars, I, delta_form));

  res.rank = global_rank(res.elements);
  if (res.rank != res.elements.size())
    throw RankDeficient("alternant elements have rank " + std::to_string(res.rank) + " < " +
                        std::to_string(res.elements.size()));

  // membership certificates: harmonic coefficients and chi-semi-invariance
  for (const auto& e : res.elements) {
    for (const auto& z : ctx.inv_z.polys)
      if (!apply(Operator::partial(z), e).is_zero())
        throw RankDeficient("alternant element is not polynomial-harmonic");
    for (std::size_t g = 0; g < ctx.G->order(); ++g)
      if (!(group_act(*ctx.G, g, e, ctx.M) == e.scaled(chi.value(g))))
        throw RankDeficient("alternant element is not chi-semi-invariant");
  }

  res.census = census_of(res.elements, deg_delta, static_cast<unsigned>(r));
  std::vector<int> drops;
  for (auto e : ctx.stars.exponents_mstar) drops.push_back(-static_cast<int>(e));
  res.predicted =
      BigradedSeries::product_formula(static_cast<int>(deg_delta), drops, {}, deg_delta);
  res.ok = res.census.agrees_with(res.predicted);
  if (!res.ok) throw RankDeficient("alternant census disagrees with the product formula");
  return res;
}

ModuleBasesResult semiinvariant_module_bases(const HarmonicContext& ctx,
                                             const LinearCharacter& chi, unsigned q_cap) {
  ModuleBasesResult res;
  Polynomial delta = vandermondian(*ctx.G, chi, PolySide::coordinates);
  if (auto fail = check_divisibility(ctx, delta)) {
    res.failure = std::move(fail);
    return res;
  }
  std::size_t r = ctx.up.r;
  unsigned deg_delta = delta.degree();
  std::vector<int> drops;
  for (auto e : ctx.stars.exponents_mstar) drops.push_back(-static_cast<int>(e));
  std::vector<int> dens(ctx.inv_x.degrees.begin(), ctx.inv_x.degrees.end());
  res.predicted = BigradedSeries::product_formula(static_cast<int>(deg_delta), drops, dens, q_cap);

  DifferentialForm delta_form = DifferentialForm::from_polynomial(ctx.up, delta);
  auto subsets = colex_subsets(r);
  std::map<std::pair<unsigned, unsigned>, SpanTracker> fam1, fam2;
  std::map<std::pair<unsigned, unsigned>, std::vector<FormKey>> cell_bases;
  auto cell_of = [&](unsigned a, unsigned b) -> const std::vector<FormKey>& {
    auto it = cell_bases.find({a, b});
    if (it == cell_bases.end())
      it = cell_bases.emplace(std::make_pair(a, b), bidegree_basis(ctx.up, a, b)).first;
    return it->second;
  };
  auto record = [&](std::map<std::pair<unsigned, unsigned>, SpanTracker>& fam,
                    const DifferentialForm& f) {
    if (f.is_zero()) return;
    unsigned a = 0, b = 0;
    if (!f.is_homogeneous(&a, &b)) throw RankMismatch("family element is not bihomogeneous");
    if (a > q_cap) return;
    fam[{a, b}].add(f.coordinates(cell_of(a, b)));
  };

  for (const auto& I : subsets) {
    DifferentialForm base = apply_word(ctx.stars, I, delta_form);
    unsigned drop = 0;
    for (auto i : I) drop += ctx.stars.exponents_mstar[i - 1];
    // polynomial budget for the invariant factor
    unsigned budget = q_cap + drop >= deg_delta ? q_cap + drop - deg_delta : 0;
    for (unsigned d = 0; d <= budget; ++d) {
      std::vector<Polynomial> products;
      std::function<void(std::size_t, unsigned, Polynomial)> rec =
          [&](std::size_t from, unsigned left, Polynomial acc) {
            if (left == 0) {
              products.push_back(std::move(acc));
              return;
            }
            for (std::size_t i = from; i < ctx.inv_x.polys.size(); ++i)
              if (ctx.inv_x.degrees[i] <= left)
                rec(i, left - ctx.inv_x.degrees[i], acc * ctx.inv_x.polys[i]);
          };
      rec(0, d, Polynomial::constant(PolySide::coordinates, ctx.up.n, Scalar(1)));
      for (const auto& p : products) {
        DifferentialForm pform = DifferentialForm::from_polynomial(ctx.up, p);
        record(fam1, wedge_mul(pform, base));
        record(fam2, apply_word(ctx.stars, I,
                                DifferentialForm::from_polynomial(ctx.up, p * delta)));
      }
    }
  }

  res.family_invariants_first = BigradedSeries(q_cap, static_cast<unsigned>(r));
  res.family_operators_first = BigradedSeries(q_cap, static_cast<unsigned>(r));
  for (auto& [key, tracker] : fam1)
    res.family_invariants_first.at(key.first, key.second) =
        static_cast<std::int64_t>(tracker.dim());
  for (auto& [key, tracker] : fam2)
    res.family_operators_first.at(key.first, key.second) =
        static_cast<std::int64_t>(tracker.dim());
  res.ok = res.family_invariants_first == res.predicted &&
           res.family_operators_first == res.predicted;
  if (!res.ok) throw RankMismatch("semi-invariant family ranks disagree with the product formula");
  return res;
}

CoinvariantBasisResult coinvariant_alternant_basis(const HarmonicContext& ctx,
                                                   const LinearCharacter& chi) {
  CoinvariantBasisResult res;
  res.delta_chi = vandermondian(*ctx.G, chi, PolySide::coordinates);
  if (auto fail = check_divisibility(ctx, res.delta_chi)) {
    res.failure = std::move(fail);
    return res;
  }
  if (!ctx.module_has_no_invariants) {
    HypothesisFailure f;
    f.which = "M^G = 0";
    Matrix avg(ctx.M->dim(), ctx.M->dim());
    for (std::size_t g = 0; g < ctx.G->order(); ++g) avg = avg + ctx.M->matrix(g);
    f.invariant_dimension = static_cast<int>(rank(avg));
    res.failure = std::move(f);
    return res;
  }

  std::size_t r = ctx.up.r;
  unsigned deg_delta = res.delta_chi.degree();
  DifferentialForm delta_form = DifferentialForm::from_polynomial(ctx.up, res.delta_chi);
  res.subsets = colex_subsets(r);
  for (const auto& I : res.subsets)
    res.elements.push_back(apply_word(ctx.stars, I, delta_form));

  res.rank = global_rank(res.elements);
  if (res.rank != res.elements.size())
    throw RankDeficient("coinvariant alternant elements are dependent");

  // full harmonicity: both the polynomial and the module-side operators vanish
  for (const auto& e : res.elements) {
    for (const auto& z : ctx.inv_z.polys)
      if (!apply(Operator::partial(z), e).is_zero())
        throw RankDeficient("element not annihilated by an invariant derivative");
    for (const auto& d : ctx.stars.delta_star)
      if (!apply(d, e).is_zero())
        throw RankDeficient("element not annihilated by a delta* operator");
  }

  res.census = census_of(res.elements, deg_delta, static_cast<unsigned>(r));
  std::vector<int> drops;
  for (auto e : ctx.stars.exponents_mstar) drops.push_back(-static_cast<int>(e));
  res.predicted =
      BigradedSeries::product_formula(static_cast<int>(deg_delta), drops, {}, deg_delta);
  if (!res.census.agrees_with(res.predicted))
    throw RankDeficient("coinvariant census disagrees with the product formula");

  // independence modulo the coinvariant ideal, cell by cell
  auto gens = ideal_generators(ctx, deg_delta);
  std::map<std::pair<unsigned, unsigned>, std::vector<const DifferentialForm*>> by_cell;
  for (const auto& e : res.elements) {
    unsigned a = 0, b = 0;
    e.is_homogeneous(&a, &b);
    by_cell[{a, b}].push_back(&e);
  }
  res.independent_modulo_ideal = true;
  for (const auto& [cell_key, elems] : by_cell) {
    auto cell = bidegree_basis(ctx.up, cell_key.first, cell_key.second);
    Matrix icell = ideal_cell_matrix(ctx, gens, cell_key.first, cell_key.second);
    SpanTracker span;
    for (std::size_t c = 0; c < icell.cols(); ++c) {
      std::vector<Scalar> v(cell.size());
      for (std::size_t r0 = 0; r0 < cell.size(); ++r0) v[r0] = icell.at(r0, c);
      span.add(std::move(v));
    }
    for (const auto* e : elems)
      if (!span.add(e->coordinates(cell))) {
        res.independent_modulo_ideal = false;
        throw RankDeficient("element lies in the coinvariant ideal at bidegree (" +
                            std::to_string(cell_key.first) + "," +
                            std::to_string(cell_key.second) + ")");
      }
  }
  res.ok = true;
  return res;
}

int chi_dimension_of_subspace(const ReflectionGroup& G, const GModuleRep* rep,
                              const FormSpace& space, const LinearCharacter& chi, unsigned a,
                              unsigned b, const Matrix& basis) {
  if (basis.cols() == 0) return 0;
  Matrix proj = isotypic_projector(G, rep, space, chi, a, b);
  return static_cast<int>(rank(proj * basis));
}

Table1Cell table1_series(const ReflectionGroup& G, PolySide poly_side, ExtSide ext_side,
                         Table1Character column, unsigned q_max) {
  std::size_t n = G.dimension();
  GModuleRep defining(n, G.elements());
  GModuleRep dual = defining.contragredient(G);
  auto degrees = group_degrees(G);
  auto exps = module_exponents(G, defining, PolySide::coordinates);
  auto coexps = module_exponents(G, dual, PolySide::coordinates);

  LinearCharacter chi = column == Table1Character::invariants ? LinearCharacter::trivial(G)
                        : column == Table1Character::det_v_star
                            ? LinearCharacter::det_v_dual(G)
                            : LinearCharacter::det_v(G);

  Table1Cell out;
  out.molien = molien_series(G, poly_side, &defining, ext_side, chi, q_max);

  // rows keyed by (poly, ext): closed forms in the exponents/coexponents
  int row = poly_side == PolySide::coordinates
                ? (ext_side == ExtSide::dual_module ? 1 : 4)
                : (ext_side == ExtSide::module ? 2 : 3);
  std::vector<int> dens(degrees.begin(), degrees.end());
  auto as_int = [](const std::vector<unsigned>& v) {
    return std::vector<int>(v.begin(), v.end());
  };
  int sum_e = 0, sum_estar = 0;
  for (auto e : exps) sum_e += e;
  for (auto e : coexps) sum_estar += e;
  auto neg = [](std::vector<int> v) {
    for (auto& x : v) x = -x;
    return v;
  };

  out.has_closed_form = true;
  switch (column) {
    case Table1Character::invariants:
      // rows 1, 2: prod (1 + q^{e_i} z); rows 3, 4: prod (1 + q^{e_i*} z)
      out.closed_form = BigradedSeries::product_formula(
          0, as_int(row <= 2 ? exps : coexps), dens, q_max);
      break;
    case Table1Character::det_v_star:
      if (row == 1)
        out.closed_form =
            BigradedSeries::product_formula(sum_estar, neg(as_int(coexps)), dens, q_max);
      else if (row == 2)
        out.closed_form =
            BigradedSeries::product_formula(sum_e, neg(as_int(coexps)), dens, q_max);
      else if (row == 3)
        out.closed_form = BigradedSeries::product_formula(sum_e, neg(as_int(exps)), dens, q_max);
      else
        out.has_closed_form = false;  // dashed cell
      break;
    case Table1Character::det_v:
      if (row == 1)
        out.closed_form =
            BigradedSeries::product_formula(sum_e, neg(as_int(coexps)), dens, q_max);
      else if (row == 2)
        out.closed_form =
            BigradedSeries::product_formula(sum_estar, neg(as_int(coexps)), dens, q_max);
      else if (row == 4)
        out.closed_form = BigradedSeries::product_formula(sum_e, neg(as_int(exps)), dens, q_max);
      else
        out.has_closed_form = false;  // dashed cell
      break;
  }
  out.match = !out.has_closed_form || out.closed_form.agrees_with(out.molien);
  return out;
}

WedgeMultiplicityResult wedge_multiplicity_series(const HarmonicContext& ctx, unsigned q_max) {
  WedgeMultiplicityResult res;
  if (!ctx.orlik_solomon_generators) {
    HypothesisFailure f;
    f.which = "J_M ~ Delta_M (Gutkin condition)";
    res.failure = std::move(f);
    return res;
  }
  std::size_t r = ctx.up.r;
  auto exps = module_exponents(*ctx.G, *ctx.M, PolySide::coordinates);
  // sigma_k(q^{e_1}, ..., q^{e_r})
  res.per_k.assign(r + 1, QSeries(q_max + 1, 0));
  res.per_k[0][0] = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = std::min(r, i + 1); k >= 1; --k) {
      for (unsigned a = 0; a + exps[i] <= q_max; ++a)
        res.per_k[k][a + exps[i]] += res.per_k[k - 1][a];
      if (k == 1) break;
    }
  }
  // oracle: invariants of H(V*)_a (x) /\^k M*
  unsigned top = static_cast<unsigned>(ctx.G->reflections().size());
  auto harm = harmonics_poly(*ctx.G, ctx.inv_z, std::min(q_max, top));
  auto triv = LinearCharacter::trivial(*ctx.G);
  for (unsigned k = 0; k <= r; ++k) {
    std::size_t wedge_count = subsets_of_size(r, k).size();
    for (unsigned a = 0; a <= q_max; ++a) {
      std::int64_t expected = res.per_k[k][a];
      std::int64_t got = 0;
      if (a <= top) {
        const Matrix* h = harm.cell(a, 0);
        if (h && h->cols() > 0 && wedge_count > 0) {
          // basis of H_a (x) /\^k M*: Kronecker with the identity on wedges
          Matrix big(h->rows() * wedge_count, h->cols() * wedge_count);
          for (std::size_t i = 0; i < h->rows(); ++i)
            for (std::size_t j = 0; j < h->cols(); ++j) {
              if (h->at(i, j).is_zero()) continue;
              for (std::size_t w = 0; w < wedge_count; ++w)
                big.at(i * wedge_count + w, j * wedge_count + w) = h->at(i, j);
            }
          got = chi_dimension_of_subspace(*ctx.G, ctx.M, ctx.up, triv, a, k, big);
        }
      }
      if (expected != got) {
        res.ok = false;
        HypothesisFailure f;
        f.which = "wedge multiplicity mismatch at (a,k)=(" + std::to_string(a) + "," +
                  std::to_string(k) + ")";
        res.failure = std::move(f);
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

}  // namespace semiharm
