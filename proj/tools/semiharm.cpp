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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "semiharm/config.hpp"
#include "semiharm/harmonic.hpp"
#include "semiharm/io.hpp"
#include "semiharm/sampling.hpp"

using namespace semiharm;

namespace {

struct Options {
  std::string group_spec;
  std::string module_spec = "defining";
  std::string character_spec = "trivial";
  unsigned qmax = 12;
  unsigned zmax = 8;
  std::size_t order_cap = 0;
  unsigned conductor_cap = 60;
  std::string format = "text";
  unsigned seed = 2026;
  std::string out_path;
  std::string json_path;
  // subcommand-specific
  std::string what = "alternant";
  std::string space = "coinv-semiinv";
  std::string suite = "all";
};

// exit codes: 0 pass, 1 error, 2 usage, 3 hypothesis failure, 4 theorem contradiction
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitContradiction = 4;

class HypothesisExit : public std::runtime_error {
 public:
  explicit HypothesisExit(nlohmann::json report)
      : std::runtime_error("hypothesis failure"), report_(std::move(report)) {}
  const nlohmann::json& report() const { return report_; }

 private:
  nlohmann::json report_;
};

struct Session {
  Options opt;
  std::optional<ReflectionGroup> group;
  std::optional<GModuleRep> module;
  std::optional<HarmonicContext> ctx;

  const ReflectionGroup& G() {
    if (!group) group = resolve_group(opt.group_spec, opt.order_cap);
    return *group;
  }
  const GModuleRep& M() {
    if (!module) module = builtin_module(G(), opt.module_spec);
    return *module;
  }
  LinearCharacter character() {
    const std::string& s = opt.character_spec;
    if (s == "trivial") return LinearCharacter::trivial(G());
    if (s == "sign" || s == "det_v") return LinearCharacter::det_v(G());
    if (s == "det_vdual") return LinearCharacter::det_v_dual(G());
    if (s == "det_m") return LinearCharacter::determinant(G(), M());
    if (s == "det_mdual")
      return LinearCharacter::determinant(G(), M()).inverse_character();
    throw UnknownSpec("character spec '" + s + "'");
  }
  const HarmonicContext& harmonic_ctx() {
    if (!ctx) ctx = make_harmonic_context(G(), M());
    return *ctx;
  }
};

nlohmann::json hypothesis_json(const HypothesisFailure& f) {
  nlohmann::json j;
  j["which"] = f.which;
  if (!f.witness_remainder.is_zero())
    j["witness_remainder"] = polynomial_to_json(f.witness_remainder);
  if (f.invariant_dimension >= 0) j["invariant_dimension"] = f.invariant_dimension;
  return j;
}

nlohmann::json series_json(const BigradedSeries& s, unsigned z_cap) {
  nlohmann::json cells = nlohmann::json::array();
  for (unsigned a = 0; a <= s.q_max(); ++a)
    for (unsigned b = 0; b <= std::min(s.z_max(), z_cap); ++b)
      if (s.at(a, b) != 0) cells.push_back({{"q", a}, {"z", b}, {"dim", s.at(a, b)}});
  return cells;
}

void emit(const Options& opt, const nlohmann::json& payload, const std::string& text) {
  std::string body = opt.format == "json" ? payload.dump(2) : text;
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    out << body << "\n";
  }
  if (!opt.json_path.empty()) {
    std::ofstream out(opt.json_path);
    out << payload.dump(2) << "\n";
  }
  std::cout << body << "\n";
}

std::string bracket_list(const std::vector<unsigned>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

int cmd_group(Session& s) {
  const auto& G = s.G();
  auto degrees = group_degrees(G);
  nlohmann::json j;
  j["schema"] = 1;
  j["group"] = s.opt.group_spec;
  j["order"] = G.order();
  j["dimension"] = G.dimension();
  j["field_conductor"] = G.field().conductor;
  j["reflections"] = G.reflections().size();
  j["degrees"] = degrees;
  nlohmann::json hyp = nlohmann::json::array();
  for (const auto& h : G.hyperplanes())
    hyp.push_back({{"alpha", h.alpha.to_string()}, {"stabilizer_order", h.stabilizer_order}});
  j["hyperplanes"] = std::move(hyp);
  std::string text = "group " + s.opt.group_spec + ": order " + std::to_string(G.order()) +
                     ", " + std::to_string(G.reflections().size()) + " reflections, " +
                     std::to_string(G.hyperplanes().size()) + " hyperplanes, degrees " +
                     bracket_list(degrees);
  for (const auto& h : G.hyperplanes())
    text += "\n  alpha = " + h.alpha.to_string() + "   |G_H| = " +
            std::to_string(h.stabilizer_order);
  emit(s.opt, j, text);
  return kExitOk;
}

int cmd_degrees(Session& s) {
  auto degrees = group_degrees(s.G());
  unsigned long long prod = 1, refl = 0;
  for (auto d : degrees) {
    prod *= d;
    refl += d - 1;
  }
  nlohmann::json j{{"schema", 1},
                   {"group", s.opt.group_spec},
                   {"degrees", degrees},
                   {"certificates",
                    {{"degree_product_is_order", prod == s.G().order()},
                     {"exponent_sum_is_reflection_count", refl == s.G().reflections().size()}}}};
  emit(s.opt, j, bracket_list(degrees));
  return kExitOk;
}

int cmd_exponents(Session& s) {
  auto exps = module_exponents(s.G(), s.M(), PolySide::coordinates);
  nlohmann::json j{{"schema", 1},
                   {"group", s.opt.group_spec},
                   {"module", s.opt.module_spec},
                   {"exponents", exps},
                   {"certificates", {{"count_is_module_dimension", exps.size() == s.M().dim()}}}};
  emit(s.opt, j, bracket_list(exps));
  return kExitOk;
}

int cmd_jacobian(Session& s) {
  auto ds = basic_derivations(s.G(), s.M(), PolySide::coordinates);
  Polynomial j_m = jacobian(ds);
  Polynomial gut = gutkin_product(s.G(), s.M());
  bool matches = proportional(j_m, gut);
  nlohmann::json j;
  j["schema"] = 1;
  j["group"] = s.opt.group_spec;
  j["module"] = s.opt.module_spec;
  j["jacobian"] = polynomial_to_json(j_m);
  j["certificates"] = {{"degree", j_m.degree()},
                       {"exponents", ds.exponents},
                       {"matches_gutkin_product", matches}};
  emit(s.opt, j,
       "J_M = " + j_m.to_string() + "\nexponents " + bracket_list(ds.exponents) +
           (matches ? "\nmatches the hyperplane product" : "\nHYPERPLANE PRODUCT MISMATCH"));
  return matches ? kExitOk : kExitContradiction;
}

int cmd_vandermondian(Session& s) {
  auto chi = s.character();
  Polynomial delta = vandermondian(s.G(), chi, PolySide::coordinates);
  bool semi = true;
  for (std::size_t g = 0; g < s.G().order(); ++g)
    if (!(group_act(s.G(), g, delta) == delta.scaled(chi.value(g)))) semi = false;
  nlohmann::json j;
  j["schema"] = 1;
  j["group"] = s.opt.group_spec;
  j["character"] = s.opt.character_spec;
  j["vandermondian"] = polynomial_to_json(delta);
  j["certificates"] = {{"degree", delta.degree()}, {"semi_invariant", semi}};
  emit(s.opt, j, "Delta_chi = " + delta.to_string());
  return semi ? kExitOk : kExitContradiction;
}

int cmd_gutkin(Session& s) {
  auto mults = gutkin_multiplicities(s.G(), s.M());
  Polynomial gut = gutkin_product(s.G(), s.M());
  auto report = check_gutkin_corollary(s.G(), s.M());
  nlohmann::json j;
  j["schema"] = 1;
  j["group"] = s.opt.group_spec;
  j["module"] = s.opt.module_spec;
  j["product"] = polynomial_to_json(gut);
  j["multiplicities"] = mults;
  j["corollary"] = {{"a", report.item_a},
                    {"b", report.item_b},
                    {"c", report.item_c},
                    {"d", report.item_d},
                    {"f", report.item_f},
                    {"jacobian_matches_vandermondian", report.jm_matches_dm},
                    {"mh_condition", report.mh_condition}};
  std::string text = "gutkin product = " + gut.to_string() + "\nm_H = " + bracket_list(mults) +
                     "\ncorollary items a,b,c,d,f: " + (report.item_a ? "T" : "F") +
                     (report.item_b ? "T" : "F") + (report.item_c ? "T" : "F") +
                     (report.item_d ? "T" : "F") + (report.item_f ? "T" : "F");
  emit(s.opt, j, text);
  return report.all_applicable() ? kExitOk : kExitContradiction;
}

int cmd_basis(Session& s) {
  const auto& ctx = s.harmonic_ctx();
  auto chi = s.character();
  nlohmann::json j;
  j["schema"] = 1;
  j["group"] = s.opt.group_spec;
  j["module"] = s.opt.module_spec;
  j["character"] = s.opt.character_spec;
  j["what"] = s.opt.what;

  std::vector<DifferentialForm> elements;
  std::vector<Wedge> subsets;
  BigradedSeries census;
  if (s.opt.what == "alternant") {
    auto res = alternant_harmonic_basis(ctx, chi);
    if (res.failure) {
      j["hypothesis_failed"] = hypothesis_json(*res.failure);
      throw HypothesisExit(std::move(j));
    }
    elements = std::move(res.elements);
    subsets = std::move(res.subsets);
    census = res.census;
    j["certificates"] = {{"rank", res.rank}, {"census_matches_product", res.ok}};
  } else if (s.opt.what == "coinvariant") {
    auto res = coinvariant_alternant_basis(ctx, chi);
    if (res.failure) {
      j["hypothesis_failed"] = hypothesis_json(*res.failure);
      throw HypothesisExit(std::move(j));
    }
    elements = std::move(res.elements);
    subsets = std::move(res.subsets);
    census = res.census;
    j["certificates"] = {{"rank", res.rank},
                         {"independent_modulo_ideal", res.independent_modulo_ideal}};
  } else {
    throw UnknownSpec("basis --what must be alternant or coinvariant");
  }

  nlohmann::json elems = nlohmann::json::array();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    nlohmann::json e;
    e["subset"] = std::vector<int>(subsets[i].begin(), subsets[i].end());
    e["form"] = form_to_json(elements[i]);
    elems.push_back(std::move(e));
  }
  j["elements"] = std::move(elems);
  j["census"] = series_json(census, s.opt.zmax);

  std::string text = s.opt.what + " basis: " + std::to_string(elements.size()) + " elements";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    text += "\n  d_I*, I = {";
    for (std::size_t k = 0; k < subsets[i].size(); ++k)
      text += (k ? "," : "") + std::to_string(subsets[i][k]);
    text += "}: " + elements[i].to_string();
  }
  emit(s.opt, j, text);
  return kExitOk;
}

std::string factored_coinv_series(const std::vector<unsigned>& exps, unsigned deg_delta) {
  unsigned sum = 0;
  for (auto e : exps) sum += e;
  std::string text;
  if (sum == deg_delta) {
    for (auto e : exps)
      text += "(q" + (e == 1 ? std::string() : "^" + std::to_string(e)) + " + z)";
    if (exps.empty()) text = "q^" + std::to_string(deg_delta);
  } else {
    text = "q^" + std::to_string(deg_delta);
    for (auto e : exps) text += "(1 + z*q^-" + std::to_string(e) + ")";
  }
  return text;
}

int cmd_hilbert(Session& s) {
  nlohmann::json j;
  j["schema"] = 1;
  j["group"] = s.opt.group_spec;
  j["module"] = s.opt.module_spec;
  j["character"] = s.opt.character_spec;
  j["space"] = s.opt.space;

  if (s.opt.space == "inv") {
    auto series = molien_series(s.G(), PolySide::coordinates, &s.M(), ExtSide::dual_module,
                                LinearCharacter::trivial(s.G()), s.opt.qmax);
    j["series"] = series_json(series, s.opt.zmax);
    emit(s.opt, j, series.to_string());
    return kExitOk;
  }
  if (s.opt.space == "semiinv") {
    auto chi = s.character();
    auto series = molien_series(s.G(), PolySide::coordinates, &s.M(), ExtSide::dual_module, chi,
                                s.opt.qmax);
    j["series"] = series_json(series, s.opt.zmax);
    const auto& ctx = s.harmonic_ctx();
    Polynomial delta = vandermondian(s.G(), chi, PolySide::coordinates);
    bool applicable = divide(delta, ctx.j_mstar).divisible();
    j["product_formula_applicable"] = applicable;
    std::string text = series.to_string();
    if (applicable) {
      std::vector<int> drops;
      for (auto e : ctx.stars.exponents_mstar) drops.push_back(-static_cast<int>(e));
      std::vector<int> dens(ctx.inv_x.degrees.begin(), ctx.inv_x.degrees.end());
      auto predicted = BigradedSeries::product_formula(static_cast<int>(delta.degree()), drops,
                                                       dens, s.opt.qmax);
      bool match = predicted.agrees_with(series);
      j["product_matches_molien"] = match;
      text += match ? "\nproduct formula confirmed" : "\nPRODUCT FORMULA MISMATCH";
      if (!match) {
        emit(s.opt, j, text);
        return kExitContradiction;
      }
    }
    emit(s.opt, j, text);
    return kExitOk;
  }
  if (s.opt.space == "coinv-semiinv") {
    const auto& ctx = s.harmonic_ctx();
    auto res = coinvariant_alternant_basis(ctx, s.character());
    if (res.failure) {
      j["hypothesis_failed"] = hypothesis_json(*res.failure);
      throw HypothesisExit(std::move(j));
    }
    j["series"] = series_json(res.census, s.opt.zmax);
    std::string fact =
        factored_coinv_series(ctx.stars.exponents_mstar, res.delta_chi.degree());
    j["factored"] = fact;
    emit(s.opt, j, fact + "\nexpanded: " + res.census.to_string());
    return kExitOk;
  }
  if (s.opt.space.rfind("table1:", 0) == 0) {
    std::string cell = s.opt.space.substr(7);
    auto comma = cell.find(',');
    if (comma == std::string::npos) throw UnknownSpec("table1 cell must be row,column");
    int row = std::stoi(cell.substr(0, comma));
    std::string col = cell.substr(comma + 1);
    PolySide poly = (row == 1 || row == 4) ? PolySide::coordinates : PolySide::duals;
    ExtSide ext = (row == 1 || row == 3) ? ExtSide::dual_module : ExtSide::module;
    Table1Character column = col == "inv"        ? Table1Character::invariants
                             : col == "detvstar" ? Table1Character::det_v_star
                             : col == "detv"
                                 ? Table1Character::det_v
                                 : throw UnknownSpec("table1 column must be inv|detvstar|detv");
    auto out = table1_series(s.G(), poly, ext, column, s.opt.qmax);
    j["has_closed_form"] = out.has_closed_form;
    j["molien"] = series_json(out.molien, s.opt.zmax);
    if (out.has_closed_form) {
      j["closed_form"] = series_json(out.closed_form, s.opt.zmax);
      j["match"] = out.match;
    }
    std::string text = out.molien.to_string();
    if (out.has_closed_form)
      text += out.match ? "\nproduct formula confirmed" : "\nPRODUCT FORMULA MISMATCH";
    emit(s.opt, j, text);
    return out.match ? kExitOk : kExitContradiction;
  }
  throw UnknownSpec("hilbert --space '" + s.opt.space + "'");
}

struct CheckList {
  nlohmann::json checks = nlohmann::json::array();
  bool all_pass = true;
  void add(const std::string& name, bool pass) {
    checks.push_back({{"name", name}, {"pass", pass}});
    if (!pass) all_pass = false;
  }
};

void verify_weyl(Session& s, CheckList& list) {
  const auto& G = s.G();
  const auto& M = s.M();
  std::size_t n = G.dimension(), r = M.dim();
  auto rep = super_weyl_check(n, std::max<std::size_t>(r, 1), 100, s.opt.seed);
  list.add("super_weyl_relations", rep.passed);

  Sampler sampler(s.opt.seed + 1);
  FormSpace up{PolySide::coordinates, ExtSide::dual_module, n, r};
  FormSpace down{PolySide::duals, ExtSide::module, n, r};
  bool adjoint = true, invariant = true, tau_ok = true, d2 = true;
  auto h = hermitian_form(G, &M);
  FormSpace vspace{PolySide::coordinates, ExtSide::dual_module, n, n};
  auto d = Operator::exterior_derivative(n);
  for (unsigned t = 0; t < 100; ++t) {
    auto eta = sampler.form(up, 3, 3, G.field());
    auto omega = sampler.form(down, 3, 3, G.field());
    auto xi = sampler.form(down, 2, 2, G.field());
    if (!(pair_forms(apply(Operator::interior(xi), eta), omega) ==
          pair_forms(eta, wedge_mul(xi, omega))))
      adjoint = false;
    std::size_t g = static_cast<std::size_t>(
        sampler.integer(0, static_cast<long>(G.order()) - 1));
    if (!(pair_forms(group_act(G, g, eta, &M), group_act(G, g, omega, &M)) ==
          pair_forms(eta, omega)))
      invariant = false;
    if (!(pair_forms(eta, omega) == herm_inner(eta, tau_map(omega, h), h))) tau_ok = false;
    auto w = sampler.form(vspace, 3, 3, G.field());
    if (!apply(d, apply(d, w)).is_zero()) d2 = false;
  }
  list.add("pairing_adjointness", adjoint);
  list.add("pairing_g_invariance", invariant);
  list.add("tau_defining_identity", tau_ok);
  list.add("exterior_derivative_squares_to_zero", d2);
}

void verify_gutkin(Session& s, CheckList& list) {
  auto ds = basic_derivations(s.G(), s.M(), PolySide::coordinates);
  list.add("jacobian_matches_gutkin_product",
           proportional(jacobian(ds), gutkin_product(s.G(), s.M())));
  auto rep = check_gutkin_corollary(s.G(), s.M());
  list.add("corollary_a", rep.item_a);
  list.add("corollary_b", rep.item_b);
  list.add("corollary_c", rep.item_c);
  list.add("corollary_d", rep.item_d);
  list.add("corollary_f", rep.item_f);
}

void verify_thm41(Session& s, CheckList& list) {
  const auto& ctx = s.harmonic_ctx();
  auto chi = s.character();
  auto res = alternant_harmonic_basis(ctx, chi);
  if (res.failure) {
    nlohmann::json j{{"schema", 1}, {"hypothesis_failed", hypothesis_json(*res.failure)}};
    throw HypothesisExit(std::move(j));
  }
  list.add("alternant_rank", res.rank == res.elements.size());
  list.add("alternant_census_product", res.ok);
  // bidegree census against the projector oracle on the harmonic subspace
  unsigned deg = res.delta_chi.degree();
  auto harm = harmonics_poly(s.G(), ctx.inv_z, deg);
  bool oracle_ok = true;
  for (unsigned a = 0; a <= deg; ++a)
    for (unsigned b = 0; b <= ctx.up.r; ++b) {
      std::size_t wc = subsets_of_size(ctx.up.r, b).size();
      const Matrix* hcell = harm.cell(a, 0);
      int dim = 0;
      if (hcell && wc > 0 && hcell->cols() > 0) {
        Matrix big(hcell->rows() * wc, hcell->cols() * wc);
        for (std::size_t i = 0; i < hcell->rows(); ++i)
          for (std::size_t jj = 0; jj < hcell->cols(); ++jj) {
            if (hcell->at(i, jj).is_zero()) continue;
            for (std::size_t w = 0; w < wc; ++w)
              big.at(i * wc + w, jj * wc + w) = hcell->at(i, jj);
          }
        dim = chi_dimension_of_subspace(s.G(), &s.M(), ctx.up, chi, a, b, big);
      }
      if (res.census.at(a, b) != dim) oracle_ok = false;
    }
  list.add("alternant_census_projector_oracle", oracle_ok);
}

void verify_thm44(Session& s, CheckList& list) {
  const auto& ctx = s.harmonic_ctx();
  auto chi = s.character();
  auto res = semiinvariant_module_bases(ctx, chi, s.opt.qmax);
  if (res.failure) {
    nlohmann::json j{{"schema", 1}, {"hypothesis_failed", hypothesis_json(*res.failure)}};
    throw HypothesisExit(std::move(j));
  }
  list.add("module_bases_ranks", res.ok);
  auto molien = molien_series(s.G(), PolySide::coordinates, &s.M(), ExtSide::dual_module, chi,
                              s.opt.qmax);
  list.add("module_bases_molien_agreement", res.predicted.agrees_with(molien));
}

void verify_thm55(Session& s, CheckList& list) {
  const auto& ctx = s.harmonic_ctx();
  auto chi = s.character();
  auto res = coinvariant_alternant_basis(ctx, chi);
  if (res.failure) {
    nlohmann::json j{{"schema", 1}, {"hypothesis_failed", hypothesis_json(*res.failure)}};
    throw HypothesisExit(std::move(j));
  }
  list.add("coinvariant_rank", res.rank == res.elements.size());
  list.add("coinvariant_independent_modulo_ideal", res.independent_modulo_ideal);
  list.add("coinvariant_census_product", res.census.agrees_with(res.predicted));

  // bidegreewise equality of the two harmonic spaces in the chi component
  unsigned deg = res.delta_chi.degree();
  auto harm_forms = harmonics_forms(ctx, deg + 2);
  auto harm_poly = harmonics_poly(s.G(), ctx.inv_z, deg + 2);
  bool eq = true;
  for (unsigned a = 0; a <= deg + 2; ++a)
    for (unsigned b = 0; b <= ctx.up.r; ++b) {
      std::size_t wc = subsets_of_size(ctx.up.r, b).size();
      const Matrix* hp = harm_poly.cell(a, 0);
      int lhs = 0;
      if (hp && wc > 0 && hp->cols() > 0) {
        Matrix big(hp->rows() * wc, hp->cols() * wc);
        for (std::size_t i = 0; i < hp->rows(); ++i)
          for (std::size_t jj = 0; jj < hp->cols(); ++jj) {
            if (hp->at(i, jj).is_zero()) continue;
            for (std::size_t w = 0; w < wc; ++w)
              big.at(i * wc + w, jj * wc + w) = hp->at(i, jj);
          }
        lhs = chi_dimension_of_subspace(s.G(), &s.M(), ctx.up, chi, a, b, big);
      }
      const Matrix* hf = harm_forms.cell(a, b);
      int rhs = hf && hf->cols() > 0
                    ? chi_dimension_of_subspace(s.G(), &s.M(), ctx.up, chi, a, b, *hf)
                    : 0;
      if (lhs != rhs) eq = false;
    }
  list.add("harmonic_spaces_equal_in_chi_component", eq);
}

void verify_table1(Session& s, CheckList& list) {
  for (int row = 1; row <= 4; ++row) {
    PolySide poly = (row == 1 || row == 4) ? PolySide::coordinates : PolySide::duals;
    ExtSide ext = (row == 1 || row == 3) ? ExtSide::dual_module : ExtSide::module;
    for (auto col :
         {Table1Character::invariants, Table1Character::det_v_star, Table1Character::det_v}) {
      auto cell = table1_series(s.G(), poly, ext, col, s.opt.qmax);
      std::string name = "table1_row" + std::to_string(row) + "_col" +
                         (col == Table1Character::invariants    ? std::string("inv")
                          : col == Table1Character::det_v_star ? std::string("detvstar")
                                                               : std::string("detv"));
      list.add(name, cell.match);
    }
  }
}

int cmd_verify(Session& s) {
  CheckList list;
  const std::string& suite = s.opt.suite;
  bool all = suite == "all";
  if (all || suite == "weyl") verify_weyl(s, list);
  if (all || suite == "gutkin") verify_gutkin(s, list);
  if (all || suite == "steinberg") list.add("steinberg", steinberg_check(s.G(), s.opt.qmax));
  if (all || suite == "thm41") verify_thm41(s, list);
  if (all || suite == "thm44") verify_thm44(s, list);
  if (all || suite == "thm55") verify_thm55(s, list);
  if (all || suite == "table1") verify_table1(s, list);
  if (list.checks.empty()) throw UnknownSpec("verify --suite '" + suite + "'");

  nlohmann::json j;
  j["schema"] = 1;
  j["group"] = s.opt.group_spec;
  j["module"] = s.opt.module_spec;
  j["character"] = s.opt.character_spec;
  j["suite"] = suite;
  j["checks"] = list.checks;
  j["pass"] = list.all_pass;
  std::string text;
  for (const auto& c : j["checks"])
    text += (c["pass"].get<bool>() ? "PASS " : "FAIL ") + c["name"].get<std::string>() + "\n";
  text += list.all_pass ? "all checks passed" : "SOME CHECKS FAILED";
  emit(s.opt, j, text);
  return list.all_pass ? kExitOk : kExitContradiction;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant-theory toolkit for pseudo-reflection groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config");

  Options opt;
  app.add_option("--group", opt.group_spec,
                 "group spec: symmetric:n | hyperoctahedral:n | demihyperoctahedral:n | "
                 "dihedral:m | cyclic:m | gmpn:m,p,n | file:<path>");
  app.add_option("--module", opt.module_spec,
                 "module spec: defining | dual | det | detdual | standard | exterior:k | "
                 "quotient-standard | file:<path>");
  app.add_option("--character", opt.character_spec,
                 "character: trivial | sign | det_v | det_vdual | det_m | det_mdual");
  app.add_option("--qmax", opt.qmax, "polynomial-degree cap for series");
  app.add_option("--zmax", opt.zmax, "exterior-degree cap for series");
  app.add_option("--order-cap", opt.order_cap, "group order cap (0 = default 10000)");
  app.add_option("--conductor-cap", opt.conductor_cap, "largest cyclotomic conductor");
  app.add_option("--format", opt.format, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed for sampled property checks");
  app.add_option("--out", opt.out_path, "also write the output to this file");
  app.add_option("--json", opt.json_path, "also write the JSON report to this file");

  auto* c_group = app.add_subcommand("group", "closure summary: order, reflections, hyperplanes");
  auto* c_degrees = app.add_subcommand("degrees", "degrees d_1 <= ... <= d_n");
  auto* c_exponents = app.add_subcommand("exponents", "module exponents over S(V*)");
  auto* c_jacobian = app.add_subcommand("jacobian", "Jacobian of the module");
  auto* c_vander = app.add_subcommand("vandermondian", "minimal chi-semi-invariant");
  auto* c_gutkin = app.add_subcommand("gutkin", "hyperplane product and corollary checks");
  auto* c_basis = app.add_subcommand("basis", "explicit semi-invariant bases");
  c_basis->add_option("--what", opt.what, "alternant | coinvariant");
  auto* c_hilbert = app.add_subcommand("hilbert", "bigraded Hilbert series");
  c_hilbert->add_option("--space", opt.space,
                        "inv | semiinv | coinv-semiinv | table1:<row>,<col>");
  auto* c_verify = app.add_subcommand("verify", "verification suites");
  c_verify->add_option("--suite", opt.suite,
                       "weyl | gutkin | steinberg | thm41 | thm44 | thm55 | table1 | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  config::group_order_cap() = opt.order_cap == 0 ? 10000 : opt.order_cap;
  config::max_conductor() = opt.conductor_cap;

  Session session;
  session.opt = opt;
  try {
    if (session.opt.group_spec.empty()) {
      std::cerr << "error: --group is required\n";
      return kExitUsage;
    }
    if (c_group->parsed()) return cmd_group(session);
    if (c_degrees->parsed()) return cmd_degrees(session);
    if (c_exponents->parsed()) return cmd_exponents(session);
    if (c_jacobian->parsed()) return cmd_jacobian(session);
    if (c_vander->parsed()) return cmd_vandermondian(session);
    if (c_gutkin->parsed()) return cmd_gutkin(session);
    if (c_basis->parsed()) return cmd_basis(session);
    if (c_hilbert->parsed()) return cmd_hilbert(session);
    if (c_verify->parsed()) return cmd_verify(session);
    return kExitUsage;
  } catch (const HypothesisExit& e) {
    nlohmann::json j = e.report();
    j["schema"] = 1;
    std::cout << j.dump(2) << "\n";
    return kExitHypothesis;
  } catch (const UnknownSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SpecNotApplicable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RankDeficient& e) {
    std::cerr << "theorem contradiction: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const RankMismatch& e) {
    std::cerr << "theorem contradiction: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const CommutatorNotScalarDifferential& e) {
    std::cerr << "theorem contradiction: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const ZeroDeterminant& e) {
    std::cerr << "theorem contradiction: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const FreenessCertificateFailure& e) {
    std::cerr << "theorem contradiction: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const NotUniqueInMinDegree& e) {
    std::cerr << "theorem contradiction: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
