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

#include "semiharm/forms.hpp"

#include <algorithm>
#include <sstream>

#include "semiharm/errors.hpp"

namespace semiharm {

bool wedge_merge(const Wedge& a, const Wedge& b, Wedge& merged, int& sign) {
  merged.clear();
  merged.reserve(a.size() + b.size());
  // count inversions between a-elements and b-elements while merging
  std::size_t i = 0, j = 0;
  int inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      merged.push_back(a[i++]);
    } else {
      inversions += static_cast<int>(a.size() - i);
      merged.push_back(b[j++]);
    }
  }
  while (i < a.size()) merged.push_back(a[i++]);
  while (j < b.size()) merged.push_back(b[j++]);
  sign = (inversions % 2 == 0) ? 1 : -1;
  return true;
}

std::vector<Wedge> subsets_of_size(std::size_t r, unsigned b) {
  std::vector<Wedge> out;
  if (b > r) return out;
  Wedge cur;
  // lexicographic enumeration of increasing b-subsets of {1..r}
  std::vector<std::uint8_t> idx(b);
  for (unsigned i = 0; i < b; ++i) idx[i] = static_cast<std::uint8_t>(i + 1);
  while (true) {
    out.emplace_back(idx.begin(), idx.end());
    if (b == 0) break;
    int pos = static_cast<int>(b) - 1;
    while (pos >= 0 && idx[pos] == r - (b - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned k = pos + 1; k < b; ++k) idx[k] = idx[k - 1] + 1;
  }
  return out;
}

std::vector<FormKey> bidegree_basis(const FormSpace& space, unsigned a, unsigned b) {
  std::vector<FormKey> out;
  if (b > space.r) return out;
  auto monos = graded_monomials(space.n, a);
  auto wedges = subsets_of_size(space.r, b);
  out.reserve(monos.size() * wedges.size());
  for (const auto& m : monos)
    for (const auto& w : wedges) out.push_back(FormKey{m, w});
  return out;
}

DifferentialForm DifferentialForm::one(FormSpace space) {
  DifferentialForm f(space);
  Monomial m;
  m.exp.assign(space.n, 0);
  f.terms_.emplace(FormKey{std::move(m), {}}, Scalar(1));
  return f;
}

DifferentialForm DifferentialForm::from_polynomial(FormSpace space, const Polynomial& p) {
  if (p.nvars() != space.n || p.side() != space.poly_side)
    throw SpaceMismatch("polynomial does not match form space");
  DifferentialForm f(space);
  for (const auto& [m, c] : p.terms()) f.terms_.emplace(FormKey{m, {}}, c);
  return f;
}

DifferentialForm DifferentialForm::generator(FormSpace space, std::size_t index_1based) {
  if (index_1based < 1 || index_1based > space.r)
    throw DimensionMismatch("exterior generator index out of range");
  DifferentialForm f(space);
  Monomial m;
  m.exp.assign(space.n, 0);
  f.terms_.emplace(FormKey{std::move(m), Wedge{static_cast<std::uint8_t>(index_1based)}},
                   Scalar(1));
  return f;
}

DifferentialForm DifferentialForm::term(FormSpace space, Monomial m, Wedge w, const Scalar& c) {
  DifferentialForm f(space);
  f.add_term(FormKey{std::move(m), std::move(w)}, c);
  return f;
}

Scalar DifferentialForm::coefficient(const FormKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void DifferentialForm::add_term(const FormKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm f(space_);
  for (const auto& [k, c] : terms_) f.terms_.emplace(k, -c);
  return f;
}

DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b) {
  if (!(a.space_ == b.space_)) throw SpaceMismatch("form sum");
  DifferentialForm f = a;
  for (const auto& [k, c] : b.terms_) f.add_term(k, c);
  return f;
}

DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b) {
  if (!(a.space_ == b.space_)) throw SpaceMismatch("form difference");
  DifferentialForm f = a;
  for (const auto& [k, c] : b.terms_) f.add_term(k, -c);
  return f;
}

DifferentialForm DifferentialForm::scaled(const Scalar& c) const {
  DifferentialForm f(space_);
  if (c.is_zero()) return f;
  for (const auto& [k, x] : terms_) f.terms_.emplace(k, x * c);
  return f;
}

bool DifferentialForm::operator==(const DifferentialForm& other) const {
  if (!(space_ == other.space_) || terms_.size() != other.terms_.size()) return false;
  for (const auto& [k, c] : terms_) {
    auto it = other.terms_.find(k);
    if (it == other.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

DifferentialForm wedge_mul(const DifferentialForm& a, const DifferentialForm& b) {
  if (!(a.space_ == b.space_)) throw SpaceMismatch("wedge product");
  DifferentialForm f(a.space_);
  Wedge merged;
  int sign;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      if (!wedge_merge(ka.wedge, kb.wedge, merged, sign)) continue;
      Monomial m = ka.mono;
      for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += kb.mono.exp[i];
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      f.add_term(FormKey{std::move(m), merged}, c);
    }
  return f;
}

DifferentialForm DifferentialForm::bidegree_component(unsigned a, unsigned b) const {
  DifferentialForm f(space_);
  for (const auto& [k, c] : terms_)
    if (k.mono.degree() == a && k.wedge.size() == b) f.terms_.emplace(k, c);
  return f;
}

std::vector<std::pair<unsigned, unsigned>> DifferentialForm::bidegrees() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (const auto& [k, c] : terms_) {
    std::pair<unsigned, unsigned> bd{k.mono.degree(), static_cast<unsigned>(k.wedge.size())};
    if (std::find(out.begin(), out.end(), bd) == out.end()) out.push_back(bd);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DifferentialForm::is_homogeneous(unsigned* a_out, unsigned* b_out) const {
  auto bds = bidegrees();
  if (bds.size() != 1) return false;
  if (a_out) *a_out = bds[0].first;
  if (b_out) *b_out = bds[0].second;
  return true;
}

Polynomial DifferentialForm::wedge_coefficient(const Wedge& w) const {
  Polynomial p(space_.poly_side, space_.n);
  for (const auto& [k, c] : terms_)
    if (k.wedge == w) p.add_term(k.mono, c);
  return p;
}

std::vector<Scalar> DifferentialForm::coordinates(const std::vector<FormKey>& basis) const {
  std::vector<Scalar> v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = coefficient(basis[i]);
  return v;
}

DifferentialForm DifferentialForm::from_coordinates(FormSpace space,
                                                    const std::vector<FormKey>& basis,
                                                    const std::vector<Scalar>& coords) {
  DifferentialForm f(space);
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coords[i]);
  return f;
}

DifferentialForm DifferentialForm::acted(const Matrix& poly_subst,
                                         const Matrix& ext_subst) const {
  if (poly_subst.rows() != space_.n || ext_subst.rows() != space_.r)
    throw DimensionMismatch("group action substitution shape");
  SubstitutionCache cache(poly_subst, space_.poly_side);
  DifferentialForm out(space_);
  auto wedges_by_size = [&](unsigned b) { return subsets_of_size(space_.r, b); };
  for (const auto& [k, c] : terms_) {
    Polynomial poly_img = cache.apply_monomial(k.mono);
    // image of the wedge word: coefficients are minors of the substitution
    unsigned b = static_cast<unsigned>(k.wedge.size());
    std::vector<std::pair<Wedge, Scalar>> wedge_img;
    if (b == 0) {
      wedge_img.emplace_back(Wedge{}, Scalar(1));
    } else {
      std::vector<std::size_t> rows;
      for (auto i : k.wedge) rows.push_back(i - 1);
      for (const auto& target : wedges_by_size(b)) {
        std::vector<std::size_t> cols;
        for (auto i : target) cols.push_back(i - 1);
        Scalar det = minor_determinant(ext_subst, rows, cols);
        if (!det.is_zero()) wedge_img.emplace_back(target, det);
      }
    }
    for (const auto& [pm, pc] : poly_img.terms())
      for (const auto& [tw, tc] : wedge_img) out.add_term(FormKey{pm, tw}, c * pc * tc);
  }
  return out;
}

std::string DifferentialForm::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<FormKey, Scalar>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.wedge.size() != b.first.wedge.size())
      return a.first.wedge.size() < b.first.wedge.size();
    if (a.first.wedge != b.first.wedge) return a.first.wedge < b.first.wedge;
    return grlex_less(b.first.mono, a.first.mono);
  });
  const char* gen = space_.ext_side == ExtSide::dual_module ? "u" : "m";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << "(" << Polynomial::monomial(space_.poly_side, k.mono, c).to_string() << ")";
    for (auto i : k.wedge) os << "^" << gen << int(i);
  }
  return os.str();
}

}  // namespace semiharm
