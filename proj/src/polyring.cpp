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

#include "semiharm/polyring.hpp"

#include <algorithm>
#include <sstream>

#include "semiharm/errors.hpp"

namespace semiharm {

bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // equal degree: a < b iff at the first differing position a has the
  // smaller exponent (x1 > x2 > ... convention)
  for (std::size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  return false;
}

namespace {

void enumerate_monomials(std::size_t n, unsigned d, std::size_t pos, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (pos + 1 == n) {
    cur.exp[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int e = static_cast<int>(d); e >= 0; --e) {
    cur.exp[pos] = static_cast<std::uint32_t>(e);
    enumerate_monomials(n, d - e, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Monomial> graded_monomials(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  Monomial cur;
  cur.exp.assign(n, 0);
  enumerate_monomials(n, d, 0, cur, out);
  return out;
}

Polynomial Polynomial::constant(PolySide side, std::size_t n, const Scalar& c) {
  Polynomial p(side, n);
  Monomial m;
  m.exp.assign(n, 0);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(PolySide side, std::size_t n, std::size_t index) {
  Polynomial p(side, n);
  Monomial m;
  m.exp.assign(n, 0);
  m.exp.at(index) = 1;
  p.add_term(m, Scalar(1));
  return p;
}

Polynomial Polynomial::monomial(PolySide side, Monomial m, const Scalar& c) {
  Polynomial p(side, m.size());
  p.add_term(std::move(m), c);
  return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::set_coefficient(const Monomial& m, const Scalar& c) {
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  bool first = true;
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    if (first) {
      d = m.degree();
      first = false;
    } else if (m.degree() != d) {
      return false;
    }
  }
  return true;
}

Monomial Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : terms_)
    if (!best || grlex_less(*best, m)) best = &m;
  return *best;
}

Scalar Polynomial::leading_coefficient() const { return coefficient(leading_monomial()); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::operator-() const {
  Polynomial p(side_, n_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.side_ != b.side_ || a.n_ != b.n_) throw SideMismatch("polynomial sum");
  Polynomial p = a;
  for (const auto& [m, c] : b.terms_) p.add_term(m, c);
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  if (a.side_ != b.side_ || a.n_ != b.n_) throw SideMismatch("polynomial difference");
  Polynomial p = a;
  for (const auto& [m, c] : b.terms_) p.add_term(m, -c);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.side_ != b.side_ || a.n_ != b.n_) throw SideMismatch("polynomial product");
  Polynomial p(a.side_, a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += mb.exp[i];
      p.add_term(m, ca * cb);
    }
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial p(side_, n_);
  if (c.is_zero()) return p;
  for (const auto& [m, x] : terms_) p.terms_.emplace(m, x * c);
  return p;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (side_ != other.side_ || n_ != other.n_) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (const auto& [m, c] : terms_) {
    auto it = other.terms_.find(m);
    if (it == other.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

Polynomial Polynomial::component(unsigned d) const {
  Polynomial p(side_, n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) p.terms_.emplace(m, c);
  return p;
}

std::vector<Scalar> Polynomial::coordinates(const std::vector<Monomial>& basis) const {
  std::vector<Scalar> v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = coefficient(basis[i]);
  return v;
}

Polynomial Polynomial::from_coordinates(PolySide side, std::size_t n,
                                        const std::vector<Monomial>& basis,
                                        const std::vector<Scalar>& coords) {
  Polynomial p(side, n);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coords[i]);
  return p;
}

std::vector<std::pair<Monomial, Scalar>> Polynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, Scalar>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  return v;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const char* var = side_name(side_);
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    bool has_var = m.degree() > 0;
    std::string cs = c.to_string();
    if (!has_var || cs != "1") {
      if (cs.find(' ') != std::string::npos || cs.find('@') != std::string::npos)
        os << "(" << cs << ")";
      else
        os << cs;
      if (has_var) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << var << (i + 1);
      if (m.exp[i] > 1) os << "^" << m.exp[i];
    }
  }
  return os.str();
}

DivisionResult divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (f.side() != g.side() || f.nvars() != g.nvars()) throw SideMismatch("polynomial division");
  Monomial lg = g.leading_monomial();
  Scalar lc = g.leading_coefficient();
  DivisionResult res;
  res.quotient = Polynomial(f.side(), f.nvars());
  res.remainder = Polynomial(f.side(), f.nvars());
  Polynomial work = f;
  while (!work.is_zero()) {
    Monomial lw = work.leading_monomial();
    bool reducible = true;
    for (std::size_t i = 0; i < lw.exp.size(); ++i)
      if (lw.exp[i] < lg.exp[i]) {
        reducible = false;
        break;
      }
    if (reducible) {
      Monomial q = lw;
      for (std::size_t i = 0; i < q.exp.size(); ++i) q.exp[i] -= lg.exp[i];
      Scalar c = work.coefficient(lw) / lc;
      res.quotient.add_term(q, c);
      work -= Polynomial::monomial(g.side(), q, c) * g;
    } else {
      Scalar c = work.coefficient(lw);
      res.remainder.add_term(lw, c);
      work.set_coefficient(lw, Scalar(0));
    }
  }
  return res;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  Polynomial out(p.side(), p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m.exp[var] == 0) continue;
    Monomial d = m;
    d.exp[var] -= 1;
    out.add_term(d, c * Scalar(static_cast<long>(m.exp[var])));
  }
  return out;
}

bool proportional(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.degree() != q.degree()) return false;
  return divide(p, q).divisible() && divide(q, p).divisible();
}

SubstitutionCache::SubstitutionCache(const Matrix& subst, PolySide side)
    : side_(side), n_(subst.rows()) {
  if (subst.rows() != subst.cols()) throw DimensionMismatch("substitution matrix not square");
  linear_images_.reserve(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    Polynomial img(side_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (subst.at(k, j).is_zero()) continue;
      Monomial m;
      m.exp.assign(n_, 0);
      m.exp[j] = 1;
      img.add_term(m, subst.at(k, j));
    }
    linear_images_.push_back(std::move(img));
  }
  powers_.resize(n_);
}

const Polynomial& SubstitutionCache::power(std::size_t var, unsigned e) {
  auto& memo = powers_[var];
  auto it = memo.find(e);
  if (it != memo.end()) return it->second;
  Polynomial p;
  if (e == 0)
    p = Polynomial::constant(side_, n_, Scalar(1));
  else if (e == 1)
    p = linear_images_[var];
  else
    p = power(var, e - 1) * linear_images_[var];
  return memo.emplace(e, std::move(p)).first->second;
}

Polynomial SubstitutionCache::apply_monomial(const Monomial& m) {
  Polynomial acc = Polynomial::constant(side_, n_, Scalar(1));
  for (std::size_t k = 0; k < m.exp.size(); ++k)
    if (m.exp[k] > 0) acc *= power(k, m.exp[k]);
  return acc;
}

Polynomial SubstitutionCache::apply(const Polynomial& p) {
  Polynomial out(side_, n_);
  for (const auto& [m, c] : p.terms()) out += apply_monomial(m).scaled(c);
  return out;
}

}  // namespace semiharm
