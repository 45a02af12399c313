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

#include "semiharm/scalar.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "semiharm/config.hpp"

namespace semiharm {
namespace {

using ZPoly = std::vector<mpz_class>;  // coefficients, index = power, no trailing zeros
using QPoly = std::vector<mpq_class>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; both operands monic in our uses.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
  ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
  while (num.size() >= den.size() && !num.empty()) {
    mpz_class c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    ztrim(num);
  }
  return q;
}

ZPoly cyclotomic_polynomial(unsigned m) {
  static std::map<unsigned, ZPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m
  ZPoly num(m + 1, mpz_class(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) num = zdiv_exact(std::move(num), cyclotomic_polynomial(d));
  }
  cache[m] = num;
  return num;
}

struct CycloTable {
  unsigned m = 1;
  unsigned phi = 1;
  QPoly min_poly;                    // Phi_m, monic, degree phi
  std::vector<QPoly> power_of_zeta;  // z^k reduced, k = 0 .. m (inclusive)
};

const CycloTable& table_for(unsigned m) {
  static std::map<unsigned, CycloTable> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m == 0) throw UnsupportedConductor("conductor must be >= 1");
  if (m > config::max_conductor())
    throw UnsupportedConductor("conductor " + std::to_string(m) + " exceeds configured cap " +
                               std::to_string(config::max_conductor()));
  CycloTable t;
  t.m = m;
  ZPoly phi_m = cyclotomic_polynomial(m);
  t.phi = static_cast<unsigned>(phi_m.size() - 1);
  t.min_poly.assign(phi_m.begin(), phi_m.end());
  // z^k on the power basis: z^phi = -(c_0 + ... + c_{phi-1} z^{phi-1}), then shift.
  t.power_of_zeta.resize(m + 1);
  for (unsigned k = 0; k <= m; ++k) {
    QPoly v(t.phi, mpq_class(0));
    if (k < t.phi) {
      v[k] = 1;
    } else {
      const QPoly& prev = t.power_of_zeta[k - 1];
      QPoly shifted(t.phi + 1, mpq_class(0));
      for (unsigned i = 0; i < t.phi; ++i) shifted[i + 1] = prev[i];
      mpq_class top = shifted[t.phi];
      for (unsigned i = 0; i < t.phi; ++i) v[i] = shifted[i] - top * t.min_poly[i];
    }
    t.power_of_zeta[k] = std::move(v);
  }
  return cache.emplace(m, std::move(t)).first->second;
}

QPoly reduce_mod_minpoly(QPoly v, const CycloTable& t) {
  while (v.size() > t.phi) {
    mpq_class top = v.back();
    std::size_t deg = v.size() - 1;
    v.pop_back();
    if (top == 0) continue;
    // subtract top * z^{deg - phi} * Phi_m (minus its leading term)
    std::size_t shift = deg - t.phi;
    for (unsigned i = 0; i < t.phi; ++i) v[shift + i] -= top * t.min_poly[i];
  }
  v.resize(t.phi, mpq_class(0));
  for (auto& c : v) c.canonicalize();
  return v;
}

int qpoly_degree(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Extended Euclid over Q[t]: returns u with u*a == gcd (gcd normalized to 1),
// assuming gcd(a, b) is a nonzero constant (b = Phi_m irreducible).
QPoly inverse_mod(const QPoly& a, const QPoly& modulus) {
  QPoly r0 = modulus, r1 = a;
  QPoly s0{mpq_class(0)}, s1{mpq_class(1)};
  while (qpoly_degree(r1) > 0) {
    // divide r0 by r1
    QPoly rem = r0;
    QPoly quo(std::max<std::size_t>(r0.size(), 1), mpq_class(0));
    int d1 = qpoly_degree(r1);
    mpq_class lead1 = r1[d1];
    while (qpoly_degree(rem) >= d1 && qpoly_degree(rem) >= 0) {
      int dr = qpoly_degree(rem);
      mpq_class c = rem[dr] / lead1;
      quo[dr - d1] += c;
      for (int i = 0; i <= d1; ++i) rem[dr - d1 + i] -= c * r1[i];
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - quo*s1)
    QPoly s2(s0.size() + quo.size() + s1.size(), mpq_class(0));
    s2.assign(std::max(s0.size(), quo.size() + s1.size()), mpq_class(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (std::size_t i = 0; i < quo.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        if (quo[i] != 0 && s1[j] != 0) s2[i + j] -= quo[i] * s1[j];
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = std::move(s2);
  }
  int d = qpoly_degree(r1);
  if (d != 0) throw DivisionByZero("element not invertible modulo minimal polynomial");
  mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  return s1;
}

}  // namespace

unsigned Scalar::phi(unsigned m) { return table_for(m).phi; }

Scalar::Scalar(long num, long den) : conductor_(1), coeffs_{mpq_class(num, den)} {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  coeffs_[0].canonicalize();
}

Scalar Scalar::zero(const FieldSpec& field) {
  const CycloTable& t = table_for(field.conductor);
  return Scalar(field.conductor, QPoly(t.phi, mpq_class(0)));
}

Scalar Scalar::one(const FieldSpec& field) {
  const CycloTable& t = table_for(field.conductor);
  QPoly v(t.phi, mpq_class(0));
  v[0] = 1;
  return Scalar(field.conductor, std::move(v));
}

Scalar Scalar::zeta(unsigned m, long power) {
  const CycloTable& t = table_for(m);
  long k = power % static_cast<long>(m);
  if (k < 0) k += m;
  return Scalar(m, t.power_of_zeta[static_cast<unsigned>(k)]);
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational_value() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

mpq_class Scalar::rational_value() const {
  if (!is_rational_value()) throw FieldMismatch("scalar is not a rational value");
  return coeffs_[0];
}

Scalar Scalar::promoted(unsigned m) const {
  if (conductor_ == m) return *this;
  if (conductor_ != 1) throw FieldMismatch("cannot mix conductors " + std::to_string(conductor_) +
                                           " and " + std::to_string(m));
  Scalar r = Scalar::zero(FieldSpec{m});
  r.coeffs_[0] = coeffs_[0];
  return r;
}

void Scalar::align(Scalar& a, Scalar& b) {
  if (a.conductor_ == b.conductor_) return;
  if (a.conductor_ == 1)
    a = a.promoted(b.conductor_);
  else if (b.conductor_ == 1)
    b = b.promoted(a.conductor_);
  else
    throw FieldMismatch("cannot mix conductors " + std::to_string(a.conductor_) + " and " +
                        std::to_string(b.conductor_));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar x = a, y = b;
  Scalar::align(x, y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar x = a, y = b;
  Scalar::align(x, y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
  return x;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar x = a, y = b;
  Scalar::align(x, y);
  if (x.conductor_ == 1) {
    x.coeffs_[0] *= y.coeffs_[0];
    x.coeffs_[0].canonicalize();
    return x;
  }
  const CycloTable& t = table_for(x.conductor_);
  QPoly prod(2 * t.phi - 1, mpq_class(0));
  for (std::size_t i = 0; i < t.phi; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < t.phi; ++j) {
      if (y.coeffs_[j] == 0) continue;
      prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return Scalar(x.conductor_, reduce_mod_minpoly(std::move(prod), t));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (conductor_ == 1) {
    mpq_class r = 1 / coeffs_[0];
    r.canonicalize();
    return Scalar(r);
  }
  const CycloTable& t = table_for(conductor_);
  QPoly inv = inverse_mod(coeffs_, t.min_poly);
  return Scalar(conductor_, reduce_mod_minpoly(std::move(inv), t));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero scalar");
  return a * b.inverse();
}

Scalar Scalar::conjugate() const {
  if (conductor_ == 1) return *this;
  const CycloTable& t = table_for(conductor_);
  QPoly acc(t.phi, mpq_class(0));
  for (unsigned k = 0; k < t.phi; ++k) {
    if (coeffs_[k] == 0) continue;
    // z^k -> z^{m-k}
    const QPoly& img = t.power_of_zeta[(conductor_ - k) % conductor_];
    for (unsigned i = 0; i < t.phi; ++i) acc[i] += coeffs_[k] * img[i];
  }
  for (auto& c : acc) c.canonicalize();
  return Scalar(conductor_, std::move(acc));
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar acc = Scalar::one(field());
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& other) const {
  Scalar x = *this, y = other;
  if (x.conductor_ != y.conductor_) {
    if (x.conductor_ != 1 && y.conductor_ != 1)
      return x.is_rational_value() && y.is_rational_value() &&
             x.coeffs_[0] == y.coeffs_[0];
    align(x, y);
  }
  return x.coeffs_ == y.coeffs_;
}

unsigned Scalar::root_of_unity_order(unsigned limit) const {
  Scalar p = *this;
  for (unsigned k = 1; k <= limit; ++k) {
    if (p.is_one()) return k;
    p *= *this;
  }
  return 0;
}

namespace {

std::string mpq_to_string(const mpq_class& q) {
  std::ostringstream os;
  if (q.get_den() == 1)
    os << q.get_num();
  else
    os << q.get_num() << "/" << q.get_den();
  return os.str();
}

mpq_class parse_mpq(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_rational_value()) return mpq_to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << mpq_to_string(coeffs_[k]);
    if (k == 1)
      os << "*z";
    else if (k > 1)
      os << "*z^" << k;
  }
  if (first) os << "0";
  os << "@" << conductor_;
  return os.str();
}

Scalar Scalar::parse(const std::string& text) {
  auto at = text.rfind('@');
  if (at == std::string::npos) return Scalar(parse_mpq(text));
  unsigned m = 0;
  try {
    m = static_cast<unsigned>(std::stoul(text.substr(at + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad conductor in '" + text + "'");
  }
  const CycloTable& t = table_for(m);
  QPoly v(t.phi, mpq_class(0));
  std::string body = text.substr(0, at);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find(" + ", pos);
    std::string term =
        body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? body.size() : next + 3;
    if (term.empty()) continue;
    std::size_t star = term.find('*');
    std::string coef_str = star == std::string::npos ? term : term.substr(0, star);
    unsigned power = 0;
    if (star != std::string::npos) {
      std::string zpart = term.substr(star + 1);
      if (zpart == "z")
        power = 1;
      else if (zpart.rfind("z^", 0) == 0)
        power = static_cast<unsigned>(std::stoul(zpart.substr(2)));
      else
        throw ParseError("bad term '" + term + "'");
    }
    mpq_class c = parse_mpq(coef_str);
    const QPoly& img = t.power_of_zeta[power % m];
    for (unsigned i = 0; i < t.phi; ++i) v[i] += c * img[i];
  }
  for (auto& c : v) c.canonicalize();
  return Scalar(m, std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace semiharm
