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

#include "semiharm/series.hpp"

#include <algorithm>
#include <sstream>

#include "semiharm/errors.hpp"

namespace semiharm {

bool BigradedSeries::operator==(const BigradedSeries& other) const {
  return q_max_ == other.q_max_ && z_max_ == other.z_max_ && c_ == other.c_;
}

bool BigradedSeries::agrees_with(const BigradedSeries& other) const {
  unsigned qm = std::min(q_max_, other.q_max_);
  unsigned zm = std::max(z_max_, other.z_max_);
  for (unsigned a = 0; a <= qm; ++a)
    for (unsigned b = 0; b <= zm; ++b)
      if (at(a, b) != other.at(a, b)) return false;
  return true;
}

std::string BigradedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned a = 0; a <= q_max_; ++a)
    for (unsigned b = 0; b <= z_max_; ++b) {
      auto v = at(a, b);
      if (v == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (v != 1 || (a == 0 && b == 0)) os << v;
      if (v != 1 && (a > 0 || b > 0)) os << "*";
      if (a == 1)
        os << "q";
      else if (a > 1)
        os << "q^" << a;
      if (a > 0 && b > 0) os << "*";
      if (b == 1)
        os << "z";
      else if (b > 1)
        os << "z^" << b;
    }
  if (first) os << "0";
  return os.str();
}

BigradedSeries BigradedSeries::product_formula(int shift,
                                               const std::vector<int>& numerator_exps,
                                               const std::vector<int>& denominator_degrees,
                                               unsigned q_max) {
  unsigned z_cap = static_cast<unsigned>(numerator_exps.size());
  // expand numerator q^shift * prod (1 + z q^{e_i}) as z-layers of shifted powers
  // layer[b] = sum over b-subsets of exponent sums
  std::vector<std::vector<std::pair<int, std::int64_t>>> layers(z_cap + 1);
  layers[0].push_back({shift, 1});
  for (int e : numerator_exps) {
    for (unsigned b = z_cap; b >= 1; --b) {
      for (const auto& [d, c] : layers[b - 1]) layers[b].push_back({d + e, c});
      if (b == 1) break;
    }
  }
  QSeries denom_inv(q_max + 1, 0);
  denom_inv[0] = 1;
  for (int d : denominator_degrees) {
    QSeries f(q_max + 1, 0);
    f[0] = 1;
    if (d >= 0 && static_cast<unsigned>(d) <= q_max) f[d] -= 1;
    denom_inv = qseries_mul(denom_inv, qseries_inverse(f, q_max), q_max);
  }
  BigradedSeries out(q_max, z_cap);
  for (unsigned b = 0; b <= z_cap; ++b) {
    for (const auto& [d, c] : layers[b]) {
      if (d < 0) throw Error("product formula produced a negative q-degree");
      for (unsigned k = 0; static_cast<unsigned>(d) + k <= q_max; ++k)
        out.at(static_cast<unsigned>(d) + k, b) += c * denom_inv[k];
    }
  }
  return out;
}

QSeries qseries_mul(const QSeries& a, const QSeries& b, unsigned q_max) {
  QSeries out(q_max + 1, 0);
  for (unsigned i = 0; i < a.size() && i <= q_max; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < b.size() && i + j <= q_max; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QSeries qseries_inverse(const QSeries& p, unsigned q_max) {
  if (p.empty() || (p[0] != 1 && p[0] != -1))
    throw Error("series inverse requires unit constant term");
  QSeries out(q_max + 1, 0);
  out[0] = p[0];
  for (unsigned k = 1; k <= q_max; ++k) {
    std::int64_t acc = 0;
    for (unsigned j = 1; j <= k && j < p.size(); ++j) acc += p[j] * out[k - j];
    out[k] = -acc * p[0];
  }
  return out;
}

}  // namespace semiharm
