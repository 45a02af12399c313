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

#ifndef SEMIHARM_SERIES_HPP
#define SEMIHARM_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace semiharm {

// Truncated generating function in q (polynomial degree, up to q_max) and z
// (exterior degree, exact); coefficients are dimensions.
class BigradedSeries {
 public:
  BigradedSeries() : q_max_(0), z_max_(0) {}
  BigradedSeries(unsigned q_max, unsigned z_max)
      : q_max_(q_max), z_max_(z_max),
        c_(static_cast<std::size_t>(q_max + 1) * (z_max + 1), 0) {}

  unsigned q_max() const { return q_max_; }
  unsigned z_max() const { return z_max_; }

  std::int64_t& at(unsigned a, unsigned b) { return c_[idx(a, b)]; }
  std::int64_t at(unsigned a, unsigned b) const {
    return (a <= q_max_ && b <= z_max_) ? c_[idx(a, b)] : 0;
  }

  bool operator==(const BigradedSeries& other) const;
  // Equality on the common truncation window.
  bool agrees_with(const BigradedSeries& other) const;

  std::string to_string() const;

  // Expanded product q^shift * prod_i (1 + z q^{drops[i]}) / prod_j (1 - q^{degrees[j]}),
  // truncated at (q_max, z cap = drops.size()). Negative drop exponents are
  // allowed as long as shift compensates (every retained term has q-degree >= 0).
  static BigradedSeries product_formula(int shift, const std::vector<int>& numerator_exps,
                                        const std::vector<int>& denominator_degrees,
                                        unsigned q_max);

 private:
  std::size_t idx(unsigned a, unsigned b) const {
    return static_cast<std::size_t>(a) * (z_max_ + 1) + b;
  }
  unsigned q_max_, z_max_;
  std::vector<std::int64_t> c_;
};

// Truncated integer power series in q, index = degree.
using QSeries = std::vector<std::int64_t>;

QSeries qseries_mul(const QSeries& a, const QSeries& b, unsigned q_max);
// 1 / p truncated; requires p[0] = 1 or p[0] = -1.
QSeries qseries_inverse(const QSeries& p, unsigned q_max);

}  // namespace semiharm

#endif
