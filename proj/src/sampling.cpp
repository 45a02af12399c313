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

#include "semiharm/sampling.hpp"

namespace semiharm {

long Sampler::integer(long lo, long hi) {
  return lo + static_cast<long>(rng_() % static_cast<unsigned long>(hi - lo + 1));
}

Scalar Sampler::scalar(const FieldSpec& field) {
  Scalar acc = Scalar::zero(field);
  unsigned phi = Scalar::phi(field.conductor);
  for (unsigned k = 0; k < phi; ++k) {
    long num = integer(-4, 4);
    if (num == 0) continue;
    long den = integer(1, 3);
    acc += Scalar(num, den) * Scalar::zeta(field.conductor, k);
  }
  return acc;
}

Scalar Sampler::nonzero_scalar(const FieldSpec& field) {
  for (;;) {
    Scalar s = scalar(field);
    if (!s.is_zero()) return s;
  }
}

Monomial Sampler::monomial(std::size_t n, unsigned max_degree) {
  Monomial m;
  m.exp.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    m.exp[i] = static_cast<std::uint32_t>(integer(0, max_degree));
  return m;
}

Polynomial Sampler::polynomial(PolySide side, std::size_t n, unsigned max_degree, unsigned terms,
                               const FieldSpec& field) {
  Polynomial p(side, n);
  for (unsigned t = 0; t < terms; ++t) p.add_term(monomial(n, max_degree), scalar(field));
  return p;
}

Wedge Sampler::wedge(std::size_t r) {
  Wedge w;
  for (std::size_t i = 1; i <= r; ++i)
    if (integer(0, 1)) w.push_back(static_cast<std::uint8_t>(i));
  return w;
}

Wedge Sampler::wedge_of_size(std::size_t r, unsigned b) {
  auto all = subsets_of_size(r, b);
  if (all.empty()) return {};
  return all[static_cast<std::size_t>(integer(0, static_cast<long>(all.size()) - 1))];
}

DifferentialForm Sampler::form(const FormSpace& space, unsigned max_degree, unsigned terms,
                               const FieldSpec& field) {
  DifferentialForm f(space);
  for (unsigned t = 0; t < terms; ++t)
    f.add_term(FormKey{monomial(space.n, max_degree), wedge(space.r)}, scalar(field));
  return f;
}

}  // namespace semiharm
