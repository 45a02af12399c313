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

#ifndef SEMIHARM_SAMPLING_HPP
#define SEMIHARM_SAMPLING_HPP

#include <random>

#include "semiharm/forms.hpp"

namespace semiharm {

// Deterministic sample generator for property checks; identical seeds give
// identical streams on every platform.
class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi);  // inclusive
  Scalar scalar(const FieldSpec& field = FieldSpec{});
  Scalar nonzero_scalar(const FieldSpec& field = FieldSpec{});
  Monomial monomial(std::size_t n, unsigned max_degree);
  Polynomial polynomial(PolySide side, std::size_t n, unsigned max_degree, unsigned terms,
                        const FieldSpec& field = FieldSpec{});
  Wedge wedge(std::size_t r);
  Wedge wedge_of_size(std::size_t r, unsigned b);
  DifferentialForm form(const FormSpace& space, unsigned max_degree, unsigned terms,
                        const FieldSpec& field = FieldSpec{});

 private:
  std::mt19937_64 rng_;
};

}  // namespace semiharm

#endif
