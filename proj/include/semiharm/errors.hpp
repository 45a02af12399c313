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

#ifndef SEMIHARM_ERRORS_HPP
#define SEMIHARM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semiharm {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SEMIHARM_DEFINE_ERROR(NAME)                                 \
  class NAME : public Error {                                       \
   public:                                                          \
    explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
  }

SEMIHARM_DEFINE_ERROR(DivisionByZero);
SEMIHARM_DEFINE_ERROR(FieldMismatch);
SEMIHARM_DEFINE_ERROR(UnsupportedConductor);
SEMIHARM_DEFINE_ERROR(SideMismatch);
SEMIHARM_DEFINE_ERROR(SpaceMismatch);
SEMIHARM_DEFINE_ERROR(DimensionMismatch);
SEMIHARM_DEFINE_ERROR(SingularMatrix);
SEMIHARM_DEFINE_ERROR(OrderCapExceeded);
SEMIHARM_DEFINE_ERROR(NotGeneratedByReflections);
SEMIHARM_DEFINE_ERROR(UnknownSpec);
SEMIHARM_DEFINE_ERROR(SpecNotApplicable);
SEMIHARM_DEFINE_ERROR(GenerationFailure);
SEMIHARM_DEFINE_ERROR(FreenessCertificateFailure);
SEMIHARM_DEFINE_ERROR(ZeroDeterminant);
SEMIHARM_DEFINE_ERROR(NotUniqueInMinDegree);
SEMIHARM_DEFINE_ERROR(NotDiagonalizable);
SEMIHARM_DEFINE_ERROR(KindMismatch);
SEMIHARM_DEFINE_ERROR(DegenerateForm);
SEMIHARM_DEFINE_ERROR(CommutatorNotScalarDifferential);
SEMIHARM_DEFINE_ERROR(RankDeficient);
SEMIHARM_DEFINE_ERROR(RankMismatch);
SEMIHARM_DEFINE_ERROR(ParseError);

#undef SEMIHARM_DEFINE_ERROR

}  // namespace semiharm

#endif
