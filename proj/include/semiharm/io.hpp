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

#ifndef SEMIHARM_IO_HPP
#define SEMIHARM_IO_HPP

#include <json.hpp>

#include "semiharm/forms.hpp"
#include "semiharm/group.hpp"

namespace semiharm {

// {"side": "x"|"y", "terms": [{"exp": [..], "coef": "<scalar text>"}]}
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

// terms as {"exp": [...], "wedge": [i1 < i2 < ...], "coef": "..."}
nlohmann::json form_to_json(const DifferentialForm& f);
DifferentialForm form_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);

// Resolves a group spec, consulting the SEMIHARM_CACHE_DIR element cache for
// non-file specs when the variable is set. Cache files are plain JSON and
// safe to delete.
ReflectionGroup resolve_group(const std::string& spec, std::size_t order_cap = 0);

}  // namespace semiharm

#endif
