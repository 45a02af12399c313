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

#ifndef SEMIHARM_CONFIG_HPP
#define SEMIHARM_CONFIG_HPP

#include <cstddef>

namespace semiharm::config {

// Largest cyclotomic conductor the scalar field accepts.
inline unsigned& max_conductor() {
  static unsigned cap = 60;
  return cap;
}

// Largest group order the closure enumeration accepts.
inline std::size_t& group_order_cap() {
  static std::size_t cap = 10000;
  return cap;
}

}  // namespace semiharm::config

#endif
