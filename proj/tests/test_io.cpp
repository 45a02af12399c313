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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "semiharm/io.hpp"
#include "semiharm/sampling.hpp"

using namespace semiharm;

TEST_CASE("polynomial JSON round trip") {
  Sampler sampler(1);
  for (int t = 0; t < 20; ++t) {
    auto side = t % 2 == 0 ? PolySide::coordinates : PolySide::duals;
    auto p = sampler.polynomial(side, 3, 4, 5, FieldSpec{t % 3 == 0 ? 5u : 1u});
    if (p.is_zero()) continue;
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  }
}

TEST_CASE("form JSON round trip keeps wedge order increasing") {
  Sampler sampler(2);
  FormSpace sp{PolySide::coordinates, ExtSide::dual_module, 3, 3};
  for (int t = 0; t < 20; ++t) {
    auto f = sampler.form(sp, 3, 4);
    auto j = form_to_json(f);
    for (const auto& term : j["terms"]) {
      auto w = term["wedge"].get<std::vector<int>>();
      for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(w[i] < w[i + 1]);
    }
    CHECK(form_from_json(j) == f);
  }
}

TEST_CASE("group file loading") {
  auto dir = std::filesystem::temp_directory_path() / "semiharm_io_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "s2.json";
  {
    std::ofstream out(path);
    out << R"({"field": "Q", "generators": [[["0","1"],["1","0"]]]})";
  }
  auto G = builtin_group("file:" + path.string());
  CHECK(G.order() == 2);
  CHECK(G.reflections().size() == 1);
}

TEST_CASE("module file loading against a builtin group") {
  auto dir = std::filesystem::temp_directory_path() / "semiharm_io_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "mod.json";
  {
    // the sign character of S_3 supplied as explicit 1x1 generator images
    std::ofstream out(path);
    out << R"({"matrices_for_generators": [[["-1"]], [["-1"]]]})";
  }
  auto G = builtin_group("symmetric:3");
  auto M = builtin_module(G, "file:" + path.string());
  CHECK(M.dim() == 1);
  auto sign = LinearCharacter::det_v(G);
  for (std::size_t i = 0; i < G.order(); ++i) CHECK(M.matrix(i).at(0, 0) == sign.value(i));
}

TEST_CASE("cached group resolution matches a fresh closure") {
  auto dir = std::filesystem::temp_directory_path() / "semiharm_cache_test";
  std::filesystem::remove_all(dir);
  setenv("SEMIHARM_CACHE_DIR", dir.c_str(), 1);
  auto fresh = builtin_group("hyperoctahedral:2");
  auto first = resolve_group("hyperoctahedral:2");   // writes the cache
  auto second = resolve_group("hyperoctahedral:2");  // reads it back
  unsetenv("SEMIHARM_CACHE_DIR");
  CHECK(std::filesystem::exists(dir / "group_hyperoctahedral_2.json"));
  CHECK(first.order() == fresh.order());
  CHECK(second.order() == fresh.order());
  CHECK(second.reflections().size() == fresh.reflections().size());
  CHECK(second.hyperplanes().size() == fresh.hyperplanes().size());
  // same element set regardless of construction path
  for (std::size_t i = 0; i < fresh.order(); ++i) second.index_of(fresh.element(i));
  CHECK(verify_group_closure(second));
}

TEST_CASE("bad inputs raise parse errors") {
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json{{"side", "q"}, {"terms", {}}}),
                  ParseError);
  CHECK_THROWS_AS(Scalar::parse("not-a-number"), ParseError);
  CHECK_THROWS_AS(builtin_group("file:/nonexistent/path.json"), UnknownSpec);
}
