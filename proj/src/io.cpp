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

#include "semiharm/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "semiharm/errors.hpp"

namespace semiharm {

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.sorted_terms()) {
    nlohmann::json t;
    t["exp"] = m.exp;
    t["coef"] = c.to_string();
    terms.push_back(std::move(t));
  }
  return nlohmann::json{{"side", side_name(p.side())}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  std::string side = j.at("side").get<std::string>();
  if (side != "x" && side != "y") throw ParseError("polynomial side must be \"x\" or \"y\"");
  PolySide s = side == "x" ? PolySide::coordinates : PolySide::duals;
  const auto& terms = j.at("terms");
  std::size_t n = terms.empty() ? 0 : terms[0].at("exp").size();
  Polynomial p(s, n);
  for (const auto& t : terms) {
    Monomial m;
    m.exp = t.at("exp").get<std::vector<std::uint32_t>>();
    if (m.exp.size() != n) throw ParseError("inconsistent exponent lengths");
    p.add_term(m, Scalar::parse(t.at("coef").get<std::string>()));
  }
  return p;
}

nlohmann::json form_to_json(const DifferentialForm& f) {
  const FormSpace& sp = f.space();
  nlohmann::json terms = nlohmann::json::array();
  std::vector<std::pair<FormKey, Scalar>> sorted(f.terms().begin(), f.terms().end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.wedge != b.first.wedge) return a.first.wedge < b.first.wedge;
    return grlex_less(b.first.mono, a.first.mono);
  });
  for (const auto& [k, c] : sorted) {
    nlohmann::json t;
    t["exp"] = k.mono.exp;
    t["wedge"] = std::vector<int>(k.wedge.begin(), k.wedge.end());
    t["coef"] = c.to_string();
    terms.push_back(std::move(t));
  }
  return nlohmann::json{{"poly_side", side_name(sp.poly_side)},
                        {"ext_side", sp.ext_side == ExtSide::module ? "module" : "dual"},
                        {"n", sp.n},
                        {"r", sp.r},
                        {"terms", std::move(terms)}};
}

DifferentialForm form_from_json(const nlohmann::json& j) {
  FormSpace sp;
  sp.poly_side = j.at("poly_side").get<std::string>() == "x" ? PolySide::coordinates
                                                             : PolySide::duals;
  sp.ext_side =
      j.at("ext_side").get<std::string>() == "module" ? ExtSide::module : ExtSide::dual_module;
  sp.n = j.at("n").get<std::size_t>();
  sp.r = j.at("r").get<std::size_t>();
  DifferentialForm f(sp);
  for (const auto& t : j.at("terms")) {
    Monomial m;
    m.exp = t.at("exp").get<std::vector<std::uint32_t>>();
    Wedge w;
    for (int i : t.at("wedge").get<std::vector<int>>()) w.push_back(static_cast<std::uint8_t>(i));
    f.add_term(FormKey{std::move(m), std::move(w)},
               Scalar::parse(t.at("coef").get<std::string>()));
  }
  return f;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Matrix matrix_from_json_strings(const nlohmann::json& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows[0].size();
  Matrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      m.at(i, j) = Scalar::parse(rows[i][j].get<std::string>());
  return m;
}

std::string sanitize(const std::string& spec) {
  std::string out;
  for (char c : spec) out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

}  // namespace

ReflectionGroup resolve_group(const std::string& spec, std::size_t order_cap) {
  const char* cache_dir = std::getenv("SEMIHARM_CACHE_DIR");
  bool cacheable = cache_dir && spec.rfind("file:", 0) != 0;
  std::filesystem::path path;
  if (cacheable) {
    path = std::filesystem::path(cache_dir) / ("group_" + sanitize(spec) + ".json");
    std::ifstream in(path);
    if (in) {
      try {
        nlohmann::json j;
        in >> j;
        std::vector<Matrix> gens, elems;
        for (const auto& g : j.at("generators")) gens.push_back(matrix_from_json_strings(g));
        for (const auto& e : j.at("elements")) elems.push_back(matrix_from_json_strings(e));
        return ReflectionGroup::from_elements(std::move(gens), std::move(elems), order_cap);
      } catch (const std::exception&) {
        // stale or corrupt cache entry: fall through and rebuild
      }
    }
  }
  ReflectionGroup G = builtin_group(spec, order_cap);
  if (cacheable) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (out) {
      nlohmann::json j;
      j["spec"] = spec;
      nlohmann::json gens = nlohmann::json::array();
      for (const auto& g : G.generators()) gens.push_back(matrix_to_json(g));
      nlohmann::json elems = nlohmann::json::array();
      for (const auto& e : G.elements()) elems.push_back(matrix_to_json(e));
      j["generators"] = std::move(gens);
      j["elements"] = std::move(elems);
      out << j.dump();
    }
  }
  return G;
}

}  // namespace semiharm
