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

#include "semiharm/group.hpp"

#include <json.hpp>

#include <deque>
#include <fstream>
#include <random>
#include <sstream>

#include "semiharm/config.hpp"
#include "semiharm/errors.hpp"

namespace semiharm {
namespace {

FieldSpec deduce_field(const std::vector<Matrix>& mats) {
  unsigned conductor = 1;
  for (const auto& m : mats)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        unsigned c = m.at(i, j).conductor();
        if (c == 1) continue;
        if (conductor == 1)
          conductor = c;
        else if (conductor != c)
          throw FieldMismatch("generators mix conductors " + std::to_string(conductor) +
                              " and " + std::to_string(c));
      }
  return FieldSpec{conductor};
}

Matrix promote_matrix(const Matrix& m, const FieldSpec& field) {
  Matrix out(m.rows(), m.cols());
  Scalar z = Scalar::zero(field);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = z + m.at(i, j);
  return out;
}

// Linear form with kernel ker(A - I) for a pseudo-reflection A, normalized
// to leading coefficient 1.
Polynomial hyperplane_form(const Matrix& A, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j)
      if (!(A.at(i, j) - (i == j ? Scalar(1) : Scalar(0))).is_zero()) {
        nonzero = true;
        break;
      }
    if (!nonzero) continue;
    Polynomial alpha(PolySide::coordinates, n);
    for (std::size_t j = 0; j < n; ++j) {
      Scalar c = A.at(i, j) - (i == j ? Scalar(1) : Scalar(0));
      if (c.is_zero()) continue;
      Monomial m;
      m.exp.assign(n, 0);
      m.exp[j] = 1;
      alpha.add_term(m, c);
    }
    return alpha.monic();
  }
  throw Error("reflection equals identity");
}

std::size_t effective_cap(std::size_t order_cap) {
  return order_cap == 0 ? config::group_order_cap() : order_cap;
}

std::vector<Matrix> closure_elements(const std::vector<Matrix>& gens, std::size_t n,
                                     std::size_t cap, std::vector<std::pair<int, int>>* words,
                                     std::unordered_map<std::string, std::size_t>* index) {
  std::vector<Matrix> elements;
  elements.push_back(Matrix::identity(n));
  if (words) words->push_back({-1, -1});
  std::unordered_map<std::string, std::size_t> local;
  auto& idx = index ? *index : local;
  idx.emplace(elements[0].to_key(), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t gj = 0; gj < gens.size(); ++gj) {
      Matrix p = elements[i] * gens[gj];
      std::string key = p.to_key();
      if (idx.count(key)) continue;
      if (elements.size() >= cap)
        throw OrderCapExceeded("group order exceeds cap " + std::to_string(cap));
      idx.emplace(std::move(key), elements.size());
      elements.push_back(std::move(p));
      if (words) words->push_back({static_cast<int>(i), static_cast<int>(gj)});
      queue.push_back(elements.size() - 1);
    }
  }
  return elements;
}

}  // namespace

ReflectionGroup ReflectionGroup::close(std::vector<Matrix> generators, std::size_t order_cap) {
  ReflectionGroup G;
  if (generators.empty()) throw Error("closure needs at least one generator matrix");
  G.n_ = generators[0].rows();
  for (const auto& g : generators)
    if (g.rows() != G.n_ || g.cols() != G.n_)
      throw DimensionMismatch("generators must be square matrices of equal size");
  G.field_ = deduce_field(generators);
  for (auto& g : generators) g = promote_matrix(g, G.field_);
  for (const auto& g : generators)
    if (determinant(g).is_zero()) throw SingularMatrix("generator is not invertible");
  G.generators_ = generators;

  std::size_t cap = effective_cap(order_cap);
  G.elements_ = closure_elements(G.generators_, G.n_, cap, &G.words_, &G.index_);

  G.inverse_index_.resize(G.elements_.size());
  for (std::size_t i = 0; i < G.elements_.size(); ++i) {
    auto it = G.index_.find(semiharm::inverse(G.elements_[i]).to_key());
    if (it == G.index_.end()) throw Error("closure not inverse-closed");
    G.inverse_index_[i] = it->second;
  }

  Matrix id = Matrix::identity(G.n_);
  for (std::size_t i = 1; i < G.elements_.size(); ++i) {
    Matrix diff = G.elements_[i] - id;
    if (rank(diff) == 1) G.reflections_.push_back(i);
  }
  build_hyperplanes(G);

  // reject inputs not generated by their pseudo-reflections
  if (G.elements_.size() > 1) {
    std::vector<Matrix> refl_mats;
    for (auto ri : G.reflections_) refl_mats.push_back(G.elements_[ri]);
    if (refl_mats.empty())
      throw NotGeneratedByReflections("group has no pseudo-reflections");
    auto sub = closure_elements(refl_mats, G.n_, cap, nullptr, nullptr);
    if (sub.size() != G.elements_.size())
      throw NotGeneratedByReflections("pseudo-reflections generate a proper subgroup of order " +
                                      std::to_string(sub.size()));
  }
  return G;
}

ReflectionGroup ReflectionGroup::from_elements(std::vector<Matrix> generators,
                                               std::vector<Matrix> elements,
                                               std::size_t order_cap) {
  ReflectionGroup G;
  if (generators.empty() || elements.empty())
    throw Error("cached group needs generators and elements");
  G.n_ = generators[0].rows();
  G.field_ = deduce_field(elements);
  for (auto& g : generators) g = promote_matrix(g, G.field_);
  for (auto& e : elements) e = promote_matrix(e, G.field_);
  G.generators_ = std::move(generators);
  if (elements.size() > effective_cap(order_cap))
    throw OrderCapExceeded("cached group exceeds the order cap");

  // identity must sit at index 0
  Matrix id = Matrix::identity(G.n_);
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == id) {
      std::swap(elements[0], elements[i]);
      break;
    }
  if (!(elements[0] == id)) throw Error("cached element list lacks the identity");
  G.elements_ = std::move(elements);
  for (std::size_t i = 0; i < G.elements_.size(); ++i)
    if (!G.index_.emplace(G.elements_[i].to_key(), i).second)
      throw Error("cached element list has duplicates");

  // recover a BFS word structure from the cached elements
  G.words_.assign(G.elements_.size(), {-2, -2});
  G.words_[0] = {-1, -1};
  std::deque<std::size_t> queue{0};
  std::size_t assigned = 1;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t gj = 0; gj < G.generators_.size(); ++gj) {
      auto it = G.index_.find((G.elements_[i] * G.generators_[gj]).to_key());
      if (it == G.index_.end()) throw Error("cached element list is not closed");
      if (G.words_[it->second].first != -2) continue;
      G.words_[it->second] = {static_cast<int>(i), static_cast<int>(gj)};
      ++assigned;
      queue.push_back(it->second);
    }
  }
  if (assigned != G.elements_.size())
    throw Error("cached elements are not generated by the cached generators");

  G.inverse_index_.resize(G.elements_.size());
  for (std::size_t i = 0; i < G.elements_.size(); ++i) {
    auto it = G.index_.find(semiharm::inverse(G.elements_[i]).to_key());
    if (it == G.index_.end()) throw Error("cached element list is not inverse-closed");
    G.inverse_index_[i] = it->second;
  }
  for (std::size_t i = 1; i < G.elements_.size(); ++i)
    if (rank(G.elements_[i] - id) == 1) G.reflections_.push_back(i);
  build_hyperplanes(G);
  return G;
}

void ReflectionGroup::build_hyperplanes(ReflectionGroup& G) {
  std::unordered_map<std::string, std::size_t> hyper_index;
  for (auto ri : G.reflections_) {
    Polynomial alpha = hyperplane_form(G.elements_[ri], G.n_);
    std::string key = alpha.to_string();
    auto it = hyper_index.find(key);
    if (it == hyper_index.end()) {
      HyperplaneData h;
      h.alpha = alpha;
      h.stabilizer_elements = {0, ri};
      hyper_index.emplace(std::move(key), G.hyperplanes_.size());
      G.hyperplanes_.push_back(std::move(h));
    } else {
      G.hyperplanes_[it->second].stabilizer_elements.push_back(ri);
    }
  }
  for (auto& h : G.hyperplanes_) {
    h.stabilizer_order = static_cast<unsigned>(h.stabilizer_elements.size());
    bool found = false;
    for (auto ei : h.stabilizer_elements) {
      if (ei == 0) continue;
      Scalar det = determinant(G.elements_[ei]);
      if (det.root_of_unity_order(h.stabilizer_order) == h.stabilizer_order) {
        h.stabilizer_generator = ei;
        found = true;
        break;
      }
    }
    if (!found) throw Error("hyperplane stabilizer is not cyclic of the expected order");
  }
}

std::size_t ReflectionGroup::index_of(const Matrix& m) const {
  auto it = index_.find(m.to_key());
  if (it == index_.end()) throw Error("matrix is not a group element");
  return it->second;
}

std::size_t ReflectionGroup::product(std::size_t i, std::size_t j) const {
  return index_of(elements_[i] * elements_[j]);
}

Matrix ReflectionGroup::poly_substitution(std::size_t i, PolySide side) const {
  // x_k -> sum_j (A^{-1})_{kj} x_j on coordinates; y_k -> sum_j (A^T)_{kj} y_j on duals
  if (side == PolySide::coordinates) return elements_[inverse_index_[i]];
  return elements_[i].transpose();
}

namespace {

Scalar scalar_from_root(unsigned m, long k) {
  if (m == 1) return Scalar(1);
  if (m == 2) return (k % 2 == 0) ? Scalar(1) : Scalar(-1);
  return Scalar::zeta(m, k);
}

Matrix permutation_matrix(std::size_t n, const std::vector<std::size_t>& sigma) {
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.at(sigma[j], j) = Scalar(1);
  return m;
}

std::vector<Matrix> symmetric_generators(std::size_t n) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::size_t> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = j;
    std::swap(sigma[i], sigma[i + 1]);
    gens.push_back(permutation_matrix(n, sigma));
  }
  if (gens.empty()) gens.push_back(Matrix::identity(n));
  return gens;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

long parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UnknownSpec("bad integer '" + s + "' in spec");
  }
}

Matrix matrix_from_json(const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix JSON must be a non-empty array");
  std::size_t nr = rows.size();
  std::size_t nc = rows[0].size();
  Matrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw ParseError("ragged matrix JSON");
    for (std::size_t j = 0; j < nc; ++j)
      m.at(i, j) = Scalar::parse(rows[i][j].get<std::string>());
  }
  return m;
}

std::vector<Matrix> group_file_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnknownSpec("cannot open group file '" + path + "'");
  nlohmann::json j;
  in >> j;
  if (!j.contains("generators")) throw ParseError("group file lacks \"generators\"");
  std::vector<Matrix> gens;
  for (const auto& g : j["generators"]) gens.push_back(matrix_from_json(g));
  if (j.contains("field")) {
    std::string f = j["field"].get<std::string>();
    if (f != "Q" && f.rfind("Q(z_", 0) != 0)
      throw ParseError("group file field must be Q or Q(z_m)");
  }
  return gens;
}

}  // namespace

ReflectionGroup builtin_group(const std::string& spec, std::size_t order_cap) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UnknownSpec("group spec '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  std::string args = spec.substr(colon + 1);

  if (kind == "file") return ReflectionGroup::close(group_file_generators(args), order_cap);

  if (kind == "symmetric") {
    long n = parse_int(args);
    if (n < 1) throw UnknownSpec("symmetric:n needs n >= 1");
    return ReflectionGroup::close(symmetric_generators(n), order_cap);
  }
  if (kind == "hyperoctahedral") {
    long n = parse_int(args);
    if (n < 1) throw UnknownSpec("hyperoctahedral:n needs n >= 1");
    auto gens = symmetric_generators(n);
    Matrix flip = Matrix::identity(n);
    flip.at(0, 0) = Scalar(-1);
    gens.push_back(flip);
    return ReflectionGroup::close(gens, order_cap);
  }
  if (kind == "demihyperoctahedral") {
    long n = parse_int(args);
    if (n < 2) throw UnknownSpec("demihyperoctahedral:n needs n >= 2");
    auto gens = symmetric_generators(n);
    Matrix t = Matrix::identity(n);
    t.at(0, 0) = Scalar(0);
    t.at(1, 1) = Scalar(0);
    t.at(0, 1) = Scalar(-1);
    t.at(1, 0) = Scalar(-1);
    gens.push_back(t);
    return ReflectionGroup::close(gens, order_cap);
  }
  if (kind == "dihedral") {
    long m = parse_int(args);
    if (m < 1) throw UnknownSpec("dihedral:m needs m >= 1");
    std::vector<Matrix> gens;
    Matrix s(2, 2);
    s.at(0, 1) = Scalar(1);
    s.at(1, 0) = Scalar(1);
    Matrix t(2, 2);
    t.at(0, 1) = scalar_from_root(m, -1);
    t.at(1, 0) = scalar_from_root(m, 1);
    gens.push_back(t);
    gens.push_back(s);
    return ReflectionGroup::close(gens, order_cap);
  }
  if (kind == "cyclic") {
    long m = parse_int(args);
    if (m < 1) throw UnknownSpec("cyclic:m needs m >= 1");
    Matrix g(1, 1);
    g.at(0, 0) = scalar_from_root(m, 1);
    return ReflectionGroup::close({g}, order_cap);
  }
  if (kind == "gmpn") {
    auto parts = split(args, ',');
    if (parts.size() != 3) throw UnknownSpec("gmpn needs m,p,n");
    long m = parse_int(parts[0]), p = parse_int(parts[1]), n = parse_int(parts[2]);
    if (m < 1 || p < 1 || n < 1 || m % p != 0)
      throw UnknownSpec("gmpn:m,p,n needs m,p,n >= 1 and p | m");
    std::vector<Matrix> gens = symmetric_generators(n);
    if (p < m) {
      Matrix t = Matrix::identity(n);
      t.at(0, 0) = scalar_from_root(m, p);
      gens.push_back(t);
    }
    if (p > 1 && n >= 2) {
      Matrix s0 = Matrix::identity(n);
      s0.at(0, 0) = Scalar(0);
      s0.at(1, 1) = Scalar(0);
      s0.at(0, 1) = scalar_from_root(m, -1);
      s0.at(1, 0) = scalar_from_root(m, 1);
      gens.push_back(s0);
    }
    return ReflectionGroup::close(gens, order_cap);
  }
  throw UnknownSpec("group spec '" + spec + "'");
}

Matrix GModuleRep::ext_substitution(const ReflectionGroup& G, std::size_t i, ExtSide side) const {
  // m_k -> sum_j (R^T)_{kj} m_j on the module; mu_k -> sum_j (R^{-1})_{kj} mu_j on the dual
  if (side == ExtSide::module) return mats_[i].transpose();
  return mats_[G.inverse(i)];
}

GModuleRep GModuleRep::contragredient(const ReflectionGroup& G) const {
  std::vector<Matrix> out;
  out.reserve(mats_.size());
  for (std::size_t i = 0; i < mats_.size(); ++i)
    out.push_back(mats_[G.inverse(i)].transpose());
  return GModuleRep(r_, std::move(out));
}

Scalar GModuleRep::trace(std::size_t i) const {
  Scalar t(0);
  for (std::size_t k = 0; k < r_; ++k) t += mats_[i].at(k, k);
  return t;
}

namespace {

std::vector<std::size_t> permutation_of(const Matrix& A) {
  std::size_t n = A.rows();
  std::vector<std::size_t> sigma(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (A.at(i, j).is_zero()) continue;
      if (sigma[j] != n) throw SpecNotApplicable("matrix is not monomial");
      sigma[j] = i;
    }
    if (sigma[j] == n) throw SpecNotApplicable("matrix has a zero column");
  }
  return sigma;
}

bool is_permutation_matrix(const Matrix& A) {
  try {
    std::size_t n = A.rows();
    auto sigma = permutation_of(A);
    for (std::size_t j = 0; j < n; ++j)
      if (!A.at(sigma[j], j).is_one()) return false;
    return true;
  } catch (const SpecNotApplicable&) {
    return false;
  }
}

// Standard (n-1)-dimensional matrices of a permutation in the basis
// u_i = e_i - e_{i+1}.
Matrix standard_matrix(const std::vector<std::size_t>& sigma) {
  std::size_t n = sigma.size();
  Matrix R(n - 1, n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    std::size_t a = sigma[j], b = sigma[j + 1];
    if (a < b)
      for (std::size_t k = a; k < b; ++k) R.at(k, j) = Scalar(1);
    else
      for (std::size_t k = b; k < a; ++k) R.at(k, j) = Scalar(-1);
  }
  return R;
}

GModuleRep exterior_power_module(const ReflectionGroup& G, unsigned k) {
  std::size_t n = G.dimension();
  auto subsets = subsets_of_size(n, k);
  std::vector<Matrix> mats;
  mats.reserve(G.order());
  for (std::size_t i = 0; i < G.order(); ++i) {
    const Matrix& A = G.element(i);
    Matrix R(subsets.size(), subsets.size());
    for (std::size_t col = 0; col < subsets.size(); ++col) {
      std::vector<std::size_t> cols;
      for (auto x : subsets[col]) cols.push_back(x - 1);
      for (std::size_t row = 0; row < subsets.size(); ++row) {
        std::vector<std::size_t> rows;
        for (auto x : subsets[row]) rows.push_back(x - 1);
        R.at(row, col) = minor_determinant(A, rows, cols);
      }
    }
    mats.push_back(std::move(R));
  }
  return GModuleRep(subsets.size(), std::move(mats));
}

std::vector<Matrix> module_file_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecNotApplicable("cannot open module file '" + path + "'");
  nlohmann::json j;
  in >> j;
  if (!j.contains("matrices_for_generators"))
    throw ParseError("module file lacks \"matrices_for_generators\"");
  std::vector<Matrix> mats;
  for (const auto& g : j["matrices_for_generators"]) mats.push_back(matrix_from_json(g));
  return mats;
}

}  // namespace

GModuleRep module_from_generator_matrices(const ReflectionGroup& G,
                                          const std::vector<Matrix>& generator_images) {
  if (generator_images.size() != G.generators().size())
    throw DimensionMismatch("one matrix per group generator required");
  std::size_t r = generator_images.empty() ? 0 : generator_images[0].rows();
  for (const auto& m : generator_images)
    if (m.rows() != r || m.cols() != r)
      throw DimensionMismatch("module generator matrices must be square of equal size");
  std::vector<Matrix> mats(G.order(), Matrix());
  mats[0] = Matrix::identity(r);
  for (std::size_t i = 1; i < G.order(); ++i) {
    auto [parent, gen] = G.words()[i];
    mats[i] = mats[parent] * generator_images[gen];
  }
  GModuleRep rep(r, std::move(mats));
  // multiplicativity spot-check on deterministic pseudo-random pairs
  std::mt19937_64 rng(12345);
  std::size_t checks = std::min<std::size_t>(16, G.order());
  for (std::size_t c = 0; c < checks; ++c) {
    std::size_t i = rng() % G.order(), j = rng() % G.order();
    if (!(rep.matrix(i) * rep.matrix(j) == rep.matrix(G.product(i, j))))
      throw SpecNotApplicable("generator images do not define a representation");
  }
  return rep;
}

GModuleRep builtin_module(const ReflectionGroup& G, const std::string& spec) {
  std::size_t n = G.dimension();
  if (spec == "defining") return GModuleRep(n, G.elements());
  if (spec == "dual") return GModuleRep(n, G.elements()).contragredient(G);
  if (spec == "det" || spec == "detdual") {
    std::vector<Matrix> mats;
    mats.reserve(G.order());
    for (std::size_t i = 0; i < G.order(); ++i) {
      Matrix m(1, 1);
      std::size_t src = spec == "det" ? i : G.inverse(i);
      m.at(0, 0) = determinant(G.element(src));
      mats.push_back(std::move(m));
    }
    return GModuleRep(1, std::move(mats));
  }
  if (spec == "standard") {
    if (n < 2) throw SpecNotApplicable("standard module needs n >= 2");
    std::vector<Matrix> mats;
    mats.reserve(G.order());
    for (std::size_t i = 0; i < G.order(); ++i) {
      if (!is_permutation_matrix(G.element(i)))
        throw SpecNotApplicable("standard module needs a permutation-matrix group");
      mats.push_back(standard_matrix(permutation_of(G.element(i))));
    }
    return GModuleRep(n - 1, std::move(mats));
  }
  if (spec == "quotient-standard") {
    if (n < 2) throw SpecNotApplicable("quotient-standard module needs n >= 2");
    std::vector<Matrix> mats;
    mats.reserve(G.order());
    for (std::size_t i = 0; i < G.order(); ++i)
      mats.push_back(standard_matrix(permutation_of(G.element(i))));
    return GModuleRep(n - 1, std::move(mats));
  }
  if (spec.rfind("exterior:", 0) == 0) {
    long k = parse_int(spec.substr(9));
    if (k < 0 || static_cast<std::size_t>(k) > n)
      throw SpecNotApplicable("exterior:k needs 0 <= k <= n");
    return exterior_power_module(G, static_cast<unsigned>(k));
  }
  if (spec.rfind("file:", 0) == 0)
    return module_from_generator_matrices(G, module_file_generators(spec.substr(5)));
  throw UnknownSpec("module spec '" + spec + "'");
}

LinearCharacter LinearCharacter::trivial(const ReflectionGroup& G) {
  return LinearCharacter(std::vector<Scalar>(G.order(), Scalar(1)));
}

LinearCharacter LinearCharacter::determinant(const ReflectionGroup& G, const GModuleRep& rep) {
  std::vector<Scalar> v;
  v.reserve(G.order());
  for (std::size_t i = 0; i < G.order(); ++i) v.push_back(semiharm::determinant(rep.matrix(i)));
  return LinearCharacter(std::move(v));
}

LinearCharacter LinearCharacter::det_v(const ReflectionGroup& G) {
  std::vector<Scalar> v;
  v.reserve(G.order());
  for (std::size_t i = 0; i < G.order(); ++i) v.push_back(semiharm::determinant(G.element(i)));
  return LinearCharacter(std::move(v));
}

LinearCharacter LinearCharacter::det_v_dual(const ReflectionGroup& G) {
  return det_v(G).inverse_character();
}

LinearCharacter LinearCharacter::inverse_character() const {
  std::vector<Scalar> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.inverse());
  return LinearCharacter(std::move(v));
}

LinearCharacter LinearCharacter::product(const LinearCharacter& other) const {
  std::vector<Scalar> v;
  v.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v.push_back(values_[i] * other.values_[i]);
  return LinearCharacter(std::move(v));
}

bool LinearCharacter::is_trivial() const {
  for (const auto& x : values_)
    if (!x.is_one()) return false;
  return true;
}

DifferentialForm group_act(const ReflectionGroup& G, std::size_t i, const DifferentialForm& form,
                           const GModuleRep* rep) {
  const FormSpace& sp = form.space();
  if (sp.n != G.dimension()) throw DimensionMismatch("form/group dimension");
  Matrix ext(0, 0);
  if (sp.r > 0) {
    if (!rep || rep->dim() != sp.r) throw DimensionMismatch("form/module dimension");
    ext = rep->ext_substitution(G, i, sp.ext_side);
  }
  return form.acted(G.poly_substitution(i, sp.poly_side), ext);
}

Polynomial group_act(const ReflectionGroup& G, std::size_t i, const Polynomial& p) {
  SubstitutionCache cache(G.poly_substitution(i, p.side()), p.side());
  return cache.apply(p);
}

DifferentialForm reynolds(const DifferentialForm& form, const ReflectionGroup& G,
                          const GModuleRep* rep, const LinearCharacter& chi) {
  DifferentialForm acc = DifferentialForm::zero(form.space());
  for (std::size_t i = 0; i < G.order(); ++i)
    acc += group_act(G, i, form, rep).scaled(chi.value(G.inverse(i)));
  return acc.scaled(Scalar(1, static_cast<long>(G.order())));
}

Polynomial reynolds(const Polynomial& p, const ReflectionGroup& G, const LinearCharacter& chi) {
  Polynomial acc(p.side(), p.nvars());
  for (std::size_t i = 0; i < G.order(); ++i)
    acc += group_act(G, i, p).scaled(chi.value(G.inverse(i)));
  return acc.scaled(Scalar(1, static_cast<long>(G.order())));
}

Matrix cell_action_matrix(const ReflectionGroup& G, const GModuleRep* rep, const FormSpace& space,
                          std::size_t elem, const std::vector<FormKey>& cell) {
  std::unordered_map<FormKey, std::size_t, FormKeyHash> pos;
  for (std::size_t i = 0; i < cell.size(); ++i) pos.emplace(cell[i], i);
  SubstitutionCache poly_cache(G.poly_substitution(elem, space.poly_side), space.poly_side);
  Matrix ext(0, 0);
  if (space.r > 0) {
    if (!rep || rep->dim() != space.r) throw DimensionMismatch("cell action module dimension");
    ext = rep->ext_substitution(G, elem, space.ext_side);
  }
  // cache wedge images per source subset
  std::unordered_map<std::string, std::vector<std::pair<Wedge, Scalar>>> wedge_cache;
  Matrix out(cell.size(), cell.size());
  for (std::size_t col = 0; col < cell.size(); ++col) {
    const FormKey& k = cell[col];
    Polynomial poly_img = poly_cache.apply_monomial(k.mono);
    std::string wkey(k.wedge.begin(), k.wedge.end());
    auto wit = wedge_cache.find(wkey);
    if (wit == wedge_cache.end()) {
      std::vector<std::pair<Wedge, Scalar>> imgs;
      if (k.wedge.empty()) {
        imgs.emplace_back(Wedge{}, Scalar(1));
      } else {
        std::vector<std::size_t> rows;
        for (auto x : k.wedge) rows.push_back(x - 1);
        for (const auto& target : subsets_of_size(space.r, k.wedge.size())) {
          std::vector<std::size_t> cols;
          for (auto x : target) cols.push_back(x - 1);
          Scalar d = minor_determinant(ext, rows, cols);
          if (!d.is_zero()) imgs.emplace_back(target, d);
        }
      }
      wit = wedge_cache.emplace(std::move(wkey), std::move(imgs)).first;
    }
    for (const auto& [pm, pc] : poly_img.terms())
      for (const auto& [tw, tc] : wit->second) {
        auto it = pos.find(FormKey{pm, tw});
        if (it == pos.end()) throw Error("action does not preserve the bidegree cell");
        out.at(it->second, col) += pc * tc;
      }
  }
  return out;
}

Matrix isotypic_projector(const ReflectionGroup& G, const GModuleRep* rep, const FormSpace& space,
                          const LinearCharacter& chi, unsigned a, unsigned b) {
  auto cell = bidegree_basis(space, a, b);
  Matrix acc(cell.size(), cell.size());
  for (std::size_t i = 0; i < G.order(); ++i) {
    Matrix m = cell_action_matrix(G, rep, space, i, cell);
    const Scalar& w = chi.value(G.inverse(i));
    for (std::size_t r0 = 0; r0 < m.rows(); ++r0)
      for (std::size_t c0 = 0; c0 < m.cols(); ++c0) {
        if (m.at(r0, c0).is_zero()) continue;
        acc.at(r0, c0) += w * m.at(r0, c0);
      }
  }
  return acc.scaled(Scalar(1, static_cast<long>(G.order())));
}

int isotypic_dimension(const ReflectionGroup& G, const GModuleRep* rep, const FormSpace& space,
                       const LinearCharacter& chi, unsigned a, unsigned b) {
  if (b > space.r) return 0;
  return static_cast<int>(rank(isotypic_projector(G, rep, space, chi, a, b)));
}

namespace {

// Elementary symmetric functions of a matrix's eigenvalues via sums of
// principal minors, e_0 .. e_n.
std::vector<Scalar> principal_minor_sums(const Matrix& A) {
  std::size_t n = A.rows();
  std::vector<Scalar> e(n + 1, Scalar(0));
  e[0] = Scalar(1);
  for (unsigned k = 1; k <= n; ++k) {
    Scalar sum(0);
    for (const auto& sub : subsets_of_size(n, k)) {
      std::vector<std::size_t> idx;
      for (auto x : sub) idx.push_back(x - 1);
      sum += minor_determinant(A, idx, idx);
    }
    e[k] = sum;
  }
  return e;
}

}  // namespace

BigradedSeries molien_series(const ReflectionGroup& G, PolySide poly_side, const GModuleRep* rep,
                             ExtSide ext_side, const LinearCharacter& chi, unsigned q_max) {
  std::size_t n = G.dimension();
  std::size_t r = rep ? rep->dim() : 0;
  FieldSpec field = G.field();
  std::vector<std::vector<Scalar>> acc(q_max + 1,
                                       std::vector<Scalar>(r + 1, Scalar::zero(field)));
  for (std::size_t i = 0; i < G.order(); ++i) {
    Matrix pm = G.poly_substitution(i, poly_side);
    auto e_poly = principal_minor_sums(pm);
    // denominator det(1 - q g) = sum_k (-1)^k e_k q^k, inverted as a series
    std::vector<Scalar> denom(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
      denom[k] = (k % 2 == 0) ? e_poly[k] : -e_poly[k];
    std::vector<Scalar> inv(q_max + 1, Scalar(0));
    inv[0] = Scalar(1);
    for (unsigned k = 1; k <= q_max; ++k) {
      Scalar s(0);
      for (unsigned j = 1; j <= k && j <= n; ++j) s += denom[j] * inv[k - j];
      inv[k] = -s;
    }
    std::vector<Scalar> e_ext{Scalar(1)};
    if (rep) e_ext = principal_minor_sums(rep->ext_substitution(G, i, ext_side));
    Scalar w = chi.value(G.inverse(i));
    for (unsigned a = 0; a <= q_max; ++a) {
      if (inv[a].is_zero()) continue;
      for (unsigned b = 0; b <= r; ++b) {
        if (e_ext[b].is_zero()) continue;
        acc[a][b] += w * inv[a] * e_ext[b];
      }
    }
  }
  BigradedSeries out(q_max, static_cast<unsigned>(r));
  Scalar order(static_cast<long>(G.order()));
  for (unsigned a = 0; a <= q_max; ++a)
    for (unsigned b = 0; b <= r; ++b) {
      Scalar v = acc[a][b] / order;
      if (!v.is_rational_value()) throw Error("Molien coefficient is not rational");
      mpq_class q = v.rational_value();
      if (q.get_den() != 1 || q < 0) throw Error("Molien coefficient is not a natural number");
      out.at(a, b) = static_cast<std::int64_t>(q.get_num().get_si());
    }
  return out;
}

bool verify_group_closure(const ReflectionGroup& G, unsigned samples, unsigned seed) {
  auto check_pair = [&](std::size_t i, std::size_t j) {
    try {
      G.product(i, j);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  if (G.order() <= 200) {
    for (std::size_t i = 0; i < G.order(); ++i)
      for (std::size_t j = 0; j < G.order(); ++j)
        if (!check_pair(i, j)) return false;
  } else {
    std::mt19937_64 rng(seed);
    for (unsigned s = 0; s < samples; ++s)
      if (!check_pair(rng() % G.order(), rng() % G.order())) return false;
  }
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (!(G.element(i) * G.element(G.inverse(i))).is_identity()) return false;
  }
  return true;
}

}  // namespace semiharm
