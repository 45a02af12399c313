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

#ifndef SEMIHARM_LINALG_HPP
#define SEMIHARM_LINALG_HPP

#include <cstddef>
#include <vector>

#include "semiharm/scalar.hpp"

namespace semiharm {

// Dense matrix over the exact scalar field. Row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix conjugate_transpose() const;
  bool operator==(const Matrix& other) const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& c) const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // matrix * column

  std::string to_key() const;  // canonical serialization, used for hashing

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

Scalar determinant(Matrix m);
Matrix inverse(Matrix m);  // throws SingularMatrix
std::size_t rank(Matrix m);

// Columns of the returned matrix form a basis of { v : m v = 0 }.
Matrix kernel_basis(Matrix m);

// Unique reduced column echelon form (columns ordered by pivot row); the
// canonical representative of a column span.
Matrix column_echelon(Matrix m);

// Determinant of the submatrix with the given rows/columns.
Scalar minor_determinant(const Matrix& m, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols);

// Incremental row-space tracker for rank / independence tests.
class SpanTracker {
 public:
  // Returns true when v was independent of the current span (and was added).
  bool add(std::vector<Scalar> v);
  std::size_t dim() const { return rows_.size(); }
  // Reduces v against the span; the residual is empty-zero iff v is in the span.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  bool contains(std::vector<Scalar> v) const;

 private:
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows_;  // (pivot, row), pivot-normalized
};

}  // namespace semiharm

#endif
