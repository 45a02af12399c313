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

#include "semiharm/linalg.hpp"

#include <sstream>

#include "semiharm/errors.hpp"

namespace semiharm {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::conjugate_transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j).conjugate();
  return t;
}

bool Matrix::operator==(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != other.data_[i]) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix diff shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= c;
  return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  return out;
}

std::string Matrix::to_key() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << ":";
  for (const auto& s : data_) os << s.to_string() << ";";
  return os.str();
}

namespace {

// In-place row reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, Scalar* det_accum = nullptr) {
  std::vector<std::size_t> pivots;
  Scalar det(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
      det = -det;
    }
    Scalar inv = m.at(row, col).inverse();
    det *= m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  if (det_accum) *det_accum = det;
  return pivots;
}

}  // namespace

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  Scalar det;
  auto pivots = rref(m, &det);
  if (pivots.size() < m.rows()) return Scalar(0);
  return det;
}

Matrix inverse(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw SingularMatrix("matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix kernel_basis(Matrix m) {
  std::size_t n = m.cols();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix k(n, free_cols.size());
  for (std::size_t fc = 0; fc < free_cols.size(); ++fc) {
    std::size_t j = free_cols[fc];
    k.at(j, fc) = Scalar(1);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      k.at(pivots[pi], fc) = -m.at(pi, j);
  }
  return k;
}

Matrix column_echelon(Matrix m) {
  Matrix t = m.transpose();
  rref(t);
  // drop zero rows, transpose back
  std::size_t nz = 0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (!t.at(i, j).is_zero()) {
        zero = false;
        break;
      }
    if (!zero) nz = i + 1;
  }
  Matrix out(m.rows(), nz);
  for (std::size_t i = 0; i < nz; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) out.at(j, i) = t.at(i, j);
  return out;
}

Scalar minor_determinant(const Matrix& m, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
  Matrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
  return determinant(std::move(sub));
}

bool SpanTracker::add(std::vector<Scalar> v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  if (p == v.size()) return false;
  Scalar inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  rows_.emplace_back(p, std::move(v));
  return true;
}

std::vector<Scalar> SpanTracker::reduce(std::vector<Scalar> v) const {
  for (const auto& [pivot, row] : rows_) {
    if (pivot >= v.size() || v[pivot].is_zero()) continue;
    Scalar f = v[pivot];
    for (std::size_t j = pivot; j < v.size(); ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool SpanTracker::contains(std::vector<Scalar> v) const {
  v = reduce(std::move(v));
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace semiharm
