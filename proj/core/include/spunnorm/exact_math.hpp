// Copyright 2026 The spunnorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spunnorm {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix Identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix FromRows(const std::vector<std::vector<T>>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> Row(size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> Col(size_t c) const {
    std::vector<T> out(rows_);
    for (size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void AppendRow(const std::vector<T>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }
  void SwapRows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void SwapCols(size_t a, size_t b) {
    if (a == b) return;
    for (size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<T> out(a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (x[j] != 0) out[i] += a(i, j) * x[j];
  return out;
}

RatMatrix ToRational(const IntMatrix& m);
RatVector ToRational(const IntVector& v);

struct Rref {
  RatMatrix reduced;
  std::vector<size_t> pivots;  // pivot column of each nonzero row
};

Rref ReducedRowEchelon(RatMatrix a);
size_t Rank(const RatMatrix& a);
size_t Rank(const IntMatrix& a);

// Basis of {x : Ax = 0}, one vector per free column.
std::vector<RatVector> KernelBasis(const RatMatrix& a);

struct SolveResult {
  bool feasible = false;
  RatVector solution;     // free variables set to 0
  RatVector certificate;  // y with y*A = 0 and y*b != 0 when infeasible
};

SolveResult Solve(const RatMatrix& a, const RatVector& b);

struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

// U * A * V = D with U, V unimodular and d_i | d_{i+1}.
SmithForm SmithNormalForm(const IntMatrix& a);

Integer Determinant(const IntMatrix& a);

// Clears denominators and divides out the content; zero stays zero.
IntVector Primitive(const RatVector& v);
IntVector Primitive(const IntVector& v);
Integer Content(const IntVector& v);

// Cone {x : A x = 0, x >= 0}.
struct ConeDescription {
  IntMatrix equations;
  size_t dimension = 0;
};

// Support predicate for filtered enumeration. Must be closed under taking
// subsets; a ray is kept only if its support passes.
using SupportFilter = std::function<bool(const std::vector<bool>& support)>;

// Coordinates partitioned into blocks; a support may meet at most one block
// of the group. Same meaning as an equivalent SupportFilter, but tested on
// bit masks.
struct ExclusiveGroup {
  std::vector<std::vector<size_t>> blocks;
};

struct EnumerationOptions {
  SupportFilter filter;
  std::vector<ExclusiveGroup> exclusive;
  unsigned threads = 1;
};

// Extreme rays as primitive integer vectors, sorted lexicographically.
std::vector<IntVector> ExtremeRays(const ConeDescription& cone,
                                   const EnumerationOptions& options = {});

// Extreme rays of the pointed cone {x : G x >= 0}.
std::vector<IntVector> ExtremeRaysOfInequalities(const IntMatrix& g, unsigned threads = 1);

struct Facet {
  RatVector normal;  // normal . x <= offset
  Rational offset;
};

struct Polytope {
  size_t ambient_dimension = 0;
  size_t dimension = 0;  // affine hull dimension; -1 encoded as empty vertices
  std::vector<RatVector> vertices;
  std::vector<Facet> facets;
  // Affine hull as normal . x == offset equations (empty when full dimensional).
  std::vector<Facet> hull_equations;
};

Polytope ConvexHull(const std::vector<RatVector>& points);

// Smallest t >= 0 with y in t * P; requires the origin in the interior of P.
Rational Gauge(const Polytope& p, const RatVector& y);

std::string ToString(const Rational& q);
std::string ToString(const RatVector& v);
std::string ToString(const IntVector& v);

}  // namespace spunnorm
