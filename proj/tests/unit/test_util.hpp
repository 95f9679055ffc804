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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "spunnorm/exact_math.hpp"
#include "spunnorm/qcoords.hpp"
#include "spunnorm/tri_model.hpp"

namespace spunnorm::testing {

inline std::string FixturePath(const std::string& name) { return std::string(SPUNNORM_FIXTURE_DIR) + "/" + name; }

inline IdealTriangulation Fixture(const std::string& name) { return LoadTriangulationFile(FixturePath(name)); }

inline const std::vector<std::string>& CensusFixtures() {
  static const std::vector<std::string> names{"4_1.tri", "m004.tri", "K7a1.tri", "L9a46.tri", "L12n1738_filled.tri",
                                              "L13n124.tri"};
  return names;
}

// Nullity and one kernel vector of a small integer matrix by plain rational
// elimination, kept separate from the library's linear algebra.
struct SmallKernel {
  size_t nullity = 0;
  std::vector<mpq_class> vector;
};

inline SmallKernel Kernel(std::vector<std::vector<mpq_class>> a, size_t cols) {
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < a.size(); ++c) {
    size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const mpq_class lead = a[row][c];
    for (auto& v : a[row]) v /= lead;
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (size_t k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  SmallKernel k;
  k.nullity = cols - pivot_col.size();
  if (k.nullity == 0) return k;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  size_t free = 0;
  while (is_pivot[free]) ++free;
  k.vector.assign(cols, 0);
  k.vector[free] = 1;
  for (size_t r = 0; r < pivot_col.size(); ++r) k.vector[pivot_col[r]] = -a[r][free];
  return k;
}

// Extreme rays of {x >= 0, A x = 0} by testing every support set: a support
// carries an extreme ray iff its columns have a one-dimensional kernel
// spanned by a vector that is positive on the whole support.
inline std::vector<IntVector> BruteForceRays(const IntMatrix& a, size_t n) {
  std::vector<IntVector> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<size_t> cols;
    for (size_t j = 0; j < n; ++j)
      if (mask >> j & 1) cols.push_back(j);
    std::vector<std::vector<mpq_class>> sub(a.rows(), std::vector<mpq_class>(cols.size()));
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t k = 0; k < cols.size(); ++k) sub[i][k] = a(i, cols[k]);
    const SmallKernel k = Kernel(sub, cols.size());
    if (k.nullity != 1) continue;
    int sign = 0;
    bool ok = true;
    for (const auto& v : k.vector) {
      const int s = sgn(v);
      if (s == 0 || (sign && s != sign)) ok = false;
      sign = s;
    }
    if (!ok) continue;
    RatVector full(n);
    for (size_t k2 = 0; k2 < cols.size(); ++k2) full[cols[k2]] = k.vector[k2] * sign;
    out.push_back(Primitive(full));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline IntMatrix RandomMatrix(std::mt19937& rng, size_t rows, size_t cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

inline bool IsZero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace spunnorm::testing
