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

#include "spunnorm/exact_math.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spunnorm {

RatMatrix ToRational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

RatVector ToRational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

Rref ReducedRowEchelon(RatMatrix a) {
  Rref out;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.SwapRows(row, piv);
    const Rational inv = 1 / a(row, col);
    for (size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (size_t c = col; c < a.cols(); ++c)
        if (a(row, c) != 0) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

size_t Rank(const RatMatrix& a) { return ReducedRowEchelon(a).pivots.size(); }
size_t Rank(const IntMatrix& a) { return Rank(ToRational(a)); }

std::vector<RatVector> KernelBasis(const RatMatrix& a) {
  const Rref r = ReducedRowEchelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(a.cols());
    v[f] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult Solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  // Augment with [b | I] so the row operations are recorded for the certificate.
  const size_t n = a.cols(), m = a.rows();
  RatMatrix aug(m, n + 1 + m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
    aug(i, n + 1 + i) = 1;
  }
  // Eliminate only over the first n columns.
  size_t row = 0;
  std::vector<size_t> pivots;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t piv = row;
    while (piv < m && aug(piv, col) == 0) ++piv;
    if (piv == m) continue;
    aug.SwapRows(row, piv);
    const Rational inv = 1 / aug(row, col);
    for (size_t c = 0; c < aug.cols(); ++c) aug(row, c) *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == row || aug(r, col) == 0) continue;
      const Rational f = aug(r, col);
      for (size_t c = 0; c < aug.cols(); ++c)
        if (aug(row, c) != 0) aug(r, c) -= f * aug(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  SolveResult out;
  for (size_t r = row; r < m; ++r) {
    if (aug(r, n) != 0) {
      out.certificate.assign(m, 0);
      for (size_t i = 0; i < m; ++i) out.certificate[i] = aug(r, n + 1 + i);
      return out;
    }
  }
  out.feasible = true;
  out.solution.assign(n, 0);
  for (size_t i = 0; i < pivots.size(); ++i) out.solution[pivots[i]] = aug(i, n);
  return out;
}

namespace {

void RowOp(IntMatrix& m, size_t target, size_t source, const Integer& f) {
  // target -= f * source
  for (size_t c = 0; c < m.cols(); ++c)
    if (m(source, c) != 0) m(target, c) -= f * m(source, c);
}

void ColOp(IntMatrix& m, size_t target, size_t source, const Integer& f) {
  for (size_t r = 0; r < m.rows(); ++r)
    if (m(r, source) != 0) m(r, target) -= f * m(r, source);
}

void NegateRow(IntMatrix& m, size_t r) {
  for (size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

SmithForm SmithNormalForm(const IntMatrix& a) {
  const size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::Identity(m);
  IntMatrix v = IntMatrix::Identity(n);
  const size_t lim = std::min(m, n);
  for (size_t t = 0; t < lim; ++t) {
    // Pick the smallest nonzero entry in the trailing block as pivot.
    for (;;) {
      size_t pr = m, pc = n;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pr == m || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == m) return {u, d, v};
      d.SwapRows(t, pr);
      u.SwapRows(t, pr);
      d.SwapCols(t, pc);
      v.SwapCols(t, pc);
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        RowOp(d, i, t, q);
        RowOp(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        ColOp(d, j, t, q);
        ColOp(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      size_t bad_r = m;
      for (size_t i = t + 1; i < m && bad_r == m; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_r = i;
            break;
          }
      if (bad_r == m) break;
      for (size_t c = 0; c < n; ++c) d(t, c) += d(bad_r, c);
      for (size_t c = 0; c < m; ++c) u(t, c) += u(bad_r, c);
    }
    if (d(t, t) < 0) {
      NegateRow(d, t);
      NegateRow(u, t);
    }
  }
  return {u, d, v};
}

Integer Determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.SwapRows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer Content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector Primitive(const IntVector& v) {
  const Integer g = Content(v);
  if (g == 0 || g == 1) return v;
  IntVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector Primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return Primitive(out);
}

namespace {

// Affine hull of points: base point plus an echelon basis of the directions.
struct AffineFrame {
  RatVector origin;
  std::vector<size_t> pivots;  // coordinates that parametrize the hull
  RatMatrix directions;        // rref of difference vectors
};

AffineFrame FrameOf(const std::vector<RatVector>& pts) {
  AffineFrame f;
  f.origin = pts.front();
  const size_t d = f.origin.size();
  RatMatrix diffs(pts.size() - 1, d);
  for (size_t i = 1; i < pts.size(); ++i)
    for (size_t j = 0; j < d; ++j) diffs(i - 1, j) = pts[i][j] - f.origin[j];
  Rref r = ReducedRowEchelon(diffs);
  f.pivots = r.pivots;
  f.directions = RatMatrix(r.pivots.size(), d);
  for (size_t i = 0; i < r.pivots.size(); ++i)
    for (size_t j = 0; j < d; ++j) f.directions(i, j) = r.reduced(i, j);
  return f;
}

}  // namespace

Polytope ConvexHull(const std::vector<RatVector>& input) {
  Polytope p;
  if (input.empty()) return p;
  p.ambient_dimension = input.front().size();
  std::set<RatVector> uniq;
  for (const auto& x : input) {
    if (x.size() != p.ambient_dimension) throw std::invalid_argument("convex hull: mixed dimensions");
    uniq.insert(x);
  }
  std::vector<RatVector> pts(uniq.begin(), uniq.end());
  if (pts.size() == 1) {
    p.vertices = pts;
    p.dimension = 0;
    for (size_t j = 0; j < p.ambient_dimension; ++j) {
      RatVector n(p.ambient_dimension);
      n[j] = 1;
      p.hull_equations.push_back({n, pts[0][j]});
    }
    return p;
  }
  const AffineFrame frame = FrameOf(pts);
  const size_t k = frame.pivots.size();
  p.dimension = k;
  const size_t d = p.ambient_dimension;

  // Hull equations: the orthogonal complement of the direction space.
  {
    const std::vector<RatVector> perp = KernelBasis(frame.directions);
    for (const auto& n : perp) {
      Rational off = 0;
      for (size_t j = 0; j < d; ++j) off += n[j] * frame.origin[j];
      const IntVector pn = Primitive(n);
      size_t j0 = 0;
      while (n[j0] == 0) ++j0;
      const Rational scale = Rational(pn[j0]) / n[j0];
      p.hull_equations.push_back({ToRational(pn), off * scale});
    }
  }

  // Cone of valid inequalities (h, c): h + c . y_i >= 0 in pivot coordinates.
  IntMatrix g(pts.size(), k + 1);
  for (size_t i = 0; i < pts.size(); ++i) {
    RatVector row(k + 1);
    row[0] = 1;
    for (size_t j = 0; j < k; ++j) row[j + 1] = pts[i][frame.pivots[j]];
    const IntVector pr = Primitive(row);
    for (size_t j = 0; j <= k; ++j) g(i, j) = pr[j];
  }
  const std::vector<IntVector> rays = ExtremeRaysOfInequalities(g);

  std::vector<std::vector<size_t>> tight(pts.size());
  for (size_t f = 0; f < rays.size(); ++f) {
    Facet fac;
    fac.normal.assign(d, 0);
    for (size_t j = 0; j < k; ++j) fac.normal[frame.pivots[j]] = -Rational(rays[f][j + 1]);
    fac.offset = rays[f][0];
    p.facets.push_back(std::move(fac));
    for (size_t i = 0; i < pts.size(); ++i) {
      Rational s = rays[f][0];
      for (size_t j = 0; j < k; ++j) s += rays[f][j + 1] * pts[i][frame.pivots[j]];
      if (s == 0) tight[i].push_back(f);
    }
  }
  for (size_t i = 0; i < pts.size(); ++i) {
    if (tight[i].size() < k) continue;
    RatMatrix normals(tight[i].size(), k);
    for (size_t r = 0; r < tight[i].size(); ++r)
      for (size_t j = 0; j < k; ++j) normals(r, j) = rays[tight[i][r]][j + 1];
    if (Rank(normals) == k) p.vertices.push_back(pts[i]);
  }
  return p;
}

Rational Gauge(const Polytope& p, const RatVector& y) {
  Rational best = 0;
  for (const auto& f : p.facets) {
    if (f.offset <= 0) throw std::domain_error("gauge: origin not interior");
    Rational s = 0;
    for (size_t j = 0; j < y.size(); ++j) s += f.normal[j] * y[j];
    const Rational t = s / f.offset;
    if (t > best) best = t;
  }
  return best;
}

std::string ToString(const Rational& q) { return q.get_str(); }

std::string ToString(const RatVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string ToString(const IntVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace spunnorm
