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


#include "spunnorm/homology.hpp"

#include <deque>
#include <numeric>

#include "spunnorm/qcoords.hpp"

namespace spunnorm {
namespace {

int Sign3(int a, int b, int c) {
  const int inv = (a > b) + (a > c) + (b > c);
  return inv % 2 ? -1 : 1;
}

std::array<int, 3> FaceVertices(int face) {
  std::array<int, 3> v{};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != face) v[k++] = i;
  return v;
}

int FaceSign(const IdealTriangulation& t, int tet, int face) { return t.sign(tet) * (face % 2 ? -1 : 1); }

// +1 when (tet, face) is the representative side of its class.
int CrossingSign(const ChainComplex& cx, int tet, int face) {
  const FaceClass& f = cx.faces[cx.face_of[tet][face]];
  return f.tet == tet && f.face == face ? 1 : -1;
}

}  // namespace

ChainComplex BuildChainComplex(const IdealTriangulation& t) {
  const int n = t.size();
  ChainComplex cx;
  cx.face_of.assign(n, {-1, -1, -1, -1});
  for (int tet = 0; tet < n; ++tet)
    for (int f = 0; f < 4; ++f) {
      if (cx.face_of[tet][f] >= 0) continue;
      const Gluing& g = t.gluing(tet, f);
      const int pf = g.perm[f];
      cx.face_of[tet][f] = cx.face_of[g.tet][pf] = static_cast<int>(cx.faces.size());
      cx.faces.push_back({tet, f, g.tet, pf});
    }
  const size_t nf = cx.faces.size(), ne = t.edge_classes().size();
  cx.d3 = IntMatrix(nf, n);
  for (int tet = 0; tet < n; ++tet)
    for (int f = 0; f < 4; ++f) cx.d3(cx.face_of[tet][f], tet) += FaceIncidence(t, cx, tet, f);
  cx.d2 = IntMatrix(ne, nf);
  for (size_t c = 0; c < nf; ++c) {
    const FaceClass& fc = cx.faces[c];
    const auto v = FaceVertices(fc.face);
    const int s = FaceSign(t, fc.tet, fc.face);
    const int pairs[3][3] = {{v[1], v[2], 1}, {v[0], v[2], -1}, {v[0], v[1], 1}};
    for (const auto& p : pairs) {
      const int k = EdgeIndex(p[0], p[1]);
      cx.d2(t.edge_class_of(fc.tet, k), c) += s * p[2] * t.edge_direction(fc.tet, k);
    }
  }
  cx.d1 = IntMatrix(t.num_cusps(), ne);
  for (const auto& e : t.edge_classes()) {
    cx.d1(e.endpoints[1], e.id) += 1;
    cx.d1(e.endpoints[0], e.id) -= 1;
  }
  return cx;
}

int FaceIncidence(const IdealTriangulation& t, const ChainComplex& cx, int tet, int face) {
  const FaceClass& fc = cx.faces[cx.face_of[tet][face]];
  if (fc.tet == tet && fc.face == face) return 1;
  // Pull this face's ascending order back to the representative's labels.
  const Perm inv = Inverse(t.gluing(fc.tet, fc.face).perm);
  const auto w = FaceVertices(face);
  const int order = Sign3(inv[w[0]], inv[w[1]], inv[w[2]]);
  return FaceSign(t, tet, face) * order * FaceSign(t, fc.tet, fc.face);
}

IntVector PhiChain(const IdealTriangulation& t, const ChainComplex& cx, const IntVector& x) {
  if (x.size() != static_cast<size_t>(kOrientedPerTet * t.size()))
    throw std::invalid_argument("oriented vector length must be 6t");
  IntVector chain(cx.faces.size());
  for (int tet = 0; tet < t.size(); ++tet)
    for (int pair = 0; pair < kOrientedPerTet; ++pair) {
      const Integer& v = x[kOrientedPerTet * tet + pair];
      if (v == 0) continue;
      for (int k : OtherTwo(kEdgeVertices[pair][0], kEdgeVertices[pair][1]))
        chain[cx.face_of[tet][k]] += v * FaceIncidence(t, cx, tet, k);
    }
  return chain;
}

Homology::Homology(const IdealTriangulation& t) : t_(&t), cx_(BuildChainComplex(t)) {
  const size_t nf = cx_.faces.size();
  const RatMatrix d2 = ToRational(cx_.d2);

  // H_2: kernel vectors of d2 independent modulo the image of d3.
  RatMatrix span(0, nf);
  for (size_t c = 0; c < cx_.d3.cols(); ++c) span.AppendRow(ToRational(cx_.d3.Col(c)));
  size_t rank = Rank(span);
  for (const RatVector& k : KernelBasis(d2)) {
    span.AppendRow(k);
    const size_t r = Rank(span);
    if (r == rank) continue;
    rank = r;
    h2_.push_back(Primitive(k));
  }
  h2_solve_ = RatMatrix(nf, h2_.size() + cx_.d3.cols());
  for (size_t i = 0; i < h2_.size(); ++i)
    for (size_t r = 0; r < nf; ++r) h2_solve_(r, i) = h2_[i][r];
  for (size_t c = 0; c < cx_.d3.cols(); ++c)
    for (size_t r = 0; r < nf; ++r) h2_solve_(r, h2_.size() + c) = cx_.d3(r, c);

  // Dual complex relations.
  dual_relations_ = IntMatrix(0, nf);
  std::vector<bool> seen(t.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int tet = queue.front();
    queue.pop_front();
    for (int f = 0; f < 4; ++f) {
      const int next = t.gluing(tet, f).tet;
      if (seen[next]) continue;
      seen[next] = true;
      queue.push_back(next);
      IntVector row(nf);
      row[cx_.face_of[tet][f]] = 1;
      dual_relations_.AppendRow(row);
    }
  }
  for (const auto& e : t.edge_classes()) {
    IntVector row(nf);
    for (const auto& s : e.around) row[cx_.face_of[s.tet][s.leave]] += CrossingSign(cx_, s.tet, s.leave);
    dual_relations_.AppendRow(row);
  }
  const SmithForm snf = SmithNormalForm(dual_relations_);
  size_t r = 0;
  for (size_t i = 0; i < std::min(snf.d.rows(), snf.d.cols()); ++i) {
    if (snf.d(i, i) == 0) continue;
    ++r;
    if (abs(snf.d(i, i)) > 1) torsion_.push_back(abs(snf.d(i, i)));
  }
  b1_ = static_cast<int>(nf - r);

  // Peripheral map: the cusp curves must span H_1(M; Q).
  IntMatrix all = dual_relations_;
  for (const auto& b : t.bases()) {
    all.AppendRow(CurveImage(b.meridian));
    all.AppendRow(CurveImage(b.longitude));
  }
  peripheral_ = Rank(all) == nf;
  if (!peripheral_) return;

  for (int i = 0; i < t.num_cusps(); ++i) {
    IntMatrix rel = dual_relations_;
    for (int j = 0; j < t.num_cusps(); ++j)
      if (j != i) rel.AppendRow(CurveImage(t.basis(j).meridian));
    const SmithForm s = SmithNormalForm(rel);
    std::vector<Integer> d;
    for (size_t k = 0; k < std::min(s.d.rows(), s.d.cols()); ++k)
      if (s.d(k, k) != 0) d.push_back(abs(s.d(k, k)));
    // Row vector y maps to y V; the first d.size() coordinates are torsion.
    auto coords = [&](const IntVector& y) {
      IntVector z(nf);
      for (size_t c = 0; c < nf; ++c)
        for (size_t k = 0; k < nf; ++k)
          if (y[k] != 0) z[c] += y[k] * s.v(k, c);
      return z;
    };
    const IntVector zm = coords(CurveImage(t.basis(i).meridian));
    const IntVector zl = coords(CurveImage(t.basis(i).longitude));
    RatMatrix free(nf - d.size(), 2);
    for (size_t k = d.size(); k < nf; ++k) {
      free(k - d.size(), 0) = zm[k];
      free(k - d.size(), 1) = zl[k];
    }
    const auto ker = KernelBasis(free);
    if (ker.size() != 1) {
      peripheral_ = false;
      longitudes_.clear();
      return;
    }
    IntVector dir = Primitive(ker[0]);
    if (dir[0] < 0 || (dir[0] == 0 && dir[1] < 0)) dir = {-dir[0], -dir[1]};
    Integer order = 1;
    for (size_t k = 0; k < d.size(); ++k) {
      const Integer zk = dir[0] * zm[k] + dir[1] * zl[k];
      Integer g;
      mpz_gcd(g.get_mpz_t(), d[k].get_mpz_t(), zk.get_mpz_t());
      const Integer part = d[k] / g;
      mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), part.get_mpz_t());
    }
    longitudes_.push_back({{dir[0], dir[1]}, order});
  }
}

IntVector Homology::CurveImage(const PeripheralCurve& c) const {
  IntVector y(cx_.faces.size());
  for (const auto& s : c.steps) y[cx_.face_of[s.tet][s.exit]] += CrossingSign(cx_, s.tet, s.exit);
  return y;
}

std::vector<int> Homology::betti_pseudo() const {
  const int r1 = static_cast<int>(Rank(cx_.d1)), r2 = static_cast<int>(Rank(cx_.d2)),
            r3 = static_cast<int>(Rank(cx_.d3));
  const int v = static_cast<int>(cx_.d1.rows()), e = static_cast<int>(cx_.d2.rows()),
            f = static_cast<int>(cx_.d3.rows()), tets = static_cast<int>(cx_.d3.cols());
  return {v - r1, e - r1 - r2, f - r2 - r3, tets - r3};
}

RatVector Homology::CycleCoordinates(const IntVector& chain) const {
  const IntVector bd = cx_.d2 * chain;
  for (const auto& v : bd)
    if (v != 0) throw ContractError("2-chain is not a cycle");
  const SolveResult r = Solve(h2_solve_, ToRational(chain));
  if (!r.feasible) throw ContractError("2-cycle outside the span of the homology basis");
  return RatVector(r.solution.begin(), r.solution.begin() + h2_.size());
}

RatVector Homology::HomologyClass(const IntVector& x) const {
  return CycleCoordinates(PhiChain(*t_, cx_, x));
}

std::vector<PeripheralPair> Homology::ConnectingMap(const IntVector& chain) const {
  const IdealTriangulation& t = *t_;
  std::vector<std::vector<CuspEdgeChainTerm>> terms(t.num_cusps());
  for (size_t c = 0; c < cx_.faces.size(); ++c) {
    if (chain[c] == 0) continue;
    const FaceClass& fc = cx_.faces[c];
    auto p = FaceVertices(fc.face);
    if (FaceSign(t, fc.tet, fc.face) < 0) std::swap(p[1], p[2]);
    // Truncating corner p_i replaces it by a cusp edge from p_{i-1} to p_{i+1}.
    for (int i = 0; i < 3; ++i)
      terms[t.cusp_of(fc.tet, p[i])].push_back(
          {fc.tet, p[i], p[(i + 2) % 3], p[(i + 1) % 3], chain[c].get_si()});
  }
  std::vector<PeripheralPair> out;
  for (int cusp = 0; cusp < t.num_cusps(); ++cusp) {
    const long a = -Intersection(t, terms[cusp], t.basis(cusp).longitude);
    const long b = Intersection(t, terms[cusp], t.basis(cusp).meridian);
    out.push_back({Integer(a), Integer(b)});
  }
  return out;
}

RatVector Homology::PeripheralClass(const IntVector& x) const {
  if (!peripheral_) throw ContractError("peripheral map unavailable; simplicial map used");
  const BoundaryClass b = BoundaryClasses(*t_, x);
  RatVector out;
  for (size_t i = 0; i < longitudes_.size(); ++i) {
    const Integer a = b.outward[i].meridian + b.inward[i].meridian;
    const Integer l = b.outward[i].longitude + b.inward[i].longitude;
    const PeripheralPair& dir = longitudes_[i].direction;
    // Coefficient of the homological longitude, projecting along the stored
    // meridian (or along the stored longitude when the two are parallel).
    Rational coeff = dir.longitude != 0 ? Rational(l, dir.longitude) : Rational(a, dir.meridian);
    coeff.canonicalize();
    out.push_back(coeff / longitudes_[i].order);
  }
  return out;
}

RatVector Homology::Coordinates(const IntVector& x) const {
  return peripheral_ ? PeripheralClass(x) : HomologyClass(x);
}

}  // namespace spunnorm
