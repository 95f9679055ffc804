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


#include "spunnorm/angle_structures.hpp"

#include "spunnorm/qcoords.hpp"

namespace spunnorm {

int EdgeIncidence(const IdealTriangulation& t, int edge, int tet, int type) {
  int count = 0;
  for (int k = 0; k < 6; ++k)
    if (QuadTypeOfPair(k) == type && t.edge_class_of(tet, k) == edge) ++count;
  return count;
}

Rational RotationalHolonomy(const IdealTriangulation& t, const RatVector& alpha,
                            const PeripheralCurve& curve) {
  Rational h = 0;
  for (const auto& s : curve.steps) {
    const int w = Fourth(s.vertex, s.enter, s.exit);  // the corner cut off
    const int eps = t.sign(s.tet) * SeqSign(s.vertex, w, s.exit, s.enter);
    h += eps * alpha[kTypesPerTet * s.tet + QuadTypeSeparating(s.vertex, w)];
  }
  return h;
}

AngleSystem BuildAngleSystem(const IdealTriangulation& t) {
  const int n = t.size();
  AngleSystem sys;
  sys.a = RatMatrix(0, kTypesPerTet * n);
  for (int tet = 0; tet < n; ++tet) {
    RatVector row(kTypesPerTet * n);
    for (int q = 0; q < kTypesPerTet; ++q) row[kTypesPerTet * tet + q] = 1;
    sys.a.AppendRow(row);
    sys.b.push_back(1);
  }
  for (const auto& e : t.edge_classes()) {
    RatVector row(kTypesPerTet * n);
    for (const auto& s : e.around)
      row[kTypesPerTet * s.tet + QuadTypeSeparating(s.tail, s.head)] += 1;
    sys.a.AppendRow(row);
    sys.b.push_back(2);
  }
  // Holonomy is linear in alpha: evaluate on unit vectors.
  for (const auto& basis : t.bases())
    for (const PeripheralCurve* c : {&basis.meridian, &basis.longitude}) {
      RatVector row(kTypesPerTet * n);
      for (const auto& s : c->steps) {
        const int w = Fourth(s.vertex, s.enter, s.exit);
        row[kTypesPerTet * s.tet + QuadTypeSeparating(s.vertex, w)] +=
            t.sign(s.tet) * SeqSign(s.vertex, w, s.exit, s.enter);
      }
      sys.a.AppendRow(row);
      sys.b.push_back(0);
    }
  return sys;
}

AngleStructure SolveAngleStructure(const IdealTriangulation& t) {
  const AngleSystem sys = BuildAngleSystem(t);
  SolveResult r = Solve(sys.a, sys.b);
  if (!r.feasible) throw ContractError("no generalized angle structure");
  AngleStructure out;
  out.alpha = std::move(r.solution);
  for (int c = 0; c < t.num_cusps(); ++c)
    out.ledger.push_back({c, RotationalHolonomy(t, out.alpha, t.basis(c).meridian),
                          RotationalHolonomy(t, out.alpha, t.basis(c).longitude)});
  return out;
}

bool SatisfiesAngleSystem(const IdealTriangulation& t, const RatVector& alpha) {
  const AngleSystem sys = BuildAngleSystem(t);
  return sys.a * alpha == sys.b;
}

namespace {

template <typename V>
Rational Chi(const RatVector& alpha, const V& x) {
  if (x.size() == 2 * alpha.size()) {
    Rational s = 0;
    for (size_t i = 0; i < x.size(); ++i)
      s -= alpha[(i / kOrientedPerTet) * kTypesPerTet + QuadTypeOfPair(i % kOrientedPerTet)] * x[i];
    return s;
  }
  if (x.size() != alpha.size()) throw std::invalid_argument("quad vector length does not match angles");
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i) s -= alpha[i] * x[i];
  return s;
}

}  // namespace

Rational EulerCharacteristic(const RatVector& alpha, const IntVector& x) { return Chi(alpha, x); }
Rational EulerCharacteristic(const RatVector& alpha, const RatVector& x) { return Chi(alpha, x); }

}  // namespace spunnorm
