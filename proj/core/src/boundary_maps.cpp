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


#include "spunnorm/boundary_maps.hpp"

#include "spunnorm/qcoords.hpp"

namespace spunnorm {

WValues BoundaryCrossings(const IdealTriangulation& t, const PeripheralCurve& curve, const IntVector& x) {
  if (x.size() != static_cast<size_t>(kOrientedPerTet * t.size()))
    throw std::invalid_argument("oriented vector length must be 6t");
  // A step of the curve through corner v crosses the quad arcs lying over the
  // cusp edges it enters and leaves by. An arc is outward when the quad's
  // transverse orientation points away from v, i.e. v is on its negative side.
  WValues w{0, 0};
  for (const auto& s : curve.steps) {
    const int base = kOrientedPerTet * s.tet;
    const int in = PositivePair(s.vertex, s.enter), out = PositivePair(s.vertex, s.exit);
    w.plus += x[base + ComplementPair(in)] - x[base + ComplementPair(out)];
    w.minus -= x[base + in] - x[base + out];
  }
  return w;
}

BoundaryClass BoundaryClasses(const IdealTriangulation& t, const IntVector& x) {
  BoundaryClass b;
  b.internal_basis = t.has_internal_basis();
  for (int c = 0; c < t.num_cusps(); ++c) {
    const WValues m = BoundaryCrossings(t, t.basis(c).meridian, x);
    const WValues l = BoundaryCrossings(t, t.basis(c).longitude, x);
    b.outward.push_back({-l.plus, m.plus});
    b.inward.push_back({-l.minus, m.minus});
  }
  return b;
}

std::vector<PeripheralPair> SpinningSlopes(const IdealTriangulation& t, const IntVector& u) {
  const BoundaryClass b = BoundaryClasses(t, CanonicalLift(u));
  std::vector<PeripheralPair> out;
  for (size_t c = 0; c < b.outward.size(); ++c)
    out.push_back({b.outward[c].meridian - b.inward[c].meridian,
                   b.outward[c].longitude - b.inward[c].longitude});
  return out;
}

Integer Gcd(const PeripheralPair& p) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.meridian.get_mpz_t(), p.longitude.get_mpz_t());
  return g;
}

PeripheralPair PrimitiveDirection(const PeripheralPair& p) {
  const Integer g = Gcd(p);
  if (g == 0) return p;
  return {p.meridian / g, p.longitude / g};
}

BoundaryCount NumBoundaryComponents(const IdealTriangulation& t, const IntVector& x) {
  const BoundaryClass b = BoundaryClasses(t, x);
  BoundaryCount out;
  out.total = 0;
  for (size_t c = 0; c < b.outward.size(); ++c) {
    out.per_cusp.push_back({Gcd(b.outward[c]), Gcd(b.inward[c])});
    out.total += out.per_cusp.back()[0] + out.per_cusp.back()[1];
  }
  return out;
}

bool EndsEmbeddable(const IdealTriangulation& t, const IntVector& x) {
  const BoundaryClass b = BoundaryClasses(t, x);
  for (size_t c = 0; c < b.outward.size(); ++c) {
    const PeripheralPair& p = b.outward[c];
    const PeripheralPair q{-b.inward[c].meridian, -b.inward[c].longitude};
    if (Gcd(p) == 0 || Gcd(q) == 0) continue;
    if (PrimitiveDirection(p) != PrimitiveDirection(q)) return false;
  }
  return true;
}

}  // namespace spunnorm
