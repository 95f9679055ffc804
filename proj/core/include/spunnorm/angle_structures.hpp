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

#include <vector>

#include "spunnorm/exact_math.hpp"
#include "spunnorm/tri_model.hpp"

namespace spunnorm {

// Angles are stored in units of pi, one per unoriented quad type (3t entries,
// same order as unoriented quad vectors).
struct HolonomyEntry {
  int cusp = 0;
  Rational meridian;
  Rational longitude;
};

struct AngleStructure {
  RatVector alpha;
  std::vector<HolonomyEntry> ledger;
};

// Number of occurrences of edge class `edge` among the two edges of `tet`
// disjoint from quad `type`.
int EdgeIncidence(const IdealTriangulation& t, int edge, int tet, int type);

// Signed angle sum along a normal curve; a term is positive when the arc cuts
// off its corner on the left.
Rational RotationalHolonomy(const IdealTriangulation& t, const RatVector& alpha,
                            const PeripheralCurve& curve);

// The linear system (tetrahedron sums, edge sums, basis holonomies) as A a = b.
struct AngleSystem {
  RatMatrix a;
  RatVector b;
};
AngleSystem BuildAngleSystem(const IdealTriangulation& t);

// Generalized angle structure with vanishing holonomy on every stored basis
// curve. Free variables are set to zero. Throws ContractError if none exists.
AngleStructure SolveAngleStructure(const IdealTriangulation& t);

// True when alpha satisfies every equation of BuildAngleSystem exactly.
bool SatisfiesAngleSystem(const IdealTriangulation& t, const RatVector& alpha);

// chi*(x) = -sum alpha(q) x(q); oriented vectors are forgotten first.
Rational EulerCharacteristic(const RatVector& alpha, const IntVector& x);
Rational EulerCharacteristic(const RatVector& alpha, const RatVector& x);

}  // namespace spunnorm
