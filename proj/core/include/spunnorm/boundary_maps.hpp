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

#include <array>
#include <vector>

#include "spunnorm/exact_math.hpp"
#include "spunnorm/tri_model.hpp"

namespace spunnorm {

// a * meridian + b * longitude in H_1 of one cusp torus.
struct PeripheralPair {
  Integer meridian;
  Integer longitude;
  bool operator==(const PeripheralPair&) const = default;
};

struct BoundaryClass {
  std::vector<PeripheralPair> outward;  // one per cusp
  std::vector<PeripheralPair> inward;
  bool internal_basis = false;
};

struct WValues {
  Integer plus;
  Integer minus;
};

// Signed crossings of the outward and inward quad boundary arcs with a cusp
// curve, summed over the oriented quad vector.
WValues BoundaryCrossings(const IdealTriangulation& t, const PeripheralCurve& curve, const IntVector& oriented);

BoundaryClass BoundaryClasses(const IdealTriangulation& t, const IntVector& oriented);

// Boundary map of the unoriented vector, ends oriented by their spin direction.
// Agrees with outward - inward for any transversely oriented lift.
std::vector<PeripheralPair> SpinningSlopes(const IdealTriangulation& t, const IntVector& unoriented);

struct BoundaryCount {
  std::vector<std::array<Integer, 2>> per_cusp;  // (outward, inward) end counts
  Integer total;
};

BoundaryCount NumBoundaryComponents(const IdealTriangulation& t, const IntVector& oriented);

// At every cusp the outward class and minus the inward class have the same
// primitive direction, or one of them is zero.
bool EndsEmbeddable(const IdealTriangulation& t, const IntVector& oriented);

Integer Gcd(const PeripheralPair& p);
PeripheralPair PrimitiveDirection(const PeripheralPair& p);

}  // namespace spunnorm
