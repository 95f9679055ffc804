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

#include <string>
#include <vector>

#include "spunnorm/exact_math.hpp"
#include "spunnorm/tri_model.hpp"

namespace spunnorm {

// Oriented quads per tetrahedron use the edge order of kEdgeVertices: index
// EdgeIndex(a, b) is q_ab, the quad whose positive side holds vertices a, b.
// Unoriented quad types: 0 = 01|23, 1 = 02|13, 2 = 03|12.
inline constexpr int kOrientedPerTet = 6;
inline constexpr int kTypesPerTet = 3;

// Unoriented type of oriented quad `pair` (0..5).
inline constexpr int QuadTypeOfPair(int pair) { return pair < 3 ? pair : 5 - pair; }
// Oriented quad with the opposite transverse orientation.
inline constexpr int ComplementPair(int pair) { return 5 - pair; }
// Type of the quad separating {a, b} from the other two vertices.
int QuadTypeSeparating(int a, int b);
// Oriented index of the quad whose positive side is {a, b}.
inline int PositivePair(int a, int b) { return EdgeIndex(a, b); }

std::string OrientedQuadName(int index);  // e.g. "q^3_{02}"
std::string QuadTypeName(int index);      // e.g. "q^3_{02|13}"

// Slope of quad `type` at the edge (a, b) of `tet`: 0 if the quad misses the
// edge, otherwise +1 or -1. Symmetric in a and b.
int Slope(const IdealTriangulation& t, int tet, int a, int b, int type);

struct MatchingRow {
  int edge;
  int end;  // oriented toward the tail (0) or head (1) of the edge class
};

struct MatchingSystem {
  IntMatrix oriented;    // 2 * #edges rows, 6t columns
  IntMatrix unoriented;  // #edges rows, 3t columns
  std::vector<MatchingRow> oriented_rows;
};

MatchingSystem BuildMatching(const IdealTriangulation& t);
// True when x (6t oriented or 3t unoriented) satisfies every matching row.
bool SatisfiesMatching(const IdealTriangulation& t, const IntVector& x);

IntVector ForgetOrientation(const IntVector& oriented);
IntVector ReverseOrientation(const IntVector& oriented);
// Oriented lift placing every unoriented coordinate on the quad whose
// positive side contains the lower-numbered vertex pair (q_01, q_02, q_03).
IntVector CanonicalLift(const IntVector& unoriented);

// Nonnegative and at most one quad type in use per tetrahedron. The vector's
// length (6t or 3t) selects the oriented or unoriented reading.
bool IsAdmissible(const IntVector& x, int num_tetrahedra);
bool IsAdmissible(const RatVector& x, int num_tetrahedra);

// Admissibility as enumeration constraints: one group per tetrahedron with a
// block per quad type.
std::vector<ExclusiveGroup> AdmissibilityGroups(int num_tetrahedra, bool oriented);

// Label shifts along one trip around an edge class, for labels anchored at
// the chosen end. With oriented counts the total equals the oriented matching
// row toward that end; with unoriented counts it is half the unoriented row.
struct Translation {
  std::vector<Integer> shifts;  // one per wedge of the around sequence
  Integer total;
};

Translation EdgeTranslation(const IdealTriangulation& t, int edge, int end, const IntVector& oriented);
Translation EdgeTranslationUnoriented(const IdealTriangulation& t, int edge, int end,
                                      const IntVector& unoriented);

// Quad vector text: whitespace/comma separated integers, optional brackets.
IntVector ParseQuadVector(const std::string& text);

}  // namespace spunnorm
