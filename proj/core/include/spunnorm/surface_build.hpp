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
#include <optional>
#include <string>
#include <vector>

#include "spunnorm/exact_math.hpp"
#include "spunnorm/tri_model.hpp"

namespace spunnorm {

// Disc copies of a reconstructed surface. Oriented complexes use quads with a
// positive vertex pair plus small (toward the corner) and large (away from the
// corner) triangles; unoriented complexes use quad types and plain triangles.
enum class DiscKind { kQuad, kSmallTriangle, kLargeTriangle, kQuadType, kTriangle };

struct Disc {
  DiscKind kind;
  int tet;
  int index;  // oriented pair, quad type, or corner vertex
  long level;  // quad copy or triangle level
};

enum class EndKind { kOutward, kInward, kEmbedded, kMixed };

struct BoundaryCircle {
  int cusp;
  EndKind kind;
  int arcs;
  int component;
};

// The compact core of a spun-normal surface. Each disc has one arc per face
// of its tetrahedron it meets; neighbours[d][face] is the disc glued across
// that arc, or -1 when the arc lies on a truncation circle.
struct SurfaceComplex {
  bool oriented = false;
  long cutoff = 0;
  std::vector<Disc> discs;
  std::vector<std::array<int, 4>> neighbours;
  std::vector<int> component;  // per disc
  int num_components = 0;
  std::vector<int> num_vertices;  // per component
  std::vector<int> num_edges;
  std::vector<int> num_faces;
  std::vector<int> num_quads;
  std::vector<bool> two_sided;
  std::vector<BoundaryCircle> boundary;
};

struct ComponentReport {
  bool orientable = true;
  long euler = 0;
  int boundary_components = 0;
  int genus = 0;  // genus, or crosscap number when non-orientable
  int quads = 0;
  std::string type;
};

struct SurfaceReport {
  bool connected = false;
  bool orientable = true;
  long euler = 0;
  int boundary_components = 0;
  int genus = 0;
  std::string type;
  std::vector<ComponentReport> components;
  long cutoff = 0;
};

struct BuildOptions {
  long initial_margin = 2;
  int max_doublings = 8;
};

// "S_g,n" or "N_g,n".
std::string SurfaceTypeName(bool orientable, long euler, int boundary_components);

// Reconstructs the surface of an admissible integral vector: 6t entries for a
// transversely oriented immersed surface, 3t for the embedded surface. The
// level cutoff grows until the report is stable and its Euler characteristic
// equals chi*(x) computed with `alpha`.
SurfaceComplex Reconstruct(const IdealTriangulation& t, const IntVector& x, const RatVector& alpha,
                           const BuildOptions& options = {});
SurfaceComplex Reconstruct(const IdealTriangulation& t, const IntVector& x);

// Single pass at a fixed triangle level cutoff; no stabilization.
SurfaceComplex ReconstructAtCutoff(const IdealTriangulation& t, const IntVector& x, long cutoff);

SurfaceReport Analyze(const SurfaceComplex& c);

// True when some transverse orientation of the embedded surface with
// quad coordinates forget(x) has oriented coordinates x.
bool IsEmbedded(const IdealTriangulation& t, const IntVector& oriented, const RatVector& alpha);
bool IsEmbedded(const IdealTriangulation& t, const IntVector& oriented);

// Oriented coordinates of the embedded surface with unoriented coordinates
// `x`, transversely oriented by propagation from one disc per component;
// empty when some component is one-sided.
std::optional<IntVector> TransverseOrientation(const IdealTriangulation& t, const IntVector& unoriented,
                                               const RatVector& alpha);

// Coordinate sum; throws InputError("non-admissible sum") on clashing types.
IntVector HakenSum(const IdealTriangulation& t, const IntVector& a, const IntVector& b);

}  // namespace spunnorm
