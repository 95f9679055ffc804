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

#include <optional>
#include <string>
#include <vector>

#include "spunnorm/boundary_maps.hpp"
#include "spunnorm/exact_math.hpp"
#include "spunnorm/homology.hpp"
#include "spunnorm/surface_build.hpp"
#include "spunnorm/tri_model.hpp"

namespace spunnorm {

// One admissible extreme ray of the oriented cone with its annotations.
struct QtonsEntry {
  int index = 0;
  IntVector vector;  // primitive oriented coordinates
  Rational euler;
  BoundaryClass boundary;
  std::vector<PeripheralPair> spinning;
  bool embedded = false;
  bool ends_embeddable = false;
  std::optional<SurfaceReport> surface;
  std::string surface_error;  // set when reconstruction failed
  RatVector homology;         // H(v) in the table's basis
};

struct QtonsTable {
  std::string basis;  // "peripheral" or "simplicial"
  int b1 = 0;
  bool internal_basis = false;
  std::vector<QtonsEntry> entries;
};

struct QtonsOptions {
  unsigned threads = 1;
  bool reconstruct = true;  // surface reports and embeddedness
};

// Rays are listed in lexicographic order; indices are positions in that order.
QtonsTable EnumerateQtons(const IdealTriangulation& t, const Homology& h, const RatVector& alpha,
                          const QtonsOptions& options = {});
QtonsTable EnumerateQtons(const IdealTriangulation& t, const QtonsOptions& options = {});

struct VertexRecord {
  RatVector coordinates;
  int qtons = -1;  // -1 when no ray lands exactly on the vertex
  Integer scale;   // the representative is (1/scale) * surface
  std::string surface_type;
  bool embedded = false;

  // "(1/n)*S_g,k at (c1, c2)" or "none at (...)".
  std::string Label() const;
};

struct NormBall {
  int b1 = 0;
  std::string basis;
  bool internal_basis = false;
  bool certified = false;  // false on the one-dimensional upper-bound branch
  Polytope polytope;
  std::vector<VertexRecord> vertices;  // sorted by coordinates
  bool centrally_symmetric = false;
  // One-dimensional branch: upper bound on the norm of the generator.
  std::optional<Rational> generator_bound;
  std::vector<std::string> notes;
  std::vector<std::string> warnings;
};

// Thrown when a ray has positive Euler characteristic.
inline constexpr const char* kNotZeroEfficient = "triangulation not 0-efficient or manifold not hyperbolic";

NormBall ComputeNormBall(const QtonsTable& table);
NormBall ComputeNormBall(const IdealTriangulation& t, const QtonsOptions& options = {});

// Ball report as JSON (rationals as "p/q" strings), deterministic.
std::string ExportJson(const NormBall& ball, const std::string& name);
// OFF polyhedron; throws InputError unless the ball is three-dimensional.
std::string ExportOff(const NormBall& ball);
// Orthographic projection for dimension 2 or 3, Schlegel diagram for 4.
std::string ExportSvg(const NormBall& ball);

}  // namespace spunnorm
