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

#include "spunnorm/boundary_maps.hpp"
#include "spunnorm/exact_math.hpp"
#include "spunnorm/tri_model.hpp"

namespace spunnorm {

// Face class: the glued pair (tet, face) ~ (partner_tet, partner_face), with
// the lower pair as representative. Its orientation is the ascending vertex
// order of the representative face times sign(tet) * (-1)^face.
struct FaceClass {
  int tet;
  int face;
  int partner_tet;
  int partner_face;
};

// Simplicial chain complex of the pseudo-manifold: C3 tetrahedra, C2 face
// classes, C1 edge classes (oriented tail to head), C0 cusps.
struct ChainComplex {
  std::vector<FaceClass> faces;
  std::vector<std::array<int, 4>> face_of;  // (tet, face) -> face class
  IntMatrix d3;  // faces x tets
  IntMatrix d2;  // edges x faces
  IntMatrix d1;  // cusps x edges
};

ChainComplex BuildChainComplex(const IdealTriangulation& t);

// +1 or -1: orientation of face `face` of `tet` as part of the boundary of
// `tet`, relative to its class orientation.
int FaceIncidence(const IdealTriangulation& t, const ChainComplex& cx, int tet, int face);

// The 2-chain carried by an oriented quad vector: q_ij maps to the two faces
// containing edge ij, oriented as part of the tetrahedron boundary.
IntVector PhiChain(const IdealTriangulation& t, const ChainComplex& cx, const IntVector& oriented);

struct Longitude {
  PeripheralPair direction;  // primitive, in the stored (meridian, longitude) basis
  Integer order;             // order in H_1 with the other cusps filled along meridians
};

class Homology {
 public:
  // Keeps a reference to `t`, which must outlive this object.
  explicit Homology(const IdealTriangulation& t);

  const ChainComplex& complex() const { return cx_; }
  // Basis of ker d2 / im d3 over Q as integer 2-cycles.
  const std::vector<IntVector>& h2_basis() const { return h2_; }

  int b1() const { return b1_; }  // of the compact manifold
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::vector<int> betti_pseudo() const;  // b0..b3 of the pseudo-manifold

  // Surjectivity of H_1(boundary; Q) -> H_1(M; Q).
  bool peripheral_available() const { return peripheral_; }
  const std::vector<Longitude>& longitudes() const { return longitudes_; }

  // Coordinates of a 2-cycle in h2_basis; throws ContractError if not a cycle.
  RatVector CycleCoordinates(const IntVector& chain) const;
  RatVector HomologyClass(const IntVector& oriented) const;

  // Boundary of a 2-chain restricted to the cusp tori, per cusp.
  std::vector<PeripheralPair> ConnectingMap(const IntVector& chain) const;

  // Longitude coordinates t_i / n_i of the projected boundary class.
  RatVector PeripheralClass(const IntVector& oriented) const;

  // Peripheral coordinates when available, otherwise h2_basis coordinates.
  RatVector Coordinates(const IntVector& oriented) const;
  std::string basis_id() const { return peripheral_ ? "peripheral" : "simplicial"; }

 private:
  // Dual complex: H_1 of the manifold as face generators modulo edge loops and
  // a spanning tree of tetrahedra.
  IntVector CurveImage(const PeripheralCurve& c) const;

  const IdealTriangulation* t_;
  ChainComplex cx_;
  std::vector<IntVector> h2_;
  RatMatrix h2_solve_;  // [basis | im d3] for coordinate solves
  IntMatrix dual_relations_;
  int b1_ = 0;
  std::vector<Integer> torsion_;
  bool peripheral_ = false;
  std::vector<Longitude> longitudes_;
};

}  // namespace spunnorm
