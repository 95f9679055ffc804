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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spunnorm {

// Raised for malformed or unsupported triangulations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input violates a mathematical precondition (for example a
// cusp that is not a torus).
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Perm = std::array<int, 4>;

int PermSign(const Perm& p);
Perm Inverse(const Perm& p);
// Sign of the permutation k -> seq[k] of {0,1,2,3}.
int SeqSign(int a, int b, int c, int d);

// Face f of a tetrahedron is the face opposite vertex f. Gluing (tet, perm)
// sends vertex k of this tetrahedron to vertex perm[k] of `tet`.
struct Gluing {
  int tet = -1;
  Perm perm{0, 1, 2, 3};
  bool operator==(const Gluing&) const = default;
};

// Tetrahedron edges: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3).
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr int EdgeIndex(int a, int b) {
  constexpr int kIdx[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return kIdx[a][b];
}
// The two vertices not in {a, b}, ascending.
inline constexpr std::array<int, 2> OtherTwo(int a, int b) {
  std::array<int, 2> out{};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != a && i != b) out[k++] = i;
  return out;
}
// The vertex not in {a, b, c}.
inline constexpr int Fourth(int a, int b, int c) { return 6 - a - b - c; }

// One normal arc of a cusp curve: it crosses the cusp triangle at corner
// `vertex` of `tet`, entering through the side lying in face `enter` and
// leaving through the side lying in face `exit`.
struct CurveStep {
  int tet = 0;
  int vertex = 0;
  int enter = 0;
  int exit = 0;
  bool operator==(const CurveStep&) const = default;
};

struct PeripheralCurve {
  int cusp = -1;
  std::vector<CurveStep> steps;
  bool operator==(const PeripheralCurve&) const = default;
};

PeripheralCurve Reversed(const PeripheralCurve& c);

struct CuspBasis {
  PeripheralCurve meridian;
  PeripheralCurve longitude;
  bool internal = false;  // derived rather than read from input
};

// One wedge of the trip around an edge class: edge (tail, head) of `tet`,
// arriving through face `enter` and leaving through face `leave`.
struct EdgeStep {
  int tet = 0;
  int tail = 0;
  int head = 0;
  int enter = 0;
  int leave = 0;
};

struct EdgeClass {
  int id = 0;
  std::vector<EdgeStep> around;
  int valence = 0;
  std::array<int, 2> endpoints{};  // cusps at the tail and head ends
};

struct CuspCrossSection {
  int id = 0;
  std::vector<std::array<int, 2>> triangles;  // (tet, vertex)
  int num_vertices = 0;
  int num_edges = 0;
  int euler = 0;
};

// Cusp triangle side reached by crossing side `face` of triangle (tet, vertex).
struct CuspSide {
  int tet;
  int vertex;
  int face;
};

class IdealTriangulation {
 public:
  // Validates the gluing table and attaches derived structures. Missing
  // peripheral curves are replaced by a derived basis. Cusps are numbered in
  // order of first appearance unless `cusp_labels` (per tet and vertex) is given.
  static IdealTriangulation Build(std::vector<std::array<Gluing, 4>> gluings,
                                  std::vector<CuspBasis> curves = {}, std::string name = {},
                                  std::vector<std::array<int, 4>> cusp_labels = {});

  int size() const { return static_cast<int>(gluings_.size()); }
  const std::string& name() const { return name_; }
  const Gluing& gluing(int tet, int face) const { return gluings_[tet][face]; }
  const std::vector<std::array<Gluing, 4>>& gluings() const { return gluings_; }
  int sign(int tet) const { return signs_[tet]; }

  const std::vector<EdgeClass>& edge_classes() const { return edges_; }
  int edge_class_of(int tet, int edge) const { return edge_of_[tet][edge]; }
  // +1 when the ascending vertex order of this tetrahedron edge runs from the
  // tail to the head of its class.
  int edge_direction(int tet, int edge) const { return edge_dir_[tet][edge]; }

  int num_cusps() const { return static_cast<int>(cusps_.size()); }
  int cusp_of(int tet, int vertex) const { return cusp_of_[tet][vertex]; }
  const std::vector<CuspCrossSection>& cusps() const { return cusps_; }
  // True when cusp numbering differs from first-appearance order.
  bool has_custom_cusp_order() const { return custom_cusp_order_; }

  const CuspBasis& basis(int cusp) const { return bases_[cusp]; }
  const std::vector<CuspBasis>& bases() const { return bases_; }
  bool has_internal_basis() const;

  CuspSide Across(int tet, int vertex, int face) const;

 private:
  std::string name_;
  std::vector<std::array<Gluing, 4>> gluings_;
  std::vector<int> signs_;
  std::vector<EdgeClass> edges_;
  std::vector<std::array<int, 6>> edge_of_;
  std::vector<std::array<int, 6>> edge_dir_;
  std::vector<std::array<int, 4>> cusp_of_;
  std::vector<CuspCrossSection> cusps_;
  std::vector<CuspBasis> bases_;
  bool custom_cusp_order_ = false;
};

// +1 when corners (a, b, c) of the cusp triangle at (tet, v) run
// anticlockwise for the induced cusp orientation, -1 otherwise.
int CornerOrientation(const IdealTriangulation& t, int tet, int v, int a, int b, int c);

// Throws InputError unless the curve is a closed normal path on one cusp.
void ValidateCurve(const IdealTriangulation& t, const PeripheralCurve& c);

// Algebraic intersection number of two normal curves on the same cusp.
int Intersection(const IdealTriangulation& t, const PeripheralCurve& a, const PeripheralCurve& b);

// A cusp 1-chain made of oriented cusp edges: side `face` of triangle
// (tet, vertex), directed from corner `from` to corner `to`, with a weight.
struct CuspEdgeChainTerm {
  int tet;
  int vertex;
  int from;
  int to;
  long weight;
};

// Intersection number of a cusp edge 1-chain with a normal curve.
long Intersection(const IdealTriangulation& t, const std::vector<CuspEdgeChainTerm>& chain,
                  const PeripheralCurve& c);

// Two simple normal curves meeting once algebraically, oriented so that
// Intersection(longitude, meridian) == 1.
CuspBasis DeriveCuspBasis(const IdealTriangulation& t, int cusp);

// Small normal loop around the cusp vertex at the `end` (0 tail, 1 head) of an
// edge class.
PeripheralCurve VertexLoop(const IdealTriangulation& t, int edge_class, int end);

IdealTriangulation LoadNative(std::string_view text);
std::string SerializeNative(const IdealTriangulation& t);
IdealTriangulation ImportSnapPea(std::string_view text);
// Dispatches on content: JSON native format or SnapPea text.
IdealTriangulation LoadTriangulation(std::string_view text);
IdealTriangulation LoadTriangulationFile(const std::string& path);

}  // namespace spunnorm
