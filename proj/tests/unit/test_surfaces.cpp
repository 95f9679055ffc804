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


#include "doctest.h"
#include "spunnorm/angle_structures.hpp"
#include "spunnorm/boundary_maps.hpp"
#include "spunnorm/homology.hpp"
#include "spunnorm/norm_ball.hpp"
#include "spunnorm/surface_build.hpp"
#include "test_util.hpp"

using namespace spunnorm;
using spunnorm::testing::Fixture;
using spunnorm::testing::IsZero;

namespace {

IntVector Figure8Vector() {
  IntVector x(12);
  x[PositivePair(0, 3)] = 1;
  x[PositivePair(1, 2)] = 1;
  x[6 + PositivePair(0, 2)] = 1;
  return x;
}

std::vector<IntVector> Rays(const IdealTriangulation& t) {
  std::vector<IntVector> out;
  for (const auto& e : EnumerateQtons(t, {1, false}).entries) out.push_back(e.vector);
  return out;
}

IntVector Scaled(const IntVector& v, long k) {
  IntVector out(v);
  for (auto& x : out) x *= k;
  return out;
}

}  // namespace

TEST_CASE("surface type names") {
  CHECK(SurfaceTypeName(true, -1, 3) == "S_0,3");
  CHECK(SurfaceTypeName(true, -3, 1) == "S_2,1");
  CHECK(SurfaceTypeName(false, -1, 1) == "N_2,1");
  CHECK(SurfaceTypeName(false, -5, 2) == "N_5,2");
}

TEST_CASE("figure-8: thrice-punctured sphere and once-punctured Klein bottle") {
  const IdealTriangulation t = Fixture("figure8.json");
  const RatVector alpha = SolveAngleStructure(t).alpha;
  const IntVector x = Figure8Vector();
  const SurfaceReport r = Analyze(Reconstruct(t, x, alpha));
  CHECK(r.connected);
  CHECK(r.orientable);
  CHECK(r.euler == -1);
  CHECK(r.boundary_components == 3);
  CHECK(r.type == "S_0,3");
  CHECK(!IsEmbedded(t, x, alpha));

  const SurfaceReport u = Analyze(Reconstruct(t, ForgetOrientation(x), alpha));
  CHECK(u.connected);
  CHECK(!u.orientable);
  CHECK(u.euler == -1);
  CHECK(u.boundary_components == 1);
  CHECK(u.type == "N_2,1");
  CHECK(!TransverseOrientation(t, ForgetOrientation(x), alpha).has_value());
}

TEST_CASE("boundary circles match the end counts") {
  for (const char* name : {"4_1.tri", "K7a1.tri"}) {
    CAPTURE(name);
    const IdealTriangulation t = Fixture(name);
    const RatVector alpha = SolveAngleStructure(t).alpha;
    for (const auto& x : Rays(t)) {
      const SurfaceComplex c = Reconstruct(t, x, alpha);
      const BoundaryCount n = NumBoundaryComponents(t, x);
      std::vector<std::array<long, 2>> seen(t.num_cusps(), {0, 0});
      for (const auto& b : c.boundary) {
        REQUIRE((b.kind == EndKind::kOutward || b.kind == EndKind::kInward));
        ++seen[b.cusp][b.kind == EndKind::kOutward ? 0 : 1];
      }
      for (int cusp = 0; cusp < t.num_cusps(); ++cusp) {
        CHECK(n.per_cusp[cusp][0] == seen[cusp][0]);
        CHECK(n.per_cusp[cusp][1] == seen[cusp][1]);
      }
    }
  }
}

TEST_CASE("Euler characteristic of rays, doubles and sums equals chi*") {
  for (const char* name : {"4_1.tri", "K7a1.tri"}) {
    CAPTURE(name);
    const IdealTriangulation t = Fixture(name);
    const RatVector alpha = SolveAngleStructure(t).alpha;
    const auto rays = Rays(t);
    std::vector<IntVector> points;
    for (size_t i = 0; i < rays.size(); ++i) {
      points.push_back(rays[i]);
      points.push_back(Scaled(rays[i], 2));
      if (i + 1 == rays.size()) continue;
      try {
        points.push_back(HakenSum(t, rays[i], rays[i + 1]));
      } catch (const InputError&) {
      }
    }
    for (const auto& x : points) {
      const SurfaceReport r = Analyze(ReconstructAtCutoff(t, x, 4 * std::max_element(x.begin(), x.end())->get_si() + 8));
      CHECK(Rational(r.euler) == EulerCharacteristic(alpha, x));
    }
  }
}

TEST_CASE("embedded surfaces: orientation lift solves the oriented equations") {
  const IdealTriangulation t = Fixture("K7a1.tri");
  const RatVector alpha = SolveAngleStructure(t).alpha;
  const MatchingSystem m = BuildMatching(t);
  int lifted = 0;
  for (const auto& x : Rays(t)) {
    const auto lift = TransverseOrientation(t, ForgetOrientation(x), alpha);
    if (!lift) continue;
    ++lifted;
    CHECK(ForgetOrientation(*lift) == ForgetOrientation(x));
    CHECK(IsZero(m.oriented * *lift));
    CHECK(IsEmbedded(t, *lift, alpha));
  }
  CHECK(lifted > 0);
}

TEST_CASE("reconstruction input errors") {
  const IdealTriangulation t = Fixture("figure8.json");
  CHECK_THROWS_AS(Reconstruct(t, IntVector(5)), InputError);
  IntVector bad(12);
  bad[0] = 1;
  bad[1] = 1;
  CHECK_THROWS_AS(Reconstruct(t, bad), InputError);
  IntVector off(12);
  off[0] = 1;  // admissible but not a matching solution
  CHECK_THROWS_AS(Reconstruct(t, off), InputError);
  IntVector a(6), b(6);
  a[0] = 1;
  b[1] = 1;
  CHECK_THROWS_WITH_AS(HakenSum(t, a, b), "non-admissible sum", InputError);
}

TEST_CASE("chain complex and homology") {
  for (const auto& [name, b1] : std::vector<std::pair<std::string, int>>{
           {"figure8.json", 1}, {"K7a1.tri", 1}, {"L9a46.tri", 3}, {"L12n1738_filled.tri", 3}}) {
    CAPTURE(name);
    const IdealTriangulation t = Fixture(name);
    const Homology h(t);
    const ChainComplex& cx = h.complex();
    const IntMatrix dd = cx.d2 * cx.d3;
    for (size_t j = 0; j < dd.cols(); ++j) CHECK(IsZero(dd.Col(j)));
    const IntMatrix dd1 = cx.d1 * cx.d2;
    for (size_t j = 0; j < dd1.cols(); ++j) CHECK(IsZero(dd1.Col(j)));
    CHECK(h.b1() == b1);
    CHECK(static_cast<int>(h.h2_basis().size()) == b1);
  }
}

TEST_CASE("phi chains are cycles and their boundary is the sum of the end classes") {
  for (const char* name : {"figure8.json", "K7a1.tri", "L12n1738_filled.tri"}) {
    CAPTURE(name);
    const IdealTriangulation t = Fixture(name);
    const Homology h(t);
    for (const auto& x : Rays(t)) {
      const IntVector phi = PhiChain(t, h.complex(), x);
      CHECK(IsZero(h.complex().d2 * phi));
      const RatVector cls = h.HomologyClass(x);
      const RatVector rev = h.HomologyClass(ReverseOrientation(x));
      for (size_t i = 0; i < cls.size(); ++i) CHECK(cls[i] + rev[i] == 0);
      if (!h.peripheral_available()) continue;
      const auto d = h.ConnectingMap(phi);
      const BoundaryClass b = BoundaryClasses(t, x);
      for (int c = 0; c < t.num_cusps(); ++c) {
        CHECK(d[c].meridian == b.outward[c].meridian + b.inward[c].meridian);
        CHECK(d[c].longitude == b.outward[c].longitude + b.inward[c].longitude);
      }
    }
  }
}

TEST_CASE("figure-8 norm ball: one-dimensional upper bound") {
  const NormBall ball = ComputeNormBall(Fixture("figure8.json"));
  CHECK(ball.b1 == 1);
  CHECK(!ball.certified);
  REQUIRE(ball.generator_bound.has_value());
  CHECK(*ball.generator_bound == 1);
  REQUIRE(ball.vertices.size() == 2);
  for (const auto& v : ball.vertices) {
    CHECK(v.surface_type == "S_0,3");
    CHECK(v.scale == 1);
  }
}

TEST_CASE("K7a1 norm ball: vertices at one third") {
  const NormBall ball = ComputeNormBall(Fixture("K7a1.tri"));
  REQUIRE(ball.generator_bound.has_value());
  CHECK(*ball.generator_bound == 3);
  REQUIRE(ball.vertices.size() == 2);
  CHECK(ball.vertices[0].coordinates == RatVector{Rational(-1, 3)});
  CHECK(ball.vertices[1].coordinates == RatVector{Rational(1, 3)});
  for (const auto& v : ball.vertices) {
    CHECK(v.surface_type == "S_2,1");
    CHECK(v.scale == 3);
    CHECK(v.Label().rfind("(1/3)*S_2,1 at", 0) == 0);
  }
}

TEST_CASE("exports are deterministic and well formed") {
  const NormBall ball = ComputeNormBall(Fixture("L12n1738_filled.tri"));
  CHECK(ball.certified);
  CHECK(ball.centrally_symmetric);
  CHECK(ball.vertices.size() == 6);
  const std::string json = ExportJson(ball, "L12n1738_filled");
  CHECK(json == ExportJson(ComputeNormBall(Fixture("L12n1738_filled.tri")), "L12n1738_filled"));
  CHECK(json.find("\"spunnorm-ball/1\"") != std::string::npos);
  const std::string off = ExportOff(ball);
  CHECK(off.rfind("OFF\n6 8 12", 0) == 0);
  CHECK(ExportSvg(ball).find("<svg") != std::string::npos);

  const NormBall line = ComputeNormBall(Fixture("figure8.json"));
  CHECK_THROWS_AS(ExportOff(line), InputError);
}
