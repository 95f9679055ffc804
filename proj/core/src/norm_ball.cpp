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


#include "spunnorm/norm_ball.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "spunnorm/angle_structures.hpp"
#include "spunnorm/qcoords.hpp"

namespace spunnorm {
namespace {

void Annotate(const IdealTriangulation& t, const Homology& h, const RatVector& alpha, bool reconstruct,
              QtonsEntry* e) {
  e->euler = EulerCharacteristic(alpha, e->vector);
  e->boundary = BoundaryClasses(t, e->vector);
  e->spinning = SpinningSlopes(t, ForgetOrientation(e->vector));
  e->ends_embeddable = EndsEmbeddable(t, e->vector);
  e->homology = h.Coordinates(e->vector);
  if (!reconstruct) return;
  try {
    e->surface = Analyze(Reconstruct(t, e->vector, alpha));
    e->embedded = IsEmbedded(t, e->vector, alpha);
  } catch (const std::exception& err) {
    e->surface_error = err.what();
  }
}

bool IsZero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

RatVector Scaled(const RatVector& v, const Rational& s) {
  RatVector out(v);
  for (auto& q : out) q *= s;
  return out;
}

}  // namespace

std::string VertexRecord::Label() const {
  std::string where = "(";
  for (size_t i = 0; i < coordinates.size(); ++i) where += (i ? ", " : "") + ToString(coordinates[i]);
  where += ")";
  if (qtons < 0) return "none at " + where;
  const std::string prefix = scale == 1 ? "" : "(1/" + scale.get_str() + ")*";
  return prefix + surface_type + " at " + where;
}

QtonsTable EnumerateQtons(const IdealTriangulation& t, const Homology& h, const RatVector& alpha,
                          const QtonsOptions& options) {
  const int n = t.size();
  const MatchingSystem m = BuildMatching(t);
  EnumerationOptions eo;
  eo.threads = options.threads;
  eo.exclusive = AdmissibilityGroups(n, true);
  const std::vector<IntVector> rays = ExtremeRays({m.oriented, static_cast<size_t>(kOrientedPerTet * n)}, eo);

  QtonsTable table;
  table.basis = h.basis_id();
  table.b1 = h.b1();
  table.internal_basis = t.has_internal_basis();
  table.entries.resize(rays.size());
  for (size_t i = 0; i < rays.size(); ++i) {
    table.entries[i].index = static_cast<int>(i);
    table.entries[i].vector = rays[i];
  }
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < rays.size(); i = next++) Annotate(t, h, alpha, options.reconstruct, &table.entries[i]);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(rays.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return table;
}

QtonsTable EnumerateQtons(const IdealTriangulation& t, const QtonsOptions& options) {
  const Homology h(t);
  return EnumerateQtons(t, h, SolveAngleStructure(t).alpha, options);
}

NormBall ComputeNormBall(const QtonsTable& table) {
  NormBall ball;
  ball.b1 = table.b1;
  ball.basis = table.basis;
  ball.internal_basis = table.internal_basis;

  std::map<RatVector, std::vector<int>> points;  // unit point -> rays landing there
  int dropped = 0;
  for (const auto& e : table.entries) {
    if (e.euler > 0) throw ContractError(kNotZeroEfficient);
    if (e.euler == 0) {
      ++dropped;
      if (!IsZero(e.homology))
        ball.warnings.push_back("ray " + std::to_string(e.index) +
                                " has zero Euler characteristic but nonzero homology class; manifold may be toroidal");
      continue;
    }
    points[Scaled(e.homology, Rational(1) / -e.euler)].push_back(e.index);
  }
  if (dropped) ball.notes.push_back(std::to_string(dropped) + " rays with zero Euler characteristic dropped");

  std::vector<RatVector> pts;
  for (const auto& [p, ids] : points)
    if (!IsZero(p)) pts.push_back(p);
  if (!pts.empty()) ball.polytope = ConvexHull(pts);

  std::vector<RatVector> verts = ball.polytope.vertices;
  std::sort(verts.begin(), verts.end());
  for (const auto& v : verts) {
    VertexRecord rec;
    rec.coordinates = v;
    auto it = points.find(v);
    if (it != points.end()) {
      // Smallest |chi|, then embedded, then fewest boundary circles, then
      // lowest index.
      auto rank = [&](const QtonsEntry& e) {
        const int boundary = e.surface ? e.surface->boundary_components : std::numeric_limits<int>::max();
        return std::make_tuple(-e.euler, !e.embedded, boundary);
      };
      const QtonsEntry* best = nullptr;
      for (int id : it->second) {
        const QtonsEntry& e = table.entries[id];
        if (!best || rank(e) < rank(*best)) best = &e;
      }
      rec.qtons = best->index;
      rec.scale = -best->euler.get_num() / best->euler.get_den();
      rec.embedded = best->embedded;
      rec.surface_type = best->surface ? best->surface->type : "?";
    }
    ball.vertices.push_back(rec);
  }

  std::set<RatVector> vs(verts.begin(), verts.end());
  ball.centrally_symmetric = true;
  for (const auto& v : verts)
    if (!vs.count(Scaled(v, Rational(-1)))) ball.centrally_symmetric = false;
  if (!ball.centrally_symmetric) ball.warnings.push_back("vertex set is not centrally symmetric");

  ball.certified = ball.b1 >= 2;
  if (ball.b1 == 1) {
    ball.notes.push_back("b1 = 1: not a certified norm ball; reporting an upper bound for the generator");
    Rational reach = 0;
    for (const auto& p : pts) reach = std::max(reach, Rational(abs(p[0])));
    if (reach > 0) {
      ball.generator_bound = Rational(1) / reach;
    } else {
      ball.notes.push_back("no bound available");
    }
  } else if (ball.b1 == 0) {
    ball.notes.push_back("b1 = 0: no second homology");
  }
  return ball;
}

NormBall ComputeNormBall(const IdealTriangulation& t, const QtonsOptions& options) {
  return ComputeNormBall(EnumerateQtons(t, options));
}

}  // namespace spunnorm
