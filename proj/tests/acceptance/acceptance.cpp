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


// Acceptance checks 1-8. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Tolerances are exact; time budgets are pinned below.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "spunnorm/angle_structures.hpp"
#include "spunnorm/boundary_maps.hpp"
#include "spunnorm/homology.hpp"
#include "spunnorm/norm_ball.hpp"
#include "spunnorm/qcoords.hpp"
#include "spunnorm/surface_build.hpp"
#include "test_util.hpp"

namespace {

using namespace spunnorm;
using spunnorm::testing::BruteForceRays;
using spunnorm::testing::CensusFixtures;
using spunnorm::testing::Fixture;
using spunnorm::testing::FixturePath;
using spunnorm::testing::IsZero;
using spunnorm::testing::RandomMatrix;
using Clock = std::chrono::steady_clock;

constexpr double kBudgetPipeline = 5;
constexpr double kBudgetOracle = 60;
constexpr double kBudgetTranslation = 10;
constexpr double kBudgetEulerPerFixture = 120;
constexpr double kBudgetHomologyPerFixture = 60;
constexpr double kBudgetAngles = 5;
constexpr double kBudgetCensusPerFixture = 1800;

constexpr unsigned kSeed = 20260101;
constexpr int kSampledSums = 40;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string FormatSeconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// Collects failures for one criterion.
struct Check {
  std::vector<std::string> failures;
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string Pair(const PeripheralPair& p) {
  return "(" + p.meridian.get_str() + "," + p.longitude.get_str() + ")";
}

std::string Pairs(const std::vector<PeripheralPair>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + Pair(v[i]);
  return s + "]";
}

IntVector Scaled(const IntVector& v, long k) {
  IntVector out(v);
  for (auto& x : out) x *= k;
  return out;
}

struct FixtureData {
  IdealTriangulation t;
  RatVector alpha;
  std::vector<IntVector> rays;
  double enumeration_seconds = 0;
};

// Enumerated once and shared by criteria 3-5.
class Fixtures {
 public:
  explicit Fixtures(unsigned threads) : threads_(threads) {}

  FixtureData& Get(const std::string& name) {
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    const auto start = Clock::now();
    FixtureData d{Fixture(name), {}, {}, 0};
    d.alpha = SolveAngleStructure(d.t).alpha;
    const Homology h(d.t);
    for (auto& e : EnumerateQtons(d.t, h, d.alpha, {threads_, false}).entries) d.rays.push_back(std::move(e.vector));
    d.enumeration_seconds = Seconds(start);
    return cache_.emplace(name, std::move(d)).first->second;
  }

 private:
  unsigned threads_;
  std::map<std::string, FixtureData> cache_;
};

// Rays, their doubles and a fixed sample of admissible pairwise sums.
std::vector<IntVector> SamplePoints(const FixtureData& d) {
  std::vector<IntVector> pts;
  for (const auto& r : d.rays) {
    pts.push_back(r);
    pts.push_back(Scaled(r, 2));
  }
  if (d.rays.size() < 2) return pts;
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<size_t> pick(0, d.rays.size() - 1);
  int found = 0;
  for (int attempt = 0; attempt < 100 * kSampledSums && found < kSampledSums; ++attempt) {
    const size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    IntVector s(d.rays[i].size());
    for (size_t k = 0; k < s.size(); ++k) s[k] = d.rays[i][k] + d.rays[j][k];
    if (!IsAdmissible(s, d.t.size())) continue;
    pts.push_back(std::move(s));
    ++found;
  }
  return pts;
}

IntVector Figure8Vector() {
  IntVector x(12);
  x[PositivePair(0, 3)] = 1;
  x[PositivePair(1, 2)] = 1;
  x[6 + PositivePair(0, 2)] = 1;
  return x;
}

// ---------------------------------------------------------------------------

std::vector<std::string> Criterion1(double& seconds) {
  const auto start = Clock::now();
  Check c;
  const IdealTriangulation t = Fixture("figure8.json");
  c.Expect(t.size() == 2, "fixture: two tetrahedra");
  c.Expect(t.edge_classes().size() == 2, "fixture: two edge classes");
  c.Expect(t.num_cusps() == 1 && t.cusps()[0].euler == 0, "fixture: one torus cusp");
  c.Expect(t.num_cusps() == 1 && t.cusps()[0].triangles.size() == 8, "fixture: eight cusp triangles");

  const IntVector x = Figure8Vector();
  c.Expect(IsZero(BuildMatching(t).oriented * x), "x fails the oriented matching equations");
  const RatVector alpha = SolveAngleStructure(t).alpha;
  c.Expect(EulerCharacteristic(alpha, x) == -1, "chi*(x) != -1");

  const BoundaryClass b = BoundaryClasses(t, x);
  c.Expect(b.outward.size() == 1 && b.outward[0] == PeripheralPair{2, 1}, "outward class " + Pairs(b.outward));
  c.Expect(b.inward.size() == 1 && b.inward[0] == PeripheralPair{-2, 0}, "inward class " + Pairs(b.inward));

  const SurfaceReport s = Analyze(Reconstruct(t, x, alpha));
  c.Expect(s.connected && s.orientable && s.type == "S_0,3", "oriented reconstruction is " + s.type);
  const SurfaceReport u = Analyze(Reconstruct(t, ForgetOrientation(x), alpha));
  c.Expect(u.connected && !u.orientable && u.euler == -1 && u.boundary_components == 1,
           "unoriented reconstruction is " + u.type);
  c.Expect(!IsEmbedded(t, x, alpha), "x reported embedded");
  c.Expect(!EndsEmbeddable(t, x), "ends reported embeddable");

  const NormBall ball = ComputeNormBall(t);
  c.Expect(ball.b1 == 1 && !ball.certified, "expected the one-dimensional branch");
  c.Expect(ball.generator_bound && *ball.generator_bound == 1, "generator bound is not 1");
  bool types = ball.vertices.size() == 2;
  for (const auto& v : ball.vertices) types = types && v.surface_type == "S_0,3" && v.scale == 1;
  c.Expect(types, "bound vertices are not represented by S_0,3");
  seconds = Seconds(start);
  c.Expect(seconds < kBudgetPipeline, "over the time budget");
  return c.failures;
}

std::vector<std::string> Criterion2(double& seconds) {
  const auto start = Clock::now();
  Check c;
  const IdealTriangulation t = Fixture("figure8.json");
  const IntMatrix a = BuildMatching(t).oriented;
  c.Expect(a.cols() == 12 && a.rows() == 4, "figure-8 oriented cone is not 12 x 4");
  c.Expect(ExtremeRays({a, 12}) == BruteForceRays(a, 12), "figure-8 oriented cone");
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 2 + rng() % 9;   // 2..10
    const size_t m = 1 + rng() % 5;   // 1..5
    const IntMatrix r = RandomMatrix(rng, m, n, 3);
    if (ExtremeRays({r, n}) != BruteForceRays(r, n))
      c.Expect(false, "random cone " + std::to_string(trial) + " (n=" + std::to_string(n) + ")");
  }
  seconds = Seconds(start);
  c.Expect(seconds < kBudgetOracle, "over the time budget");
  return c.failures;
}

std::vector<std::string> Criterion3(Fixtures& fx, double& seconds) {
  Check c;
  std::vector<FixtureData*> data{&fx.Get("figure8.json"), &fx.Get("K7a1.tri")};
  const auto start = Clock::now();
  std::mt19937 rng(kSeed);
  int inside = 0, outside = 0;
  for (int i = 0; i < 200; ++i) {
    const FixtureData& d = *data[i % 2];
    const MatchingSystem m = BuildMatching(d.t);
    const size_t n = 6 * d.t.size();
    IntVector x(n);
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < terms; ++k) {
      const IntVector& r = d.rays[rng() % d.rays.size()];
      const long w = 1 + static_cast<long>(rng() % 5);
      for (size_t j = 0; j < n; ++j) x[j] += w * r[j];
    }
    if (i >= 100) {
      // Perturb until some matching row is nonzero.
      do {
        x[rng() % n] += (rng() % 2) ? 1 : -1;
      } while (IsZero(m.oriented * x));
    }
    bool translations_vanish = true;
    for (const auto& row : m.oriented_rows)
      translations_vanish = translations_vanish && EdgeTranslation(d.t, row.edge, row.end, x).total == 0;
    const bool rows_vanish = IsZero(m.oriented * x);
    c.Expect(translations_vanish == rows_vanish, "vector " + std::to_string(i) + ": translation/matching disagree");
    c.Expect(rows_vanish == (i < 100), "vector " + std::to_string(i) + ": unexpected cone membership");
    (rows_vanish ? inside : outside)++;
  }
  seconds = Seconds(start);
  c.Expect(inside == 100 && outside == 100, "sample split is not 100/100");
  c.Expect(seconds < kBudgetTranslation, "over the time budget");
  return c.failures;
}

// Euler characteristic by counting cells at two fixed truncation levels; no
// feedback from chi*.
std::optional<long> CountedEuler(const IdealTriangulation& t, const IntVector& x) {
  long top = 0;
  for (const auto& v : x) top = std::max(top, v.get_si());
  const long e1 = Analyze(ReconstructAtCutoff(t, x, top + 2)).euler;
  const long e2 = Analyze(ReconstructAtCutoff(t, x, 2 * top + 4)).euler;
  if (e1 != e2) return std::nullopt;
  return e1;
}

std::vector<std::string> Criterion4(Fixtures& fx, std::string& detail) {
  Check c;
  std::ostringstream info;
  for (const auto& name : CensusFixtures()) {
    FixtureData& d = fx.Get(name);
    const auto start = Clock::now();
    const auto pts = SamplePoints(d);
    int bad = 0;
    for (const auto& x : pts) {
      const auto e = CountedEuler(d.t, x);
      if (!e || Rational(*e) != EulerCharacteristic(d.alpha, x)) ++bad;
    }
    const double s = Seconds(start);
    info << " " << name << ": " << pts.size() << " points " << FormatSeconds(s) << " (enum "
         << FormatSeconds(d.enumeration_seconds) << ");";
    c.Expect(bad == 0, name + ": " + std::to_string(bad) + " mismatches");
    c.Expect(s < kBudgetEulerPerFixture, name + ": over the time budget");
  }
  detail = info.str();
  return c.failures;
}

std::vector<std::string> Criterion5(Fixtures& fx, std::string& detail) {
  Check c;
  std::ostringstream info;
  for (const auto& name : CensusFixtures()) {
    FixtureData& d = fx.Get(name);
    const auto start = Clock::now();
    const Homology h(d.t);
    const auto pts = SamplePoints(d);
    int not_cycle = 0, wrong_boundary = 0;
    for (const auto& x : pts) {
      const IntVector phi = PhiChain(d.t, h.complex(), x);
      if (!IsZero(h.complex().d2 * phi)) {
        ++not_cycle;
        continue;
      }
      if (!h.peripheral_available()) continue;
      const auto dm = h.ConnectingMap(phi);
      const BoundaryClass b = BoundaryClasses(d.t, x);
      for (int k = 0; k < d.t.num_cusps(); ++k) {
        if (dm[k].meridian != b.outward[k].meridian + b.inward[k].meridian ||
            dm[k].longitude != b.outward[k].longitude + b.inward[k].longitude) {
          ++wrong_boundary;
          break;
        }
      }
    }
    const double s = Seconds(start);
    info << " " << name << ": " << pts.size() << " points" << (h.peripheral_available() ? "" : " (cycles only)")
         << " " << FormatSeconds(s) << ";";
    c.Expect(not_cycle == 0, name + ": " + std::to_string(not_cycle) + " chains are not cycles");
    c.Expect(wrong_boundary == 0, name + ": " + std::to_string(wrong_boundary) + " connecting-map mismatches");
    c.Expect(s < kBudgetHomologyPerFixture, name + ": over the time budget");
  }
  detail = info.str();
  return c.failures;
}

// Tetrahedron sums 1, edge sums 2 and zero holonomy, checked by substitution.
bool CheckAngles(const IdealTriangulation& t, const RatVector& a) {
  if (a.size() != static_cast<size_t>(3 * t.size())) return false;
  for (int tet = 0; tet < t.size(); ++tet)
    if (a[3 * tet] + a[3 * tet + 1] + a[3 * tet + 2] != 1) return false;
  for (const auto& e : t.edge_classes()) {
    Rational sum = 0;
    for (int tet = 0; tet < t.size(); ++tet)
      for (int type = 0; type < 3; ++type) sum += EdgeIncidence(t, e.id, tet, type) * a[3 * tet + type];
    if (sum != 2) return false;
  }
  for (int k = 0; k < t.num_cusps(); ++k)
    if (RotationalHolonomy(t, a, t.basis(k).meridian) != 0 || RotationalHolonomy(t, a, t.basis(k).longitude) != 0)
      return false;
  return true;
}

std::vector<std::string> Criterion6(double& seconds) {
  const auto start = Clock::now();
  Check c;
  std::vector<std::string> names{"figure8.json"};
  for (const auto& n : CensusFixtures()) names.push_back(n);
  for (const auto& name : names) {
    const IdealTriangulation t = Fixture(name);
    try {
      c.Expect(CheckAngles(t, SolveAngleStructure(t).alpha), name + ": solution fails substitution");
    } catch (const std::exception& e) {
      c.Expect(false, name + ": " + e.what());
    }
  }
  const IdealTriangulation f8 = Fixture("figure8.json");
  const RatVector third(6, Rational(1, 3));
  c.Expect(CheckAngles(f8, third), "figure-8: uniform 1/3 fails substitution");
  c.Expect(SatisfiesAngleSystem(f8, third), "figure-8: uniform 1/3 rejected by the solver's system");
  seconds = Seconds(start);
  c.Expect(seconds < kBudgetAngles, "over the time budget");
  return c.failures;
}

// ---------------------------------------------------------------------------
// Census reproduction.

using Triple = std::vector<PeripheralPair>;

// Some relabelling of cusps with a sign per cusp carries every expected
// triple to the matching observed triple, up to an overall sign per vertex.
bool MatchUpToCuspRelabelling(const std::vector<Triple>& expected, const std::vector<Triple>& observed,
                              std::string& map_used) {
  const size_t n = expected.front().size();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      bool all = true;
      for (size_t v = 0; v < expected.size() && all; ++v) {
        bool some = false;
        for (int overall : {1, -1}) {
          bool ok = true;
          for (size_t k = 0; k < n && ok; ++k) {
            const int s = overall * ((signs >> k) & 1 ? -1 : 1);
            const PeripheralPair& e = expected[v][k];
            const PeripheralPair& o = observed[v][perm[k]];
            ok = o.meridian == s * e.meridian && o.longitude == s * e.longitude;
          }
          some = some || ok;
        }
        all = some;
      }
      if (all) {
        std::ostringstream m;
        for (size_t k = 0; k < n; ++k) m << (k ? " " : "") << k << "->" << ((signs >> k) & 1 ? "-" : "+") << perm[k];
        map_used = m.str();
        return true;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

void CensusL9a46(Check& c, unsigned threads, std::ostringstream& info) {
  const IdealTriangulation t = Fixture("L9a46.tri");
  const RatVector alpha = SolveAngleStructure(t).alpha;
  const Homology h(t);
  const QtonsTable table = EnumerateQtons(t, h, alpha, {threads, true});
  const NormBall ball = ComputeNormBall(table);
  c.Expect(ball.certified && ball.polytope.dimension == 3, "L9a46: expected a certified 3-dimensional ball");
  c.Expect(ball.vertices.size() == 6 && ball.polytope.facets.size() == 8, "L9a46: not an octahedron");
  c.Expect(ball.centrally_symmetric, "L9a46: not centrally symmetric");

  // Positive vertex on each axis.
  std::vector<const VertexRecord*> axis(3, nullptr);
  for (const auto& v : ball.vertices) {
    int nonzero = 0, k = -1;
    for (int i = 0; i < 3; ++i)
      if (v.coordinates[i] != 0) ++nonzero, k = i;
    if (nonzero == 1 && v.coordinates[k] > 0) axis[k] = &v;
  }
  if (std::count(axis.begin(), axis.end(), nullptr)) {
    c.Expect(false, "L9a46: vertices are not on the coordinate axes");
    return;
  }
  const VertexRecord* once = nullptr;
  std::vector<const VertexRecord*> twice;
  for (const auto* v : axis) {
    if (v->surface_type == "S_1,1" && v->scale == 1)
      once = v;
    else if (v->surface_type == "S_1,2" && v->scale == 2)
      twice.push_back(v);
  }
  c.Expect(once && twice.size() == 2, "L9a46: expected S_1,1 once and (1/2)*S_1,2 twice");
  if (!once || twice.size() != 2) return;
  for (const auto* v : axis) c.Expect(v->qtons >= 0, "L9a46: a vertex has no qtons representative");
  if (once->qtons < 0 || twice[0]->qtons < 0 || twice[1]->qtons < 0) return;

  const std::vector<Triple> s1{{{0, 1}, {-1, 0}, {0, 0}}}, s2{{{-1, 0}, {0, 1}, {0, 0}}};
  const Triple s3{{0, 0}, {0, 0}, {0, 1}};
  const Triple& o3 = table.entries[once->qtons].spinning;
  const Triple& oa = table.entries[twice[0]->qtons].spinning;
  const Triple& ob = table.entries[twice[1]->qtons].spinning;
  std::string map;
  const bool ok = MatchUpToCuspRelabelling({s1[0], s2[0], s3}, {oa, ob, o3}, map) ||
                  MatchUpToCuspRelabelling({s1[0], s2[0], s3}, {ob, oa, o3}, map);
  c.Expect(ok, "L9a46: boundary slope triples " + Pairs(oa) + " " + Pairs(ob) + " " + Pairs(o3) +
                   " do not match under any cusp relabelling");
  if (ok) info << " L9a46 cusp map " << map << ";";
}

void CensusL12n1738(Check& c, unsigned threads) {
  const IdealTriangulation t = Fixture("L12n1738_filled.tri");
  const NormBall ball = ComputeNormBall(t, {threads, true});
  const std::vector<std::pair<RatVector, std::string>> expected{
      {{1, 0, 0}, "S_0,3"}, {{0, 1, 0}, "S_0,3"}, {{0, 0, Rational(1, 2)}, "(1/2)*S_2,0"},
      {{0, 0, Rational(-1, 2)}, "(1/2)*S_2,0"}, {{0, -1, 0}, "S_0,3"}, {{-1, 0, 0}, "S_0,3"}};
  c.Expect(ball.vertices.size() == expected.size(), "L12n1738: expected six vertices");
  for (const auto& [coords, label] : expected) {
    bool found = false;
    for (const auto& v : ball.vertices) {
      if (v.coordinates != coords) continue;
      found = true;
      const std::string got = v.Label();
      c.Expect(got.rfind(label + " at", 0) == 0, "L12n1738: vertex " + ToString(coords) + " is " + got);
      c.Expect(v.embedded, "L12n1738: vertex " + ToString(coords) + " is not embedded");
    }
    c.Expect(found, "L12n1738: missing vertex " + ToString(coords));
  }
}

void CensusK7a1(Check& c, unsigned threads) {
  const IdealTriangulation t = Fixture("K7a1.tri");
  const RatVector alpha = SolveAngleStructure(t).alpha;
  const Homology h(t);
  const QtonsTable table = EnumerateQtons(t, h, alpha, {threads, true});
  const NormBall ball = ComputeNormBall(table);
  c.Expect(ball.generator_bound && *ball.generator_bound == 3, "K7a1: bound is not 3");
  c.Expect(ball.vertices.size() == 2, "K7a1: expected two bound vertices");
  for (const auto& v : ball.vertices) {
    c.Expect(abs(v.coordinates.at(0)) == Rational(1, 3), "K7a1: vertex " + v.Label());
    c.Expect(v.surface_type == "S_2,1" && v.scale == 3, "K7a1: representative " + v.Label());
    if (v.qtons < 0) {
      c.Expect(false, "K7a1: vertex without qtons");
      continue;
    }
    const QtonsEntry& e = table.entries[v.qtons];
    c.Expect(e.ends_embeddable, "K7a1: ends not embedded for qtons " + std::to_string(v.qtons));
    c.Expect(!e.embedded, "K7a1: qtons " + std::to_string(v.qtons) + " reported embedded");
  }
}

// The surfaces are identified by their properties among the vertex solutions
// of the unoriented admissible cone.
void CensusL13n124(Check& c, unsigned threads, std::ostringstream& info) {
  const IdealTriangulation t = Fixture("L13n124.tri");
  const RatVector alpha = SolveAngleStructure(t).alpha;
  const MatchingSystem m = BuildMatching(t);
  const int n = t.size();
  EnumerationOptions opt;
  opt.threads = threads;
  opt.exclusive = AdmissibilityGroups(n, false);
  const auto rays = ExtremeRays({m.unoriented, static_cast<size_t>(3 * n)}, opt);
  const Triple spin_s{{-2, 1}, {-8, 1}}, spin_r{{0, 1}, {-2, 0}}, spin_f{{-2, 2}, {-10, 1}};
  const Triple r_out{{0, 1}, {-1, 0}}, r_in{{0, 0}, {1, 0}};

  std::vector<size_t> s_found, r_found;
  std::vector<std::pair<size_t, size_t>> f_found;
  for (size_t i = 0; i < rays.size(); ++i) {
    const auto spin = SpinningSlopes(t, rays[i]);
    if (spin != spin_s && spin != spin_r) continue;
    const SurfaceReport r = Analyze(Reconstruct(t, rays[i], alpha));
    if (spin == spin_s && r.connected && !r.orientable && r.euler == -5 && r.boundary_components == 2)
      s_found.push_back(i);
    if (spin != spin_r || !r.connected || !r.orientable || r.euler != -1 || r.boundary_components != 3) continue;
    const auto lift = TransverseOrientation(t, rays[i], alpha);
    if (!lift) continue;
    bool slopes = false;
    for (const IntVector& x : {*lift, ReverseOrientation(*lift)}) {
      const BoundaryClass b = BoundaryClasses(t, x);
      slopes = slopes || (b.outward == r_out && b.inward == r_in);
    }
    if (slopes) r_found.push_back(i);
  }
  for (size_t ri : r_found)
    for (size_t si : s_found) {
      IntVector f;
      try {
        f = HakenSum(t, rays[ri], rays[si]);
      } catch (const InputError&) {
        continue;
      }
      const SurfaceReport r = Analyze(Reconstruct(t, f, alpha));
      if (r.connected && !r.orientable && r.euler == -6 && r.boundary_components == 3 &&
          SpinningSlopes(t, f) == spin_f)
        f_found.emplace_back(ri, si);
    }
  c.Expect(!s_found.empty(), "L13n124: no vertex surface S");
  c.Expect(!r_found.empty(), "L13n124: no vertex surface R");
  c.Expect(!f_found.empty(), "L13n124: no admissible R + S with the listed properties");
  info << " L13n124 " << rays.size() << " vertex solutions, S " << s_found.size() << ", R " << r_found.size()
       << ", F " << f_found.size() << ";";
}

std::vector<std::string> Criterion7(unsigned threads, std::string& detail) {
  Check c;
  std::ostringstream info;
  const std::vector<std::pair<std::string, std::function<void()>>> parts{
      {"L9a46", [&] { CensusL9a46(c, threads, info); }},
      {"L12n1738", [&] { CensusL12n1738(c, threads); }},
      {"K7a1", [&] { CensusK7a1(c, threads); }},
      {"L13n124", [&] { CensusL13n124(c, threads, info); }}};
  for (const auto& [name, run] : parts) {
    const auto start = Clock::now();
    try {
      run();
    } catch (const std::exception& e) {
      c.Expect(false, name + ": " + e.what());
    }
    const double s = Seconds(start);
    info << " " << name << " " << FormatSeconds(s) << ";";
    c.Expect(s < kBudgetCensusPerFixture, name + ": over the time budget");
  }
  detail = info.str();
  return c.failures;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> Criterion8(const std::string& cli, double& seconds) {
  const auto start = Clock::now();
  Check c;
  if (cli.empty()) return {"no CLI path given (--cli)"};
  const auto dir = std::filesystem::temp_directory_path() / ("spunnorm_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string input = FixturePath("L12n1738_filled.tri");
  std::vector<std::string> outputs;
  for (const char* threads : {"1", "1", "2"}) {
    const std::string out = (dir / ("run" + std::to_string(outputs.size()) + ".json")).string();
    const std::string cmd =
        "\"" + cli + "\" normball \"" + input + "\" --threads " + threads + " --json \"" + out + "\" > /dev/null";
    const int status = std::system(cmd.c_str());
    c.Expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "normball exited with status " + std::to_string(status));
    outputs.push_back(ReadFile(out));
  }
  std::filesystem::remove_all(dir);
  c.Expect(!outputs[0].empty(), "empty JSON report");
  c.Expect(outputs[0] == outputs[1], "two single-threaded runs differ");
  c.Expect(outputs[0] == outputs[2], "threaded run differs");
  seconds = Seconds(start);
  return c.failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spunnorm acceptance checks"};
  std::string cli;
  unsigned threads = 1;
  std::vector<int> only;
  app.add_option("--cli", cli, "Path to the spunnorm executable (criterion 8)");
  app.add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--only", only, "Run only these criteria")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  Fixtures fx(threads);
  int failed = 0;
  auto report = [&](int id, const std::string& title, const std::function<std::vector<std::string>(std::string&)>& run) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) return;
    std::string detail;
    std::vector<std::string> failures;
    try {
      failures = run(detail);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    failed += !failures.empty();
    std::cout << "Criterion " << id << " [" << title << "]: " << (failures.empty() ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " -" << detail;
    std::cout << "\n";
    for (const auto& f : failures) std::cout << "    " << f << "\n";
    std::cout.flush();
  };
  auto timed = [](std::vector<std::string> (*f)(double&)) {
    return [f](std::string& detail) {
      double s = 0;
      auto out = f(s);
      detail = " " + FormatSeconds(s);
      return out;
    };
  };

  report(1, "figure-8 pipeline", timed(Criterion1));
  report(2, "extreme rays vs oracle", timed(Criterion2));
  report(3, "matching vs translation", [&](std::string& d) {
    double s = 0;
    auto out = Criterion3(fx, s);
    d = " " + FormatSeconds(s);
    return out;
  });
  report(4, "Euler characteristic", [&](std::string& d) { return Criterion4(fx, d); });
  report(5, "homology consistency", [&](std::string& d) { return Criterion5(fx, d); });
  report(6, "angle structures", timed(Criterion6));
  report(7, "census reproduction", [&](std::string& d) { return Criterion7(threads, d); });
  report(8, "determinism", [&](std::string& d) {
    double s = 0;
    auto out = Criterion8(cli, s);
    d = " " + FormatSeconds(s);
    return out;
  });
  return failed ? 1 : 0;
}
