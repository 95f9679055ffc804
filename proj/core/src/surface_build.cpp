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


#include "spunnorm/surface_build.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "spunnorm/angle_structures.hpp"
#include "spunnorm/qcoords.hpp"

namespace spunnorm {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int Find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void Join(int a, int b) { parent[Find(a)] = Find(b); }
};

// One transversely oriented normal arc: the corner of the face it cuts off,
// whether its transverse orientation points toward that corner (+1) or away
// (-1), and its label.
inline constexpr int kKinds = 5;

struct Arc {
  int corner;
  int toward;
  long label;
};

class Builder {
 public:
  Builder(const IdealTriangulation& t, const IntVector& x, long cutoff)
      : t_(t),
        oriented_(x.size() == static_cast<size_t>(kOrientedPerTet * t.size())),
        cutoff_(cutoff),
        slots_(static_cast<size_t>(kKinds) * t.size() * kOrientedPerTet) {
    counts_.reserve(x.size());
    for (const auto& v : x) counts_.push_back(v.get_si());
  }

  // Instantiates every disc reachable from the quads with triangle levels up
  // to twice the cutoff, then keeps the triangles above the cutoff only when
  // they fill a finite hole rather than leading into the spinning tail.
  SurfaceComplex Run() {
    const int per = oriented_ ? kOrientedPerTet : kTypesPerTet;
    for (int tet = 0; tet < t_.size(); ++tet)
      for (int k = 0; k < per; ++k)
        for (long copy = 0; copy < counts_[per * tet + k]; ++copy)
          Intern({oriented_ ? DiscKind::kQuad : DiscKind::kQuadType, tet, k, copy});
    const long outer = 2 * cutoff_;
    std::vector<bool> escapes;
    for (size_t d = 0; d < discs_.size(); ++d) {
      escapes.resize(discs_.size());
      for (int f = 0; f < 4; ++f) {
        if (!HasArc(discs_[d], f)) continue;
        const Arc a = ArcOf(discs_[d], f);
        const Gluing& g = t_.gluing(discs_[d].tet, f);
        Disc other;
        if (!Decode(g.tet, g.perm[f], g.perm[a.corner], a.toward, a.label, &other)) continue;
        if (IsTriangle(other) && other.level > outer) {
          escapes[d] = true;
          continue;
        }
        const int o = Intern(other);
        neighbours_[d][f] = o;
        neighbours_[o][g.perm[f]] = static_cast<int>(d);
      }
    }
    escapes.resize(discs_.size());
    const int nd = static_cast<int>(discs_.size());

    auto deep = [&](int d) { return IsTriangle(discs_[d]) && discs_[d].level > cutoff_; };
    UnionFind regions(nd);
    for (int d = 0; d < nd; ++d)
      for (int f = 0; f < 4; ++f) {
        const int o = neighbours_[d][f];
        if (o >= 0 && deep(d) && deep(o)) regions.Join(d, o);
      }
    std::vector<bool> tail(nd, false);
    for (int d = 0; d < nd; ++d)
      if (deep(d) && escapes[d]) tail[regions.Find(d)] = true;
    std::vector<bool> keep(nd);
    for (int d = 0; d < nd; ++d) keep[d] = !deep(d) || !tail[regions.Find(d)];

    // Drop kept pieces cut off from every quad.
    UnionFind pieces(nd);
    for (int d = 0; d < nd; ++d)
      for (int f = 0; f < 4; ++f) {
        const int o = neighbours_[d][f];
        if (o >= 0 && keep[d] && keep[o]) pieces.Join(d, o);
      }
    std::vector<bool> anchored(nd, false);
    for (int d = 0; d < nd; ++d)
      if (!IsTriangle(discs_[d])) anchored[pieces.Find(d)] = true;
    std::vector<int> remap(nd, -1);
    std::vector<Disc> discs;
    for (int d = 0; d < nd; ++d)
      if (keep[d] && anchored[pieces.Find(d)]) {
        remap[d] = static_cast<int>(discs.size());
        discs.push_back(discs_[d]);
      }
    std::vector<std::array<int, 4>> neighbours(discs.size(), {-1, -1, -1, -1});
    for (int d = 0; d < nd; ++d) {
      if (remap[d] < 0) continue;
      for (int f = 0; f < 4; ++f) {
        const int o = neighbours_[d][f];
        if (o >= 0) neighbours[remap[d]][f] = remap[o];
      }
    }
    discs_ = std::move(discs);
    neighbours_ = std::move(neighbours);

    SurfaceComplex c;
    c.oriented = oriented_;
    c.cutoff = cutoff_;
    c.discs = discs_;
    c.neighbours = neighbours_;
    Finish(&c);
    return c;
  }

 private:
  static bool IsTriangle(const Disc& d) {
    return d.kind == DiscKind::kSmallTriangle || d.kind == DiscKind::kLargeTriangle ||
           d.kind == DiscKind::kTriangle;
  }

  static bool HasArc(const Disc& d, int f) { return IsTriangle(d) ? f != d.index : true; }

  long Count(int tet, int k) const { return counts_[(oriented_ ? kOrientedPerTet : kTypesPerTet) * tet + k]; }

  Arc ArcOf(const Disc& d, int f) const {
    switch (d.kind) {
      case DiscKind::kQuad: {
        const int a = kEdgeVertices[d.index][0], b = kEdgeVertices[d.index][1];
        const auto cd = OtherTwo(a, b);
        const long n = Count(d.tet, d.index);
        if (f == b) return {a, 1, d.level};
        if (f == a) return {b, 1, d.level};
        if (f == cd[0]) return {cd[1], -1, d.level - n};
        return {cd[0], -1, d.level - n};
      }
      case DiscKind::kQuadType: {
        const int a = kEdgeVertices[d.index][0], b = kEdgeVertices[d.index][1];
        const auto cd = OtherTwo(a, b);
        const long n = Count(d.tet, d.index);
        if (f == b) return {a, 1, d.level};
        if (f == a) return {b, 1, d.level};
        if (f == cd[0]) return {cd[1], -1, n - 1 - d.level};
        return {cd[0], -1, n - 1 - d.level};
      }
      case DiscKind::kSmallTriangle:
        return {d.index, 1, Count(d.tet, PositivePair(d.index, f)) + d.level};
      case DiscKind::kLargeTriangle: {
        const auto uv = OtherTwo(d.index, f);
        return {d.index, -1, -Count(d.tet, PositivePair(uv[0], uv[1])) - 1 - d.level};
      }
      case DiscKind::kTriangle:
        return {d.index, 1, Count(d.tet, QuadTypeSeparating(d.index, f)) + d.level};
    }
    return {};
  }

  // The disc owning the arc with the given corner, class and label in face f
  // of tet. Returns false for labels no disc carries.
  bool Decode(int tet, int f, int w, int toward, long label, Disc* out) const {
    if (oriented_) {
      if (toward > 0) {
        const int pair = PositivePair(w, f);
        const long n = Count(tet, pair);
        if (label < 0) return false;
        *out = label < n ? Disc{DiscKind::kQuad, tet, pair, label}
                         : Disc{DiscKind::kSmallTriangle, tet, w, label - n};
        return true;
      }
      const auto uv = OtherTwo(w, f);
      const int pair = PositivePair(uv[0], uv[1]);
      const long n = Count(tet, pair);
      if (label >= 0) return false;
      *out = label >= -n ? Disc{DiscKind::kQuad, tet, pair, label + n}
                         : Disc{DiscKind::kLargeTriangle, tet, w, -label - n - 1};
      return true;
    }
    const int type = QuadTypeSeparating(w, f);
    const long n = Count(tet, type);
    if (label < 0) return false;
    if (label >= n) {
      *out = {DiscKind::kTriangle, tet, w, label - n};
      return true;
    }
    const bool near_pair = f == kEdgeVertices[type][0] || f == kEdgeVertices[type][1];
    *out = {DiscKind::kQuadType, tet, type, near_pair ? label : n - 1 - label};
    return true;
  }

  // Levels are nonnegative, so each (kind, tet, index) slot is a dense table.
  int Intern(const Disc& d) {
    auto& slot = slots_[(static_cast<size_t>(d.kind) * t_.size() + d.tet) * kOrientedPerTet + d.index];
    const auto level = static_cast<size_t>(d.level);
    if (level >= slot.size()) slot.resize(std::max(level + 1, 2 * slot.size()), -1);
    if (slot[level] < 0) {
      slot[level] = static_cast<int>(discs_.size());
      discs_.push_back(d);
      neighbours_.push_back({-1, -1, -1, -1});
    }
    return slot[level];
  }

  // Tetrahedron edges carrying a corner of the disc.
  static bool HasCorner(const Disc& d, int k) {
    if (IsTriangle(d)) return kEdgeVertices[k][0] == d.index || kEdgeVertices[k][1] == d.index;
    const int type = d.kind == DiscKind::kQuad ? QuadTypeOfPair(d.index) : d.index;
    return QuadTypeOfPair(k) != type;
  }

  void Finish(SurfaceComplex* c) {
    const int nd = static_cast<int>(discs_.size());
    // Components.
    UnionFind comps(nd);
    for (int d = 0; d < nd; ++d)
      for (int f = 0; f < 4; ++f)
        if (neighbours_[d][f] >= 0) comps.Join(d, neighbours_[d][f]);
    std::vector<int> comp_id(nd, -1);
    int nc = 0;
    c->component.assign(nd, 0);
    for (int d = 0; d < nd; ++d) {
      int& id = comp_id[comps.Find(d)];
      if (id < 0) id = nc++;
      c->component[d] = id;
    }
    c->num_components = nc;
    c->num_vertices.assign(nc, 0);
    c->num_edges.assign(nc, 0);
    c->num_faces.assign(nc, 0);
    c->num_quads.assign(nc, 0);
    c->two_sided.assign(nc, true);

    // Corner identification across glued arcs.
    UnionFind corners(static_cast<size_t>(nd) * 6);
    for (int d = 0; d < nd; ++d)
      for (int f = 0; f < 4; ++f) {
        const int o = neighbours_[d][f];
        if (o < 0) continue;
        const Arc a = ArcOf(discs_[d], f);
        const Perm& p = t_.gluing(discs_[d].tet, f).perm;
        for (int u : OtherTwo(a.corner, f))
          corners.Join(d * 6 + EdgeIndex(a.corner, u), o * 6 + EdgeIndex(p[a.corner], p[u]));
      }
    std::vector<bool> seen_vertex(static_cast<size_t>(nd) * 6, false);
    for (int d = 0; d < nd; ++d) {
      const int k = c->component[d];
      ++c->num_faces[k];
      if (!IsTriangle(discs_[d])) ++c->num_quads[k];
      for (int e = 0; e < 6; ++e) {
        if (!HasCorner(discs_[d], e)) continue;
        const int r = corners.Find(d * 6 + e);
        if (!seen_vertex[r]) {
          seen_vertex[r] = true;
          ++c->num_vertices[k];
        }
      }
      for (int f = 0; f < 4; ++f) {
        if (!HasArc(discs_[d], f)) continue;
        const int o = neighbours_[d][f];
        if (o < 0 || d < o || (d == o && f < t_.gluing(discs_[d].tet, f).perm[f])) ++c->num_edges[k];
      }
    }

    // Transverse sides, propagated from one disc per component.
    std::vector<int> side(nd, 0);
    for (int root = 0; root < nd; ++root) {
      if (side[root]) continue;
      side[root] = 1;
      std::vector<int> stack{root};
      while (!stack.empty()) {
        const int d = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
          const int o = neighbours_[d][f];
          if (o < 0) continue;
          const int of = t_.gluing(discs_[d].tet, f).perm[f];
          const int want = side[d] * ArcOf(discs_[d], f).toward * ArcOf(discs_[o], of).toward;
          if (!side[o]) {
            side[o] = want;
            stack.push_back(o);
          } else if (side[o] != want) {
            c->two_sided[c->component[d]] = false;
          }
        }
      }
    }
    sides_ = side;

    // Boundary circles from the truncated arcs.
    struct Open {
      int disc, face, a, b;
    };
    std::vector<Open> open;
    for (int d = 0; d < nd; ++d)
      for (int f = 0; f < 4; ++f) {
        if (!HasArc(discs_[d], f) || neighbours_[d][f] >= 0) continue;
        const Arc a = ArcOf(discs_[d], f);
        const auto uv = OtherTwo(a.corner, f);
        open.push_back({d, f, corners.Find(d * 6 + EdgeIndex(a.corner, uv[0])),
                        corners.Find(d * 6 + EdgeIndex(a.corner, uv[1]))});
      }
    std::vector<int> vid(static_cast<size_t>(nd) * 6, -1);
    int nv = 0;
    for (const auto& o : open) {
      if (vid[o.a] < 0) vid[o.a] = nv++;
      if (vid[o.b] < 0) vid[o.b] = nv++;
    }
    UnionFind circles(nv);
    for (const auto& o : open) circles.Join(vid[o.a], vid[o.b]);
    std::vector<int> circle_of(nv, -1);
    for (const auto& o : open) {
      const Disc& d = discs_[o.disc];
      const int corner = ArcOf(d, o.face).corner;
      EndKind kind = EndKind::kMixed;
      // Small triangles point toward the cusp: those ends are inward.
      if (d.kind == DiscKind::kSmallTriangle) kind = EndKind::kInward;
      if (d.kind == DiscKind::kLargeTriangle) kind = EndKind::kOutward;
      if (d.kind == DiscKind::kTriangle) kind = EndKind::kEmbedded;
      const int root = circles.Find(vid[o.a]);
      if (circle_of[root] < 0) {
        circle_of[root] = static_cast<int>(c->boundary.size());
        c->boundary.push_back({t_.cusp_of(d.tet, corner), kind, 1, c->component[o.disc]});
      } else {
        BoundaryCircle& bc = c->boundary[circle_of[root]];
        ++bc.arcs;
        if (bc.kind != kind || bc.cusp != t_.cusp_of(d.tet, corner)) bc.kind = EndKind::kMixed;
      }
    }
  }

 public:
  std::vector<int> sides_;

 private:
  const IdealTriangulation& t_;
  bool oriented_;
  long cutoff_;
  std::vector<long> counts_;
  std::vector<Disc> discs_;
  std::vector<std::array<int, 4>> neighbours_;
  std::vector<std::vector<int>> slots_;
};

void CheckCoordinate(const IdealTriangulation& t, const IntVector& x) {
  const bool oriented = x.size() == static_cast<size_t>(kOrientedPerTet * t.size());
  if (!oriented && x.size() != static_cast<size_t>(kTypesPerTet * t.size()))
    throw InputError("quad vector length does not match the triangulation");
  if (!IsAdmissible(x, t.size())) throw InputError("non-admissible vector");
  if (!SatisfiesMatching(t, x)) throw InputError("not a normal coordinate");
}

std::vector<std::tuple<bool, long, int>> Signature(const SurfaceReport& r) {
  std::vector<std::tuple<bool, long, int>> out;
  for (const auto& c : r.components) out.emplace_back(c.orientable, c.euler, c.boundary_components);
  std::sort(out.begin(), out.end());
  return out;
}

SurfaceComplex BuildStable(const IdealTriangulation& t, const IntVector& x, const RatVector& alpha,
                           const BuildOptions& options, std::vector<int>* sides) {
  CheckCoordinate(t, x);
  long base = 0;
  for (const auto& v : x) base = std::max(base, v.get_si());
  const Rational chi = EulerCharacteristic(alpha, x);
  long margin = options.initial_margin;
  bool have_previous = false;
  std::vector<std::tuple<bool, long, int>> previous;
  std::ostringstream trace;
  for (int i = 0; i <= options.max_doublings; ++i, margin *= 2) {
    Builder b(t, x, base + margin);
    SurfaceComplex c = b.Run();
    const SurfaceReport r = Analyze(c);
    const auto sig = Signature(r);
    trace << " cutoff " << c.cutoff << ": chi " << r.euler << ", " << r.components.size() << " components, "
          << r.boundary_components << " boundary;";
    if (have_previous && sig == previous && Rational(r.euler) == chi) {
      if (sides) *sides = b.sides_;
      return c;
    }
    previous = sig;
    have_previous = true;
  }
  throw ContractError("surface reconstruction did not stabilize (chi* = " + ToString(chi) + ";" +
                      trace.str() + ")");
}

}  // namespace

std::string SurfaceTypeName(bool orientable, long euler, int boundary) {
  const long g = orientable ? (2 - euler - boundary) / 2 : 2 - euler - boundary;
  return std::string(orientable ? "S_" : "N_") + std::to_string(g) + "," + std::to_string(boundary);
}

SurfaceComplex ReconstructAtCutoff(const IdealTriangulation& t, const IntVector& x, long cutoff) {
  CheckCoordinate(t, x);
  return Builder(t, x, cutoff).Run();
}

SurfaceComplex Reconstruct(const IdealTriangulation& t, const IntVector& x, const RatVector& alpha,
                           const BuildOptions& options) {
  return BuildStable(t, x, alpha, options, nullptr);
}

SurfaceComplex Reconstruct(const IdealTriangulation& t, const IntVector& x) {
  return Reconstruct(t, x, SolveAngleStructure(t).alpha);
}

SurfaceReport Analyze(const SurfaceComplex& c) {
  SurfaceReport r;
  r.cutoff = c.cutoff;
  std::vector<int> bcount(c.num_components, 0);
  for (const auto& b : c.boundary) ++bcount[b.component];
  for (int k = 0; k < c.num_components; ++k) {
    ComponentReport cr;
    cr.orientable = c.two_sided[k];
    cr.euler = static_cast<long>(c.num_vertices[k]) - c.num_edges[k] + c.num_faces[k];
    cr.boundary_components = bcount[k];
    cr.quads = c.num_quads[k];
    cr.genus = static_cast<int>(cr.orientable ? (2 - cr.euler - cr.boundary_components) / 2
                                              : 2 - cr.euler - cr.boundary_components);
    cr.type = SurfaceTypeName(cr.orientable, cr.euler, cr.boundary_components);
    r.components.push_back(cr);
  }
  std::sort(r.components.begin(), r.components.end(), [](const ComponentReport& a, const ComponentReport& b) {
    return std::tie(a.euler, a.boundary_components, a.orientable, a.quads) <
           std::tie(b.euler, b.boundary_components, b.orientable, b.quads);
  });
  r.connected = c.num_components == 1;
  for (const auto& cr : r.components) {
    r.orientable = r.orientable && cr.orientable;
    r.euler += cr.euler;
    r.boundary_components += cr.boundary_components;
  }
  if (r.components.empty()) {
    r.type = "empty";
  } else if (r.connected) {
    r.genus = r.components[0].genus;
    r.type = r.components[0].type;
  } else {
    for (size_t i = 0; i < r.components.size(); ++i) r.type += (i ? " + " : "") + r.components[i].type;
  }
  return r;
}

namespace {

// Oriented quad counts of each component of the embedded surface, or empty
// when some component is one-sided.
std::optional<std::vector<IntVector>> ComponentLifts(const IdealTriangulation& t, const IntVector& u,
                                                     const RatVector& alpha) {
  std::vector<int> sides;
  const SurfaceComplex c = BuildStable(t, u, alpha, {}, &sides);
  for (bool two : c.two_sided)
    if (!two) return std::nullopt;
  std::vector<IntVector> plus(c.num_components, IntVector(kOrientedPerTet * t.size()));
  for (size_t d = 0; d < c.discs.size(); ++d) {
    const Disc& disc = c.discs[d];
    if (disc.kind != DiscKind::kQuadType) continue;
    const int pair = sides[d] > 0 ? disc.index : ComplementPair(disc.index);
    plus[c.component[d]][kOrientedPerTet * disc.tet + pair] += 1;
  }
  return plus;
}

}  // namespace

std::optional<IntVector> TransverseOrientation(const IdealTriangulation& t, const IntVector& u,
                                               const RatVector& alpha) {
  const auto lifts = ComponentLifts(t, u, alpha);
  if (!lifts) return std::nullopt;
  IntVector out(kOrientedPerTet * t.size());
  for (const auto& v : *lifts)
    for (size_t i = 0; i < out.size(); ++i) out[i] += v[i];
  return out;
}

bool IsEmbedded(const IdealTriangulation& t, const IntVector& x, const RatVector& alpha) {
  const auto lifts = ComponentLifts(t, ForgetOrientation(x), alpha);
  if (!lifts) return false;
  const std::vector<IntVector>& plus = *lifts;
  // Group identical components; choose how many of each group flip.
  std::map<IntVector, int> groups;
  for (const auto& v : plus) ++groups[v];
  std::vector<std::pair<IntVector, int>> g(groups.begin(), groups.end());
  std::function<bool(size_t, IntVector)> search = [&](size_t i, IntVector rest) -> bool {
    if (i == g.size()) {
      for (const auto& v : rest)
        if (v != 0) return false;
      return true;
    }
    const IntVector& p = g[i].first;
    const IntVector m = ReverseOrientation(p);
    for (int flipped = 0; flipped <= g[i].second; ++flipped) {
      IntVector next = rest;
      bool ok = true;
      for (size_t k = 0; k < next.size(); ++k) {
        next[k] -= p[k] * (g[i].second - flipped) + m[k] * flipped;
        if (next[k] < 0) ok = false;
      }
      if (ok && search(i + 1, next)) return true;
    }
    return false;
  };
  return search(0, x);
}

bool IsEmbedded(const IdealTriangulation& t, const IntVector& x) {
  return IsEmbedded(t, x, SolveAngleStructure(t).alpha);
}

IntVector HakenSum(const IdealTriangulation& t, const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InputError("quad vectors differ in length");
  IntVector s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  if (!IsAdmissible(s, t.size())) throw InputError("non-admissible sum");
  return s;
}

}  // namespace spunnorm
