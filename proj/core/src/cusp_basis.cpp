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

// Intersection numbers on a cusp torus and a derived peripheral basis.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "spunnorm/tri_model.hpp"

namespace spunnorm {
namespace {

using Side = std::array<int, 3>;  // (tet, vertex, face)

struct Point {
  int64_t x, y;
};

int64_t Orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Canonical identity of a cusp edge plus the corner its parameter starts from
// when viewed from the given side.
struct EdgeFrame {
  Side key;
  int start;  // corner of this side where the canonical parameter is 0
  int end;
};

EdgeFrame FrameOf(const IdealTriangulation& t, int tet, int v, int f) {
  const CuspSide o = t.Across(tet, v, f);
  const Side mine{tet, v, f}, other{o.tet, o.vertex, o.face};
  const auto ends = OtherTwo(v, f);
  if (mine <= other) return {mine, ends[0], ends[1]};
  const Perm& p = t.gluing(tet, f).perm;
  if (p[ends[0]] < p[ends[1]]) return {other, ends[0], ends[1]};
  return {other, ends[1], ends[0]};
}

// Corner coordinates of the triangle at (tet, v), anticlockwise, scaled by `scale`.
std::array<Point, 4> Corners(const IdealTriangulation& t, int tet, int v, int64_t scale) {
  std::array<int, 3> k{};
  int m = 0;
  for (int i = 0; i < 4; ++i)
    if (i != v) k[m++] = i;
  if (CornerOrientation(t, tet, v, k[0], k[1], k[2]) < 0) std::swap(k[1], k[2]);
  std::array<Point, 4> pos{};
  pos[k[0]] = {0, 0};
  pos[k[1]] = {scale, 0};
  pos[k[2]] = {0, scale};
  return pos;
}

}  // namespace

int Intersection(const IdealTriangulation& t, const PeripheralCurve& a, const PeripheralCurve& b) {
  if (a.cusp != b.cusp) return 0;
  // Slot each crossing point on its cusp edge: all of a's points, then b's.
  std::map<Side, int> count_a, count_b;
  for (const auto& s : a.steps) ++count_a[FrameOf(t, s.tet, s.vertex, s.exit).key];
  for (const auto& s : b.steps) ++count_b[FrameOf(t, s.tet, s.vertex, s.exit).key];
  int64_t total = 1;
  for (const auto& [k, n] : count_a) total = std::max<int64_t>(total, n + count_b[k] + 1);
  for (const auto& [k, n] : count_b) total = std::max<int64_t>(total, n + count_a[k] + 1);
  const int64_t scale = total;

  // slot_of[curve][step] = parameter of the point where step leaves its triangle.
  auto slots = [&](const PeripheralCurve& c, const std::map<Side, int>* offset) {
    std::map<Side, int> used;
    std::vector<int> out;
    for (const auto& s : c.steps) {
      const Side key = FrameOf(t, s.tet, s.vertex, s.exit).key;
      int base = 0;
      if (offset) {
        auto it = offset->find(key);
        base = it == offset->end() ? 0 : it->second;
      }
      out.push_back(base + 1 + used[key]++);
    }
    return out;
  };
  const std::vector<int> sa = slots(a, nullptr);
  const std::vector<int> sb = slots(b, &count_a);

  auto point = [&](int tet, int v, int f, int slot) {
    const EdgeFrame fr = FrameOf(t, tet, v, f);
    const auto pos = Corners(t, tet, v, scale);
    const Point p0 = pos[fr.start], p1 = pos[fr.end];
    return Point{(p0.x * (scale - slot) + p1.x * slot), (p0.y * (scale - slot) + p1.y * slot)};
  };
  struct Chord {
    int tet, v;
    Point from, to;
  };
  auto chords = [&](const PeripheralCurve& c, const std::vector<int>& sl) {
    std::vector<Chord> out;
    const size_t n = c.steps.size();
    for (size_t i = 0; i < n; ++i) {
      const CurveStep& s = c.steps[i];
      const int in_slot = sl[(i + n - 1) % n];
      out.push_back({s.tet, s.vertex, point(s.tet, s.vertex, s.enter, in_slot),
                     point(s.tet, s.vertex, s.exit, sl[i])});
    }
    return out;
  };
  const auto ca = chords(a, sa), cb = chords(b, sb);
  int result = 0;
  for (const auto& x : ca)
    for (const auto& y : cb) {
      if (x.tet != y.tet || x.v != y.v) continue;
      const int64_t o1 = Orient(x.from, x.to, y.from), o2 = Orient(x.from, x.to, y.to);
      const int64_t o3 = Orient(y.from, y.to, x.from), o4 = Orient(y.from, y.to, x.to);
      if ((o1 > 0) == (o2 > 0) || (o3 > 0) == (o4 > 0)) continue;
      const int64_t det = (x.to.x - x.from.x) * (y.to.y - y.from.y) -
                          (x.to.y - x.from.y) * (y.to.x - y.from.x);
      result += det > 0 ? 1 : -1;
    }
  return result;
}

long Intersection(const IdealTriangulation& t, const std::vector<CuspEdgeChainTerm>& chain,
                  const PeripheralCurve& c) {
  std::map<Side, int> entries;
  for (const auto& s : c.steps) ++entries[{s.tet, s.vertex, s.enter}];
  long total = 0;
  for (const auto& term : chain) {
    const int f = Fourth(term.vertex, term.from, term.to);
    auto it = entries.find({term.tet, term.vertex, f});
    if (it != entries.end())
      total += term.weight * it->second *
               CornerOrientation(t, term.tet, term.vertex, term.from, term.to, f);
    const CuspSide o = t.Across(term.tet, term.vertex, f);
    const Perm& p = t.gluing(term.tet, f).perm;
    it = entries.find({o.tet, o.vertex, o.face});
    if (it != entries.end())
      total += term.weight * it->second *
               CornerOrientation(t, o.tet, o.vertex, p[term.from], p[term.to], o.face);
  }
  return total;
}

CuspBasis DeriveCuspBasis(const IdealTriangulation& t, int cusp) {
  const auto& tris = t.cusps().at(cusp).triangles;
  std::map<std::array<int, 2>, int> index;
  for (size_t i = 0; i < tris.size(); ++i) index[tris[i]] = static_cast<int>(i);
  const int n = static_cast<int>(tris.size());

  auto neighbour = [&](int node, int side) {
    const CuspSide o = t.Across(tris[node][0], tris[node][1], side);
    return std::pair<int, int>{index.at({o.tet, o.vertex}), o.face};
  };

  std::vector<PeripheralCurve> cycles;
  for (int root = 0; root < n; ++root) {
    std::vector<int> parent(n, -1), parent_side(n, -1), depth(n, -1);
    depth[root] = 0;
    std::deque<int> queue{root};
    std::vector<int> order;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (int f = 0; f < 4; ++f) {
        if (f == tris[u][1]) continue;
        const auto [w, wf] = neighbour(u, f);
        if (depth[w] >= 0) continue;
        depth[w] = depth[u] + 1;
        parent[w] = u;
        parent_side[w] = wf;  // side of w facing its parent
        queue.push_back(w);
      }
    }
    std::set<Side> done;
    for (int u : order)
      for (int f = 0; f < 4; ++f) {
        if (f == tris[u][1]) continue;
        const auto [w, wf] = neighbour(u, f);
        if (parent[w] == u && parent_side[w] == wf) continue;
        if (parent[u] == w && parent_side[u] == f) continue;
        const Side me{tris[u][0], tris[u][1], f}, other{tris[w][0], tris[w][1], wf};
        if (done.count(me) || done.count(other)) continue;
        done.insert(me);
        // Tree paths from u and w up to their common ancestor.
        std::vector<int> up_u{u}, up_w{w};
        int x = u, y = w;
        while (depth[x] > depth[y]) up_u.push_back(x = parent[x]);
        while (depth[y] > depth[x]) up_w.push_back(y = parent[y]);
        while (x != y) {
          up_u.push_back(x = parent[x]);
          up_w.push_back(y = parent[y]);
        }
        // Node order: ancestor .. u, then w .. (child of ancestor).
        std::vector<int> nodes(up_u.rbegin(), up_u.rend());
        for (size_t i = 0; i + 1 < up_w.size(); ++i) nodes.push_back(up_w[i]);
        const size_t m = nodes.size();
        // exit side of node i toward node i+1 (cyclically).
        std::vector<int> exit_side(m), enter_side(m);
        for (size_t i = 0; i < m; ++i) {
          const int a = nodes[i], b = nodes[(i + 1) % m];
          int side;
          if (i + 1 == up_u.size()) {
            side = f;
          } else if (parent[b] == a) {
            side = neighbour(b, parent_side[b]).second;
          } else {
            side = parent_side[a];
          }
          exit_side[i] = side;
          enter_side[(i + 1) % m] = neighbour(a, side).second;
        }
        PeripheralCurve c;
        c.cusp = cusp;
        for (size_t i = 0; i < m; ++i)
          c.steps.push_back({tris[nodes[i]][0], tris[nodes[i]][1], enter_side[i], exit_side[i]});
        ValidateCurve(t, c);
        cycles.push_back(std::move(c));
      }
    // Try every pair collected so far.
    for (size_t i = 0; i < cycles.size(); ++i)
      for (size_t j = i + 1; j < cycles.size(); ++j) {
        const int k = Intersection(t, cycles[i], cycles[j]);
        if (k != 1 && k != -1) continue;
        CuspBasis b;
        b.internal = true;
        b.longitude = cycles[i];
        b.meridian = k == 1 ? cycles[j] : Reversed(cycles[j]);
        return b;
      }
  }
  throw ContractError("no peripheral basis found on cusp " + std::to_string(cusp));
}

}  // namespace spunnorm
