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

#include "spunnorm/tri_model.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace spunnorm {

int PermSign(const Perm& p) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

Perm Inverse(const Perm& p) {
  Perm q{};
  for (int i = 0; i < 4; ++i) q[p[i]] = i;
  return q;
}

int SeqSign(int a, int b, int c, int d) { return PermSign({a, b, c, d}); }

PeripheralCurve Reversed(const PeripheralCurve& c) {
  PeripheralCurve r;
  r.cusp = c.cusp;
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it)
    r.steps.push_back({it->tet, it->vertex, it->exit, it->enter});
  return r;
}

namespace {

std::string Where(int tet, int face) {
  return "tetrahedron " + std::to_string(tet) + " face " + std::to_string(face);
}

bool IsPerm(const Perm& p) {
  std::array<bool, 4> seen{};
  for (int v : p) {
    if (v < 0 || v > 3 || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

bool IdealTriangulation::has_internal_basis() const {
  return std::any_of(bases_.begin(), bases_.end(), [](const CuspBasis& b) { return b.internal; });
}

CuspSide IdealTriangulation::Across(int tet, int vertex, int face) const {
  const Gluing& g = gluings_[tet][face];
  return {g.tet, g.perm[vertex], g.perm[face]};
}

IdealTriangulation IdealTriangulation::Build(std::vector<std::array<Gluing, 4>> gluings,
                                             std::vector<CuspBasis> curves, std::string name,
                                             std::vector<std::array<int, 4>> cusp_labels) {
  IdealTriangulation t;
  t.name_ = std::move(name);
  const int n = static_cast<int>(gluings.size());
  if (n == 0) throw InputError("empty triangulation");
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = gluings[i][f];
      if (g.tet < 0 || g.tet >= n) throw InputError("gluing target out of range at " + Where(i, f));
      if (!IsPerm(g.perm)) throw InputError("invalid permutation at " + Where(i, f));
    }
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = gluings[i][f];
      const int tf = g.perm[f];
      if (g.tet == i && tf == f) throw InputError("face glued to itself at " + Where(i, f));
      const Gluing& back = gluings[g.tet][tf];
      if (back.tet != i || back.perm != Inverse(g.perm))
        throw InputError("involution violation at " + Where(i, f));
    }
  t.gluings_ = std::move(gluings);

  // Coherent orientation: every gluing must reverse orientation.
  t.signs_.assign(n, 0);
  for (int root = 0; root < n; ++root) {
    if (t.signs_[root]) continue;
    t.signs_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int f = 0; f < 4; ++f) {
        const Gluing& g = t.gluings_[i][f];
        const int want = -t.signs_[i] * PermSign(g.perm);
        if (!t.signs_[g.tet]) {
          t.signs_[g.tet] = want;
          queue.push_back(g.tet);
        } else if (t.signs_[g.tet] != want) {
          throw InputError("non-orientable triangulation (conflict at " + Where(i, f) + ")");
        }
      }
    }
  }

  // Cusps: classes of (tet, vertex) under the face gluings.
  std::vector<int> parent(4 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f)
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        const Gluing& g = t.gluings_[i][f];
        const int a = find(4 * i + v), b = find(4 * g.tet + g.perm[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  t.cusp_of_.assign(n, {});
  std::vector<int> label(4 * n, -1);
  int ncusps = 0;
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < 4; ++v) {
      const int r = find(4 * i + v);
      if (label[r] < 0) label[r] = ncusps++;
      t.cusp_of_[i][v] = label[r];
    }
  if (!cusp_labels.empty()) {
    if (static_cast<int>(cusp_labels.size()) != n) throw InputError("cusp labels need one row per tetrahedron");
    // The labels must be a relabelling of the classes found above.
    std::vector<int> to(ncusps, -1), from(ncusps, -1);
    for (int i = 0; i < n; ++i)
      for (int v = 0; v < 4; ++v) {
        const int mine = t.cusp_of_[i][v], theirs = cusp_labels[i][v];
        if (theirs < 0 || theirs >= ncusps || (to[mine] >= 0 && to[mine] != theirs) ||
            (from[theirs] >= 0 && from[theirs] != mine))
          throw InputError("cusp labels disagree with the gluings at tetrahedron " + std::to_string(i) +
                           " vertex " + std::to_string(v));
        to[mine] = theirs;
        from[theirs] = mine;
      }
    for (int i = 0; i < n; ++i)
      for (int v = 0; v < 4; ++v) {
        t.custom_cusp_order_ |= cusp_labels[i][v] != t.cusp_of_[i][v];
        t.cusp_of_[i][v] = cusp_labels[i][v];
      }
  }
  t.cusps_.resize(ncusps);
  for (int c = 0; c < ncusps; ++c) t.cusps_[c].id = c;
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < 4; ++v) t.cusps_[t.cusp_of_[i][v]].triangles.push_back({i, v});

  // Edge classes, each traversed so the wedges turn positively about tail -> head.
  t.edge_of_.assign(n, {-1, -1, -1, -1, -1, -1});
  t.edge_dir_.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < 6; ++e) {
      if (t.edge_of_[i][e] >= 0) continue;
      EdgeClass ec;
      ec.id = static_cast<int>(t.edges_.size());
      const int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
      auto [k, l] = OtherTwo(a, b);
      if (t.signs_[i] * SeqSign(a, b, k, l) < 0) std::swap(k, l);
      EdgeStep s{i, a, b, k, l};
      const EdgeStep start = s;
      for (;;) {
        const int ei = EdgeIndex(s.tail, s.head);
        if (t.edge_of_[s.tet][ei] >= 0) throw InputError("edge class does not close up");
        t.edge_of_[s.tet][ei] = ec.id;
        t.edge_dir_[s.tet][ei] = s.tail < s.head ? 1 : -1;
        ec.around.push_back(s);
        const Gluing& g = t.gluings_[s.tet][s.leave];
        EdgeStep nx{g.tet, g.perm[s.tail], g.perm[s.head], g.perm[s.leave],
                    Fourth(g.perm[s.tail], g.perm[s.head], g.perm[s.leave])};
        if (t.signs_[nx.tet] * SeqSign(nx.tail, nx.head, nx.enter, nx.leave) < 0)
          throw InputError("inconsistent orientation around edge");
        if (nx.tet == start.tet && nx.tail == start.tail && nx.head == start.head) {
          if (nx.enter != start.enter) throw InputError("edge class does not close up");
          break;
        }
        s = nx;
      }
      ec.valence = static_cast<int>(ec.around.size());
      ec.endpoints = {t.cusp_of_[i][a], t.cusp_of_[i][b]};
      t.edges_.push_back(std::move(ec));
    }

  for (auto& c : t.cusps_) {
    const int f = static_cast<int>(c.triangles.size());
    c.num_edges = 3 * f / 2;
    c.num_vertices = 0;
    for (const auto& e : t.edges_) c.num_vertices += (e.endpoints[0] == c.id) + (e.endpoints[1] == c.id);
    c.euler = c.num_vertices - c.num_edges + f;
    if (c.euler != 0)
      throw ContractError("non-torus cusp " + std::to_string(c.id) + " (Euler characteristic " +
                          std::to_string(c.euler) + ")");
  }

  t.bases_.assign(ncusps, {});
  std::vector<bool> given(ncusps, false);
  for (auto& b : curves) {
    const int c = b.meridian.cusp;
    if (c < 0 || c >= ncusps || b.longitude.cusp != c)
      throw InputError("peripheral curves name an invalid cusp");
    if (given[c]) throw InputError("duplicate peripheral curves for cusp " + std::to_string(c));
    ValidateCurve(t, b.meridian);
    ValidateCurve(t, b.longitude);
    b.internal = false;
    t.bases_[c] = std::move(b);
    given[c] = true;
  }
  for (int c = 0; c < ncusps; ++c)
    if (!given[c]) t.bases_[c] = DeriveCuspBasis(t, c);
  return t;
}

int CornerOrientation(const IdealTriangulation& t, int tet, int v, int a, int b, int c) {
  return t.sign(tet) * SeqSign(v, a, b, c);
}

void ValidateCurve(const IdealTriangulation& t, const PeripheralCurve& c) {
  if (c.steps.empty()) throw InputError("empty peripheral curve");
  const size_t n = c.steps.size();
  for (size_t i = 0; i < n; ++i) {
    const CurveStep& s = c.steps[i];
    if (s.tet < 0 || s.tet >= t.size() || s.vertex < 0 || s.vertex > 3)
      throw InputError("peripheral curve step out of range");
    if (s.enter == s.exit || s.enter == s.vertex || s.exit == s.vertex || s.enter < 0 ||
        s.enter > 3 || s.exit < 0 || s.exit > 3)
      throw InputError("peripheral curve step is not a normal arc");
    if (t.cusp_of(s.tet, s.vertex) != c.cusp) throw InputError("peripheral curve leaves its cusp");
    const CurveStep& nx = c.steps[(i + 1) % n];
    const CuspSide side = t.Across(s.tet, s.vertex, s.exit);
    if (side.tet != nx.tet || side.vertex != nx.vertex || side.face != nx.enter)
      throw InputError("peripheral curve is not closed at step " + std::to_string(i));
  }
}

PeripheralCurve VertexLoop(const IdealTriangulation& t, int edge_class, int end) {
  const EdgeClass& e = t.edge_classes().at(edge_class);
  PeripheralCurve c;
  c.cusp = e.endpoints[end];
  for (const auto& s : e.around) c.steps.push_back({s.tet, end ? s.head : s.tail, s.enter, s.leave});
  return c;
}

// Native format.

namespace {

using nlohmann::json;

json CurveToJson(const PeripheralCurve& c) {
  json arr = json::array();
  for (const auto& s : c.steps)
    arr.push_back({{"tet", s.tet}, {"vertex", s.vertex}, {"enter", s.enter}, {"exit", s.exit}});
  return arr;
}

PeripheralCurve CurveFromJson(const json& arr, int cusp) {
  if (!arr.is_array()) throw InputError("peripheral curve must be an array of steps");
  PeripheralCurve c;
  c.cusp = cusp;
  for (const auto& s : arr)
    c.steps.push_back({s.at("tet").get<int>(), s.at("vertex").get<int>(), s.at("enter").get<int>(),
                       s.at("exit").get<int>()});
  return c;
}

}  // namespace

IdealTriangulation LoadNative(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.value("format", "") != "tnorm-tri/1")
      throw InputError("not a tnorm-tri/1 document");
    const int n = doc.at("num_tetrahedra").get<int>();
    const json& gl = doc.at("gluings");
    if (!gl.is_array() || static_cast<int>(gl.size()) != n)
      throw InputError("gluings must list one entry per tetrahedron");
    if (n == 0) throw InputError("empty triangulation");
    std::vector<std::array<Gluing, 4>> gluings(n);
    for (int i = 0; i < n; ++i) {
      if (!gl[i].is_array() || gl[i].size() != 4)
        throw InputError("tetrahedron " + std::to_string(i) + " needs four gluings");
      for (int f = 0; f < 4; ++f) {
        const json& g = gl[i][f];
        gluings[i][f].tet = g.at("tet").get<int>();
        const auto p = g.at("perm").get<std::vector<int>>();
        if (p.size() != 4) throw InputError("invalid permutation at " + Where(i, f));
        std::copy(p.begin(), p.end(), gluings[i][f].perm.begin());
      }
    }
    std::vector<CuspBasis> curves;
    if (doc.contains("peripheral_curves")) {
      for (const auto& pc : doc.at("peripheral_curves")) {
        const int k = pc.at("cusp").get<int>();
        CuspBasis b;
        b.meridian = CurveFromJson(pc.at("meridian"), k);
        b.longitude = CurveFromJson(pc.at("longitude"), k);
        curves.push_back(std::move(b));
      }
    }
    std::vector<std::array<int, 4>> labels;
    if (doc.contains("cusp_labels")) {
      for (const auto& row : doc.at("cusp_labels")) {
        const auto r = row.get<std::vector<int>>();
        if (r.size() != 4) throw InputError("cusp_labels rows need four entries");
        labels.push_back({r[0], r[1], r[2], r[3]});
      }
    }
    return IdealTriangulation::Build(std::move(gluings), std::move(curves), doc.value("name", ""),
                                     std::move(labels));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed tnorm-tri/1 document: ") + e.what());
  }
}

std::string SerializeNative(const IdealTriangulation& t) {
  json doc;
  doc["format"] = "tnorm-tri/1";
  if (!t.name().empty()) doc["name"] = t.name();
  doc["num_tetrahedra"] = t.size();
  json gl = json::array();
  for (int i = 0; i < t.size(); ++i) {
    json row = json::array();
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(i, f);
      row.push_back({{"tet", g.tet}, {"perm", std::vector<int>(g.perm.begin(), g.perm.end())}});
    }
    gl.push_back(row);
  }
  doc["gluings"] = gl;
  if (t.has_custom_cusp_order()) {
    json labels = json::array();
    for (int i = 0; i < t.size(); ++i)
      labels.push_back({t.cusp_of(i, 0), t.cusp_of(i, 1), t.cusp_of(i, 2), t.cusp_of(i, 3)});
    doc["cusp_labels"] = labels;
  }
  json pcs = json::array();
  for (int c = 0; c < t.num_cusps(); ++c) {
    const CuspBasis& b = t.basis(c);
    if (b.internal) continue;
    pcs.push_back({{"cusp", c}, {"meridian", CurveToJson(b.meridian)},
                   {"longitude", CurveToJson(b.longitude)}});
  }
  if (!pcs.empty()) doc["peripheral_curves"] = pcs;
  return doc.dump(1) + "\n";
}

IdealTriangulation LoadTriangulation(std::string_view text) {
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return LoadNative(text);
  return ImportSnapPea(text);
}

IdealTriangulation LoadTriangulationFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return LoadTriangulation(ss.str());
}

}  // namespace spunnorm
