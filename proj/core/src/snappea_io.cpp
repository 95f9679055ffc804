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

// Reader for the "% Triangulation" text format. Peripheral curves are stored
// there as signed crossing counts per cusp triangle side; they are rebuilt as
// explicit normal paths.

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <tuple>

#include "spunnorm/tri_model.hpp"

namespace spunnorm {
namespace {

class Lines {
 public:
  explicit Lines(std::string_view text) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(pos, end - pos));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines_.push_back(std::move(line));
      pos = end + 1;
    }
  }

  // Next line that is not blank.
  const std::string& Next(const char* what) {
    while (at_ < lines_.size()) {
      const std::string& l = lines_[at_++];
      if (l.find_first_not_of(" \t") != std::string::npos) return l;
    }
    throw InputError(std::string("unexpected end of file while reading ") + what + " (line " +
                     std::to_string(at_) + ")");
  }
  size_t line_number() const { return at_; }

 private:
  std::vector<std::string> lines_;
  size_t at_ = 0;
};

template <typename T>
std::vector<T> Fields(const std::string& line, size_t want, const Lines& src, const char* what) {
  std::istringstream ss(line);
  std::vector<T> out;
  T x;
  while (ss >> x) out.push_back(x);
  if (out.size() != want || !ss.eof())
    throw InputError(std::string("malformed ") + what + " at line " +
                     std::to_string(src.line_number()));
  return out;
}

// Signed crossing counts of one curve: counts[tet][v][f].
using Counts = std::vector<std::array<std::array<int, 4>, 4>>;

struct ArcRef {
  int tet, vertex, corner, index;
  bool operator<(const ArcRef& o) const {
    return std::tie(tet, vertex, corner, index) < std::tie(o.tet, o.vertex, o.corner, o.index);
  }
};

// Traces the arcs described by the counts on one cusp into a single closed path.
PeripheralCurve Trace(const IdealTriangulation& t, const Counts& n, int cusp, const char* what) {
  auto corner_arcs = [&](int tet, int v, int w) {
    int s = 0;
    for (int f = 0; f < 4; ++f)
      if (f != v) s += std::abs(n[tet][v][f]);
    if (s % 2) throw InputError(std::string("odd crossing total in ") + what);
    const int a = s / 2 - std::abs(n[tet][v][w]);
    if (a < 0) throw InputError(std::string("inconsistent crossing counts in ") + what);
    return a;
  };
  // Position of arc (corner w, index k) along side f, counted from the lower corner.
  auto position = [&](int tet, int v, int f, int w, int k) {
    const auto lo = std::min(Fourth(v, f, w), w);
    if (w == lo) return k;
    return std::abs(n[tet][v][f]) - 1 - k;
  };
  auto arc_at = [&](int tet, int v, int f, int pos) {
    const auto ends = OtherTwo(v, f);
    const int lo = ends[0], hi = ends[1];
    const int alo = corner_arcs(tet, v, lo);
    if (pos < alo) return ArcRef{tet, v, lo, pos};
    return ArcRef{tet, v, hi, std::abs(n[tet][v][f]) - 1 - pos};
  };

  std::vector<ArcRef> all;
  for (const auto& [tet, v] : t.cusps()[cusp].triangles)
    for (int w = 0; w < 4; ++w) {
      if (w == v) continue;
      const int a = corner_arcs(tet, v, w);
      for (int k = 0; k < a; ++k) all.push_back({tet, v, w, k});
    }
  if (all.empty()) throw InputError(std::string("empty ") + what);

  PeripheralCurve c;
  c.cusp = cusp;
  std::map<ArcRef, bool> seen;
  ArcRef cur = all.front();
  for (;;) {
    if (seen.count(cur)) break;
    seen[cur] = true;
    const auto sides = OtherTwo(cur.vertex, cur.corner);
    const int s0 = n[cur.tet][cur.vertex][sides[0]], s1 = n[cur.tet][cur.vertex][sides[1]];
    int enter, exit;
    if (s0 > 0 && s1 < 0) {
      enter = sides[0];
      exit = sides[1];
    } else if (s1 > 0 && s0 < 0) {
      enter = sides[1];
      exit = sides[0];
    } else {
      throw InputError(std::string("crossing signs do not determine a direction in ") + what);
    }
    c.steps.push_back({cur.tet, cur.vertex, enter, exit});
    const int pos = position(cur.tet, cur.vertex, exit, cur.corner, cur.index);
    const Gluing& g = t.gluing(cur.tet, exit);
    const auto ends = OtherTwo(cur.vertex, exit);
    // Positions are measured from the lower corner; the gluing may swap ends.
    const bool flip = g.perm[ends[0]] > g.perm[ends[1]];
    const int tv = g.perm[cur.vertex], tf = g.perm[exit];
    const int len = std::abs(n[g.tet][tv][tf]);
    if (len != std::abs(n[cur.tet][cur.vertex][exit]))
      throw InputError(std::string("crossing counts disagree across a face in ") + what);
    cur = arc_at(g.tet, tv, tf, flip ? len - 1 - pos : pos);
  }
  if (!(cur.tet == all.front().tet && cur.vertex == all.front().vertex &&
        cur.corner == all.front().corner && cur.index == all.front().index))
    throw InputError(std::string("curve does not close up in ") + what);
  if (seen.size() != all.size())
    throw InputError(std::string("multi-component curve in ") + what);
  return c;
}

}  // namespace

IdealTriangulation ImportSnapPea(std::string_view text) {
  Lines src(text);
  const std::string& header = src.Next("header");
  if (header.rfind("% Triangulation", 0) != 0)
    throw InputError("unsupported header (expected \"% Triangulation\")");
  const std::string name = src.Next("name");
  src.Next("solution type");
  const std::string orient = src.Next("orientability");
  if (orient.find("nonorientable") != std::string::npos)
    throw InputError("non-orientable manifold");
  std::string line = src.Next("cusp counts");
  if (line.rfind("CS_", 0) == 0) line = src.Next("cusp counts");
  const auto counts = Fields<int>(line, 2, src, "cusp counts");
  if (counts[1] != 0) throw InputError("non-orientable cusps are not supported");
  const int ncusps = counts[0];
  for (int c = 0; c < ncusps; ++c) {
    std::istringstream ss(src.Next("cusp data"));
    std::string kind;
    double m = 0, l = 0;
    if (!(ss >> kind >> m >> l)) throw InputError("malformed cusp line " + std::to_string(src.line_number()));
    if (kind != "torus") throw InputError("unsupported cusp type \"" + kind + "\"");
    if (m != 0.0 || l != 0.0)
      throw InputError("filled cusp " + std::to_string(c) + " cannot be represented");
  }
  const int ntet = Fields<int>(src.Next("tetrahedron count"), 1, src, "tetrahedron count")[0];
  if (ntet <= 0) throw InputError("empty triangulation");

  std::vector<std::array<Gluing, 4>> gluings(ntet);
  std::vector<std::array<int, 4>> cusp_index(ntet);
  // curves[curve][sheet] with curve 0 meridian, 1 longitude.
  std::array<std::array<Counts, 2>, 2> curves;
  for (auto& c : curves)
    for (auto& s : c) s.assign(ntet, {});
  for (int i = 0; i < ntet; ++i) {
    const auto nb = Fields<int>(src.Next("neighbors"), 4, src, "neighbor list");
    const auto perms = Fields<std::string>(src.Next("permutations"), 4, src, "permutation list");
    for (int f = 0; f < 4; ++f) {
      gluings[i][f].tet = nb[f];
      if (perms[f].size() != 4) throw InputError("malformed permutation at line " + std::to_string(src.line_number()));
      for (int k = 0; k < 4; ++k) {
        const char ch = perms[f][k];
        if (ch < '0' || ch > '3') throw InputError("malformed permutation at line " + std::to_string(src.line_number()));
        gluings[i][f].perm[k] = ch - '0';
      }
    }
    const auto ci = Fields<int>(src.Next("cusp indices"), 4, src, "cusp index list");
    std::copy(ci.begin(), ci.end(), cusp_index[i].begin());
    for (int curve = 0; curve < 2; ++curve)
      for (int sheet = 0; sheet < 2; ++sheet) {
        const auto row = Fields<int>(src.Next("peripheral curve data"), 16, src, "peripheral curve row");
        for (int v = 0; v < 4; ++v)
          for (int f = 0; f < 4; ++f) curves[curve][sheet][i][v][f] = row[4 * v + f];
      }
    src.Next("shape");
  }
  for (int curve = 0; curve < 2; ++curve)
    for (int i = 0; i < ntet; ++i)
      for (int v = 0; v < 4; ++v)
        for (int f = 0; f < 4; ++f)
          if (curves[curve][1][i][v][f] != 0)
            throw InputError("left-sheet peripheral data is not supported for oriented manifolds");

  IdealTriangulation bare = IdealTriangulation::Build(gluings, {}, name, cusp_index);
  if (bare.num_cusps() != ncusps)
    throw InputError("cusp count in header (" + std::to_string(ncusps) + ") disagrees with gluings (" +
                     std::to_string(bare.num_cusps()) + ")");

  std::vector<CuspBasis> bases;
  for (int c = 0; c < ncusps; ++c) {
    CuspBasis b;
    b.meridian = Trace(bare, curves[0][0], c, "meridian");
    b.longitude = Trace(bare, curves[1][0], c, "longitude");
    bases.push_back(std::move(b));
  }
  return IdealTriangulation::Build(std::move(gluings), std::move(bases), name, std::move(cusp_index));
}

}  // namespace spunnorm
