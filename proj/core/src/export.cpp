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


#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "spunnorm/norm_ball.hpp"

namespace spunnorm {
namespace {

using nlohmann::ordered_json;
using Point = std::vector<double>;

ordered_json RatJson(const RatVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& q : v) out.push_back(ToString(q));
  return out;
}

std::vector<Point> ToDouble(const std::vector<RatVector>& vs) {
  std::vector<Point> out;
  for (const auto& v : vs) {
    Point p;
    for (const auto& q : v) p.push_back(q.get_d());
    out.push_back(p);
  }
  return out;
}

bool OnFacet(const Facet& f, const RatVector& v) {
  Rational s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += f.normal[i] * v[i];
  return s == f.offset;
}

// Vertex pairs spanning an edge of a full-dimensional polytope: the facets
// through both have normals of rank d - 1.
std::vector<std::array<int, 2>> Edges(const Polytope& p) {
  const size_t d = p.dimension;
  std::vector<std::array<int, 2>> out;
  const int n = static_cast<int>(p.vertices.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<RatVector> rows;
      for (const auto& f : p.facets)
        if (OnFacet(f, p.vertices[a]) && OnFacet(f, p.vertices[b])) rows.push_back(f.normal);
      if (rows.size() + 1 < d) continue;
      RatMatrix m(rows.size(), d);
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
      if (Rank(m) + 1 == d) out.push_back({a, b});
    }
  return out;
}

double Dot(const Point& a, const Point& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); }

// Fixed oblique view of three-space onto the page.
std::array<double, 2> View3(const Point& p) {
  const double az = 0.6, el = 0.45;
  const double x = std::cos(az) * p[0] - std::sin(az) * p[1];
  const double y = std::sin(az) * p[0] + std::cos(az) * p[1];
  return {x, std::cos(el) * p[2] - std::sin(el) * y};
}

// Schlegel diagram: perspective from just beyond the first facet onto its
// hyperplane, then the three-dimensional view.
std::vector<std::array<double, 2>> Schlegel(const Polytope& poly) {
  const auto verts = ToDouble(poly.vertices);
  const Facet& f = poly.facets.front();
  Point n;
  for (const auto& q : f.normal) n.push_back(q.get_d());
  const double o = f.offset.get_d();
  Point centre(4, 0.0);
  int count = 0;
  for (size_t i = 0; i < verts.size(); ++i)
    if (OnFacet(f, poly.vertices[i])) {
      for (int k = 0; k < 4; ++k) centre[k] += verts[i][k];
      ++count;
    }
  for (auto& c : centre) c /= count;
  const double nn = Dot(n, n);
  Point eye = centre;
  for (int k = 0; k < 4; ++k) eye[k] += 0.25 * o / nn * n[k];
  // Orthonormal basis of the facet hyperplane.
  std::vector<Point> basis;
  for (int axis = 0; axis < 4 && basis.size() < 3; ++axis) {
    Point e(4, 0.0);
    e[axis] = 1;
    const double along = Dot(e, n) / nn;
    for (int k = 0; k < 4; ++k) e[k] -= along * n[k];
    for (const auto& b : basis) {
      const double c = Dot(e, b);
      for (int k = 0; k < 4; ++k) e[k] -= c * b[k];
    }
    const double len = std::sqrt(Dot(e, e));
    if (len < 1e-9) continue;
    for (auto& x : e) x /= len;
    basis.push_back(e);
  }
  std::vector<std::array<double, 2>> out;
  for (const auto& v : verts) {
    Point dir(4);
    for (int k = 0; k < 4; ++k) dir[k] = v[k] - eye[k];
    const double s = (o - Dot(n, eye)) / Dot(n, dir);
    Point x(4);
    for (int k = 0; k < 4; ++k) x[k] = eye[k] + s * dir[k] - centre[k];
    out.push_back(View3({Dot(x, basis[0]), Dot(x, basis[1]), Dot(x, basis[2])}));
  }
  return out;
}

}  // namespace

std::string ExportJson(const NormBall& ball, const std::string& name) {
  ordered_json j;
  j["format"] = "spunnorm-ball/1";
  j["name"] = name;
  j["b1"] = ball.b1;
  j["basis"] = ball.basis;
  j["internal_basis"] = ball.internal_basis;
  j["certified"] = ball.certified;
  j["dimension"] = ball.polytope.vertices.empty() ? -1 : static_cast<int>(ball.polytope.dimension);
  j["centrally_symmetric"] = ball.centrally_symmetric;
  j["generator_bound"] = ball.generator_bound ? ordered_json(ToString(*ball.generator_bound)) : ordered_json();
  ordered_json vs = ordered_json::array();
  for (const auto& v : ball.vertices) {
    ordered_json r;
    r["coordinates"] = RatJson(v.coordinates);
    r["qtons"] = v.qtons < 0 ? ordered_json() : ordered_json(v.qtons);
    r["scale"] = v.qtons < 0 ? ordered_json() : ordered_json("1/" + v.scale.get_str());
    r["surface"] = v.qtons < 0 ? ordered_json() : ordered_json(v.surface_type);
    r["embedded"] = v.embedded;
    r["label"] = v.Label();
    vs.push_back(r);
  }
  j["vertices"] = vs;
  ordered_json fs = ordered_json::array();
  for (const auto& f : ball.polytope.facets) fs.push_back({{"normal", RatJson(f.normal)}, {"offset", ToString(f.offset)}});
  j["facets"] = fs;
  j["notes"] = ball.notes;
  j["warnings"] = ball.warnings;
  return j.dump(2) + "\n";
}

std::string ExportOff(const NormBall& ball) {
  const Polytope& p = ball.polytope;
  if (p.vertices.empty() || p.ambient_dimension != 3 || p.dimension != 3)
    throw InputError("OFF export needs a three-dimensional ball");
  const auto verts = ToDouble(p.vertices);
  std::ostringstream out;
  out << "OFF\n" << verts.size() << " " << p.facets.size() << " " << Edges(p).size() << "\n";
  out << std::setprecision(17);
  for (const auto& v : verts) out << v[0] << " " << v[1] << " " << v[2] << "\n";
  for (const auto& f : p.facets) {
    std::vector<int> ids;
    for (size_t i = 0; i < p.vertices.size(); ++i)
      if (OnFacet(f, p.vertices[i])) ids.push_back(static_cast<int>(i));
    // Anticlockwise seen from outside.
    Point c(3, 0.0), n;
    for (int i : ids)
      for (int k = 0; k < 3; ++k) c[k] += verts[i][k] / ids.size();
    for (const auto& q : f.normal) n.push_back(q.get_d());
    Point u{verts[ids[0]][0] - c[0], verts[ids[0]][1] - c[1], verts[ids[0]][2] - c[2]};
    const Point w{n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]};
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      auto angle = [&](int i) {
        const Point r{verts[i][0] - c[0], verts[i][1] - c[1], verts[i][2] - c[2]};
        return std::atan2(Dot(r, w), Dot(r, u));
      };
      return angle(a) < angle(b);
    });
    out << ids.size();
    for (int i : ids) out << " " << i;
    out << "\n";
  }
  return out.str();
}

std::string ExportSvg(const NormBall& ball) {
  const Polytope& p = ball.polytope;
  const size_t d = p.dimension;
  if (p.vertices.empty() || d < 2 || d > 4 || p.ambient_dimension != d)
    throw InputError("SVG export needs a full-dimensional ball of dimension 2 to 4");
  std::vector<std::array<double, 2>> xy;
  if (d == 4) {
    xy = Schlegel(p);
  } else {
    for (auto v : ToDouble(p.vertices)) {
      if (d == 2) {
        xy.push_back({v[0], v[1]});
      } else {
        xy.push_back(View3(v));
      }
    }
  }
  double r = 1e-9;
  for (const auto& q : xy) r = std::max({r, std::abs(q[0]), std::abs(q[1])});
  const double size = 400, scale = 0.42 * size / r;
  auto sx = [&](double x) { return size / 2 + scale * x; };
  auto sy = [&](double y) { return size / 2 - scale * y; };
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& e : Edges(p))
    out << "<line x1=\"" << sx(xy[e[0]][0]) << "\" y1=\"" << sy(xy[e[0]][1]) << "\" x2=\"" << sx(xy[e[1]][0])
        << "\" y2=\"" << sy(xy[e[1]][1]) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (size_t i = 0; i < xy.size(); ++i) {
    out << "<circle cx=\"" << sx(xy[i][0]) << "\" cy=\"" << sy(xy[i][1]) << "\" r=\"3\" fill=\"#c0392b\"/>\n";
    out << "<text x=\"" << sx(xy[i][0]) + 5 << "\" y=\"" << sy(xy[i][1]) - 5
        << "\" font-size=\"10\" font-family=\"monospace\">" << ToString(p.vertices[i]) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace spunnorm
