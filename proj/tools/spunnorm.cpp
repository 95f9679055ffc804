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


// spunnorm command line tool.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spunnorm/angle_structures.hpp"
#include "spunnorm/boundary_maps.hpp"
#include "spunnorm/homology.hpp"
#include "spunnorm/norm_ball.hpp"
#include "spunnorm/qcoords.hpp"
#include "spunnorm/surface_build.hpp"

namespace {

using nlohmann::ordered_json;
using namespace spunnorm;

constexpr int kExitInput = 2;
constexpr int kExitContract = 3;
constexpr int kExitUncertified = 4;

ordered_json Slopes(const std::vector<PeripheralPair>& ps) {
  ordered_json out = ordered_json::array();
  for (const auto& p : ps) out.push_back({std::stol(p.meridian.get_str()), std::stol(p.longitude.get_str())});
  return out;
}

ordered_json Rats(const RatVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& q : v) out.push_back(ToString(q));
  return out;
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// A vector argument names a file; text that is not a file is parsed directly.
IntVector ReadVector(const std::string& arg) {
  if (!std::filesystem::exists(arg)) return ParseQuadVector(arg);
  std::ifstream in(arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseQuadVector(ss.str());
}

int Info(const std::string& file) {
  const IdealTriangulation t = LoadTriangulationFile(file);
  const Homology h(t);
  ordered_json j;
  j["name"] = t.name();
  j["tetrahedra"] = t.size();
  ordered_json edges = ordered_json::array();
  for (const auto& e : t.edge_classes()) edges.push_back(e.valence);
  j["edge_valences"] = edges;
  ordered_json cusps = ordered_json::array();
  for (const auto& c : t.cusps()) cusps.push_back({{"triangles", c.triangles.size()}, {"euler", c.euler}});
  j["cusps"] = cusps;
  j["internal_basis"] = t.has_internal_basis();
  j["b1"] = h.b1();
  ordered_json torsion = ordered_json::array();
  for (const auto& n : h.torsion()) torsion.push_back(n.get_str());
  j["torsion"] = torsion;
  j["pseudo_manifold_betti"] = h.betti_pseudo();
  j["homology_basis"] = h.basis_id();
  ordered_json lon = ordered_json::array();
  for (const auto& l : h.longitudes())
    lon.push_back({{"direction", {std::stol(l.direction.meridian.get_str()), std::stol(l.direction.longitude.get_str())}},
                   {"order", l.order.get_str()}});
  j["homological_longitudes"] = lon;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int Angles(const std::string& file) {
  const IdealTriangulation t = LoadTriangulationFile(file);
  const AngleStructure a = SolveAngleStructure(t);
  ordered_json j;
  j["alpha"] = Rats(a.alpha);
  ordered_json hol = ordered_json::array();
  for (const auto& e : a.ledger)
    hol.push_back({{"cusp", e.cusp}, {"meridian", ToString(e.meridian)}, {"longitude", ToString(e.longitude)}});
  j["holonomy"] = hol;
  j["satisfied"] = SatisfiesAngleSystem(t, a.alpha);
  std::cout << j.dump(2) << "\n";
  return 0;
}

ordered_json EntryJson(const QtonsEntry& e) {
  ordered_json j;
  j["index"] = e.index;
  ordered_json v = ordered_json::array();
  for (const auto& x : e.vector) v.push_back(std::stol(x.get_str()));
  j["vector"] = v;
  ordered_json quads = ordered_json::array();
  for (size_t i = 0; i < e.vector.size(); ++i)
    if (e.vector[i] != 0) quads.push_back(OrientedQuadName(static_cast<int>(i)));
  j["quads"] = quads;
  j["euler"] = ToString(e.euler);
  j["homology"] = Rats(e.homology);
  j["outward"] = Slopes(e.boundary.outward);
  j["inward"] = Slopes(e.boundary.inward);
  j["spinning_slopes"] = Slopes(e.spinning);
  j["embedded"] = e.embedded;
  j["ends_embedded"] = e.ends_embeddable;
  if (e.surface) {
    j["surface"] = e.surface->type;
    j["connected"] = e.surface->connected;
  } else {
    j["surface_error"] = e.surface_error;
  }
  return j;
}

int Qtons(const std::string& file, int index, unsigned threads) {
  const IdealTriangulation t = LoadTriangulationFile(file);
  QtonsOptions opt;
  opt.threads = threads;
  const QtonsTable table = EnumerateQtons(t, opt);
  if (index >= 0) {
    if (index >= static_cast<int>(table.entries.size()))
      throw InputError("qtons index " + std::to_string(index) + " out of range (" +
                       std::to_string(table.entries.size()) + " rays)");
    std::cout << EntryJson(table.entries[index]).dump(2) << "\n";
    return 0;
  }
  std::cout << table.entries.size() << " qtons, " << table.basis << " homology basis\n";
  for (const auto& e : table.entries) {
    std::cout << e.index << ": chi " << ToString(e.euler) << ", H " << ToString(e.homology) << ", "
              << (e.surface ? e.surface->type : "?") << (e.embedded ? ", embedded" : ", immersed") << "\n";
  }
  return 0;
}

int Surface(const std::string& file, const std::string& vector, bool oriented, const std::string& plus) {
  const IdealTriangulation t = LoadTriangulationFile(file);
  IntVector x = ReadVector(vector);
  if (!plus.empty()) x = HakenSum(t, x, ReadVector(plus));
  const size_t want = static_cast<size_t>((oriented ? kOrientedPerTet : kTypesPerTet) * t.size());
  if (x.size() != want)
    throw InputError("expected " + std::to_string(want) + " coordinates, got " + std::to_string(x.size()));
  const RatVector alpha = SolveAngleStructure(t).alpha;
  const SurfaceReport r = Analyze(Reconstruct(t, x, alpha));
  ordered_json j;
  j["connected"] = r.connected;
  j["orientable"] = r.orientable;
  j["euler"] = r.euler;
  j["boundary"] = r.boundary_components;
  j["type"] = r.type;
  if (oriented) {
    const BoundaryClass b = BoundaryClasses(t, x);
    j["slopes"] = {{"outward", Slopes(b.outward)}, {"inward", Slopes(b.inward)}};
    j["spinning_slopes"] = Slopes(SpinningSlopes(t, ForgetOrientation(x)));
    j["embedded"] = IsEmbedded(t, x, alpha);
    j["ends_embedded"] = EndsEmbeddable(t, x);
  } else {
    j["slopes"] = nullptr;
    j["spinning_slopes"] = Slopes(SpinningSlopes(t, x));
    j["embedded"] = true;
    j["ends_embedded"] = nullptr;
  }
  j["internal_basis"] = t.has_internal_basis();
  ordered_json comps = ordered_json::array();
  for (const auto& c : r.components)
    comps.push_back({{"type", c.type}, {"euler", c.euler}, {"boundary", c.boundary_components}, {"quads", c.quads}});
  j["components"] = comps;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int NormBallCmd(const std::string& file, const std::string& json, const std::string& off, const std::string& svg,
                unsigned threads) {
  const IdealTriangulation t = LoadTriangulationFile(file);
  QtonsOptions opt;
  opt.threads = threads;
  const NormBall ball = ComputeNormBall(t, opt);
  if (!ball.certified) std::cout << "warning: not a certified norm ball (b1 = " << ball.b1 << ")\n";
  if (ball.generator_bound)
    std::cout << "generator norm <= " << ToString(*ball.generator_bound) << "\n";
  for (size_t i = 0; i < ball.vertices.size(); ++i)
    std::cout << "Vertex " << i << ": represented by " << ball.vertices[i].Label()
              << (ball.vertices[i].qtons < 0 ? ""
                  : ball.vertices[i].embedded ? ", embedded qtons " + std::to_string(ball.vertices[i].qtons)
                                              : ", immersed qtons " + std::to_string(ball.vertices[i].qtons))
              << "\n";
  for (const auto& n : ball.notes) std::cout << "note: " << n << "\n";
  for (const auto& w : ball.warnings) std::cerr << "warning: " << w << "\n";
  if (!json.empty()) WriteFile(json, ExportJson(ball, t.name()));
  if (!off.empty()) WriteFile(off, ExportOff(ball));
  if (!svg.empty()) WriteFile(svg, ExportSvg(ball));
  return ball.b1 == 1 ? kExitUncertified : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thurston norm balls from ideal triangulations"};
  app.require_subcommand(1);
  std::string file, json, off, svg, vector, plus;
  unsigned threads = 1;
  int index = -1;
  bool oriented = false;

  auto* info = app.add_subcommand("info", "Triangulation summary");
  info->add_option("file", file, "Triangulation (native JSON or SnapPea)")->required();
  auto* convert = app.add_subcommand("convert", "Print the triangulation in the native JSON format");
  convert->add_option("file", file)->required();
  auto* angles = app.add_subcommand("angles", "Generalized angle structure");
  angles->add_option("file", file)->required();
  auto* nb = app.add_subcommand("normball", "Thurston norm unit ball");
  nb->add_option("file", file)->required();
  nb->add_option("--json", json, "Write the JSON report");
  nb->add_option("--off", off, "Write an OFF polyhedron (3D only)");
  nb->add_option("--svg", svg, "Write an SVG projection (2D to 4D)");
  nb->add_option("--threads", threads)->check(CLI::PositiveNumber);
  auto* qt = app.add_subcommand("qtons", "Admissible extreme rays");
  qt->add_option("file", file)->required();
  qt->add_option("--index", index, "Print one entry as JSON");
  qt->add_option("--threads", threads)->check(CLI::PositiveNumber);
  auto* sf = app.add_subcommand("surface", "Analyze one surface");
  sf->add_option("file", file)->required();
  sf->add_option("--vector", vector, "Quad vector file (or literal)")->required();
  sf->add_flag("--oriented", oriented, "Vector has 6t oriented coordinates");
  sf->add_option("--plus", plus, "Second vector; analyze the Haken sum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  try {
    if (*info) return Info(file);
    if (*convert) {
      std::cout << SerializeNative(LoadTriangulationFile(file));
      return 0;
    }
    if (*angles) return Angles(file);
    if (*nb) return NormBallCmd(file, json, off, svg, threads);
    if (*qt) return Qtons(file, index, threads);
    if (*sf) return Surface(file, vector, oriented, plus);
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContract;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
