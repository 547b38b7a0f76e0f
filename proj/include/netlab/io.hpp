#pragma once

// JSON serialization for surfaces, paths, nets, verification reports, and
// search reports, plus net reconstruction: edges are stored as (vertex pair,
// start sheet, crossing word, launch direction) and re-traced on load, with
// the developed image of the far vertex fixing the length.

#include <json.hpp>

#include "netlab/admissibility.hpp"
#include "netlab/search.hpp"

namespace netlab {

using json = nlohmann::ordered_json;

inline json surface_to_json(const PolygonSpec& spec) {
  json j;
  if (spec.kind == PolygonSpec::Kind::Regular) {
    j["kind"] = "regular";
    j["n"] = spec.n;
  } else {
    j["kind"] = "triangle";
    j["angles_deg"] = {spec.angles[0] * 180.0 / kPi, spec.angles[1] * 180.0 / kPi,
                       spec.angles[2] * 180.0 / kPi};
  }
  j["scale"] = spec.scale;
  return j;
}

inline PolygonSpec surface_from_json(const json& j) {
  try {
    PolygonSpec spec;
    std::string kind = j.at("kind").get<std::string>();
    spec.scale = j.value("scale", 1.0);
    if (kind == "regular") {
      spec.kind = PolygonSpec::Kind::Regular;
      spec.n = j.at("n").get<int>();
    } else if (kind == "triangle") {
      spec.kind = PolygonSpec::Kind::Triangle;
      auto a = j.at("angles_deg");
      for (int i = 0; i < 3; ++i) spec.angles[i] = a.at(i).get<double>() * kPi / 180.0;
      // Degree inputs that nominally sum to 180 should be exact in radians.
      double sum = spec.angles[0] + spec.angles[1] + spec.angles[2];
      if (std::abs(sum - kPi) < 1e-9) {
        double fix = kPi / sum;
        for (double& x : spec.angles) x *= fix;
      }
    } else {
      throw Error(ErrorCode::ParseError, "unknown surface kind: " + kind);
    }
    Surface::validate(spec);
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline json path_to_json(const GeodesicPath& p) {
  json j;
  j["start"] = {{"sheet", p.start.sheet == Sheet::Top ? "top" : "bottom"},
                {"x", p.start.coords.x},
                {"y", p.start.coords.y}};
  j["direction"] = angle_of(p.start_dir);
  j["word"] = p.word;
  j["length"] = p.length;
  j["perpendicular_crossings"] = p.perpendicular_crossings();
  return j;
}

inline json net_to_json(const Net& net) {
  json j;
  j["surface"] = surface_to_json(net.surface_spec);
  j["vertices"] = json::array();
  for (const SurfacePoint& v : net.vertices)
    j["vertices"].push_back({{"sheet", v.sheet == Sheet::Top ? "top" : "bottom"},
                             {"x", v.coords.x},
                             {"y", v.coords.y}});
  j["edges"] = json::array();
  for (const NetEdge& e : net.edges) {
    json ej;
    ej["a"] = e.a;
    ej["b"] = e.b;
    ej["sheet"] = e.path.start.sheet == Sheet::Top ? "top" : "bottom";
    ej["word"] = e.path.word;
    ej["direction"] = angle_of(e.path.start_dir);
    j["edges"].push_back(ej);
  }
  j["type"] = graph_type_name(net.graph_type);
  return j;
}

inline GraphType graph_type_from_string(const std::string& s) {
  if (s == "theta") return GraphType::Theta;
  if (s == "figure8") return GraphType::FigureEight;
  if (s == "bifocal") return GraphType::Bifocal;
  if (s == "general3regular") return GraphType::General3Regular;
  return GraphType::Other;
}

// Rebuilds a net from its serialized combinatorics. The stored direction is
// trusted for the re-trace so that perturbed inputs fail verification in the
// balancing report rather than at parse time.
inline Net net_from_json(const json& j, const Surface& surface) {
  try {
    Net net;
    net.surface_spec = surface.spec();
    net.graph_type = graph_type_from_string(j.value("type", "other"));
    for (const json& vj : j.at("vertices")) {
      Sheet sheet = vj.at("sheet").get<std::string>() == "top" ? Sheet::Top : Sheet::Bottom;
      net.vertices.push_back(surface.point(sheet, {vj.at("x").get<double>(),
                                                   vj.at("y").get<double>()}));
    }
    for (const json& ej : j.at("edges")) {
      NetEdge e;
      e.a = ej.at("a").get<int>();
      e.b = ej.at("b").get<int>();
      if (e.a < 0 || e.a >= static_cast<int>(net.vertices.size()) || e.b < 0 ||
          e.b >= static_cast<int>(net.vertices.size()))
        throw Error(ErrorCode::ParseError, "edge endpoint out of range");
      Sheet sheet = ej.value("sheet", "top") == std::string("top") ? Sheet::Top : Sheet::Bottom;
      std::vector<int> word = ej.at("word").get<std::vector<int>>();
      for (int w : word)
        if (w < 0 || w >= surface.edge_count())
          throw Error(ErrorCode::ParseError, "crossing word entry out of range");
      double direction = ej.at("direction").get<double>();
      SurfacePoint start = net.vertices[static_cast<size_t>(e.a)];
      start.sheet = sheet;
      Vec2 target = unfolding_isometries(surface, word)
                        .back()
                        .apply(net.vertices[static_cast<size_t>(e.b)].coords);
      double len = distance(start.coords, target);
      if (len <= 0.0) throw Error(ErrorCode::ParseError, "degenerate edge");
      e.path = trace(surface, start, unit(direction),
                     TraceLimits{len, static_cast<int>(word.size())});
      net.edges.push_back(e);
    }
    return net;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline json verification_to_json(const VerificationReport& r) {
  json j;
  j["pass"] = r.pass;
  j["balanced"] = {{"max_defect", r.max_vertex_defect}, {"per_vertex", r.vertex_defects}};
  j["geodesic"] = {{"max_deviation", r.max_edge_deviation}, {"per_edge", r.edge_deviations}};
  j["endpoints"] = {{"max_defect", r.max_endpoint_defect}, {"per_edge", r.edge_endpoint_defects}};
  j["embedded"] = r.embedded;
  j["euler"] = {{"V", r.V}, {"E", r.E}, {"F", r.F}, {"ok", r.euler_ok}};
  j["faces"] = json::array();
  for (const FaceBudget& f : r.faces)
    j["faces"].push_back({{"id", f.id},
                          {"y", f.y},
                          {"x", f.x},
                          {"cone_curvature", f.cone_curvature},
                          {"cones", f.cone_indices},
                          {"turning_angles", f.turning_angles},
                          {"residual", f.residual}});
  j["max_residual"] = r.max_residual;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

inline json admissibility_to_json(int n) {
  json j;
  j["n"] = n;
  Constraint3Regular c = solve_3regular(n);
  j["three_regular"] = json::array();
  for (auto [x, y] : c.solutions) j["three_regular"].push_back({x, y});
  j["degenerate_allowed"] = c.degenerate_allowed;
  ThetaAdmissibility t = theta_admissible(n);
  j["theta"]["admissible"] = t.admissible;
  if (t.admissible) j["theta"]["x"] = t.x_per_face;
  BifocalAdmissibility b = bifocal_admissible(n);
  j["bifocal"]["admissible"] = b.admissible;
  if (b.admissible) {
    j["bifocal"]["loop_x"] = b.loop_x;
    j["bifocal"]["outer_x"] = b.outer_x;
  }
  LoopAngleSet angles = figure8_loop_angles(n);
  j["figure8_angles"] = json::array();
  for (auto& [x, a] : angles.entries)
    j["figure8_angles"].push_back({{"x", x}, {"alpha_over_pi", a.str()}});
  j["figure8_degenerate"] = json::array();
  for (auto& [x, a] : angles.degenerate)
    j["figure8_degenerate"].push_back({{"x", x}, {"alpha_over_pi", a.str()}});
  return j;
}

inline json search_report_to_json(const SearchReport& r) {
  json j;
  j["config"] = {{"n", r.config.n},
                 {"target", r.config.target == SearchTarget::Figure8 ? "figure8" : "bifocal"},
                 {"max_word_length", r.config.max_word_length},
                 {"max_length", r.config.effective_max_length()},
                 {"report_near_misses", r.config.report_near_misses},
                 {"near_miss_tolerance", r.config.near_miss_tolerance},
                 {"scale", r.config.scale}};
  j["candidates_examined"] = r.candidates_examined;
  j["exhaustive_up_to"] = r.exhaustive_up_to;
  j["solutions"] = json::array();
  for (const Net& net : r.solutions) j["solutions"].push_back(net_to_json(net));
  j["near_misses"] = json::array();
  for (const NearMiss& nm : r.near_misses)
    j["near_misses"].push_back({{"word", nm.word}, {"angle_defect", nm.angle_defect}});
  j["notes"] = r.notes;
  return j;
}

} // namespace netlab
