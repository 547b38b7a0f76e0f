// netlab: geodesic nets on doubled polygons.
//
// Subcommands: admissible, classify-triangle, construct, verify, search,
// render, repro. Exit codes: 0 success, 1 semantic failure (verification
// failed, or nothing found with --expect-found), 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "netlab/repro.hpp"

using namespace netlab;

namespace {

double tolerance_override() {
  if (const char* env = std::getenv("NETLAB_TOL")) {
    try {
      double v = std::stod(env);
      if (v > 0.0) return v;
    } catch (...) {
    }
  }
  return -1.0;
}

std::vector<double> parse_angles_deg(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok) * kPi / 180.0);
  if (out.size() != 3) throw Error(ErrorCode::ParseError, "expected three angles");
  return out;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << content;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodesic nets on doubled polygons"};
  app.require_subcommand(1);

  // admissible
  auto* adm = app.add_subcommand("admissible", "exact Gauss-Bonnet admissibility for n-gons");
  int adm_n = 0;
  std::string adm_graph;
  adm->add_option("--n", adm_n, "polygon size")->required();
  adm->add_option("--graph", adm_graph, "filter: theta|bifocal|figure8|three-regular");

  // classify-triangle
  auto* cls = app.add_subcommand("classify-triangle", "which nets a doubled triangle admits");
  std::string cls_angles;
  cls->add_option("--angles", cls_angles, "three angles in degrees, comma separated")->required();

  // construct
  auto* con = app.add_subcommand("construct", "build a known net family");
  std::string con_family, con_out, con_angles;
  int con_n = 0;
  double con_scale = 1.0;
  con->add_option("--family", con_family,
                  "theta|tetra|figure8-odd|figure8-isosceles|figure8-hexagon|bifocal-triangle")
      ->required();
  con->add_option("--n", con_n, "polygon size (theta, tetra, figure8-odd)");
  con->add_option("--angles", con_angles, "triangle angles in degrees (figure8-isosceles)");
  con->add_option("--scale", con_scale, "circumradius or longest side");
  con->add_option("-o,--output", con_out, "output net JSON path")->required();

  // verify
  auto* ver = app.add_subcommand("verify", "check the geodesic-net conditions of a net file");
  std::string ver_net;
  double ver_tol = -1.0;
  ver->add_option("--net", ver_net, "net JSON path")->required();
  ver->add_option("--tol", ver_tol, "geometric tolerance (default 1e-9 * scale)");

  // search
  auto* sea = app.add_subcommand("search", "bounded search for open net families");
  SearchConfig cfg;
  std::string sea_target = "figure8", sea_report;
  bool sea_near = false, sea_expect = false;
  sea->add_option("--n", cfg.n, "polygon size")->required();
  sea->add_option("--target", sea_target, "figure8|bifocal");
  sea->add_option("--max-word", cfg.max_word_length, "crossing-word length bound");
  sea->add_option("--max-length", cfg.max_length, "path length bound (default 20 * scale)");
  sea->add_option("--threads", cfg.threads, "worker threads");
  sea->add_option("--report", sea_report, "write the full report JSON here");
  sea->add_flag("--near-misses", sea_near, "include near misses in the report");
  sea->add_flag("--expect-found", sea_expect, "exit 1 when no solution is found");

  // render
  auto* ren = app.add_subcommand("render", "draw a net as SVG");
  std::string ren_net, ren_out, ren_mode = "sheets";
  int ren_edge = 0;
  ren->add_option("--net", ren_net, "net JSON path")->required();
  ren->add_option("-o,--output", ren_out, "output SVG path")->required();
  ren->add_option("--mode", ren_mode, "sheets|development");
  ren->add_option("--edge", ren_edge, "edge index for development mode");

  // repro
  auto* rep = app.add_subcommand("repro", "run the full reproduction table");
  int rep_threads = static_cast<int>(std::thread::hardware_concurrency());
  bool rep_quick = false;
  rep->add_option("--threads", rep_threads, "worker threads");
  rep->add_flag("--quick", rep_quick, "smaller bounds for a fast pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*adm) {
      if (adm_n < 3) throw Error(ErrorCode::InvalidSpec, "n must be at least 3");
      json full = admissibility_to_json(adm_n);
      if (adm_graph.empty()) {
        std::cout << full.dump(2) << "\n";
      } else {
        json part;
        part["n"] = adm_n;
        if (adm_graph == "theta")
          part["theta"] = full["theta"];
        else if (adm_graph == "bifocal")
          part["bifocal"] = full["bifocal"];
        else if (adm_graph == "figure8") {
          part["figure8_angles"] = full["figure8_angles"];
          part["figure8_degenerate"] = full["figure8_degenerate"];
        } else if (adm_graph == "three-regular")
          part["three_regular"] = full["three_regular"];
        else
          throw Error(ErrorCode::ParseError, "unknown graph filter: " + adm_graph);
        std::cout << part.dump(2) << "\n";
      }
      return 0;
    }

    if (*cls) {
      auto a = parse_angles_deg(cls_angles);
      TriangleClassification t = classify_triangle(a[0], a[1], a[2]);
      json j;
      std::vector<double> deg;
      std::stringstream ss(cls_angles);
      std::string tok;
      while (std::getline(ss, tok, ',')) deg.push_back(std::stod(tok));
      j["angles_deg"] = deg;
      j["theta"] = t.theta;
      j["bifocal"] = t.bifocal;
      j["figure8"] = t.figure8;
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*con) {
      Net net;
      if (con_family == "theta") {
        net = construct_theta_regular(con_n, con_scale);
      } else if (con_family == "tetra") {
        net = construct_3regular_4n(con_n, con_scale);
      } else if (con_family == "figure8-odd") {
        net = construct_figure8_odd(con_n, con_scale);
      } else if (con_family == "figure8-isosceles") {
        auto a = parse_angles_deg(con_angles);
        net = construct_figure8_isosceles(a[0], a[1], a[2], con_scale);
      } else if (con_family == "figure8-hexagon") {
        net = construct_figure8_hexagon(con_scale);
      } else if (con_family == "bifocal-triangle") {
        net = construct_bifocal_30_30_120(con_scale);
      } else {
        throw Error(ErrorCode::ParseError, "unknown family: " + con_family);
      }
      write_file(con_out, net_to_json(net).dump(2) + "\n");
      return 0;
    }

    if (*ver) {
      json j = load_json(ver_net);
      Surface surface(surface_from_json(j.at("surface")));
      Net net = net_from_json(j, surface);
      double tol = ver_tol > 0.0 ? ver_tol : tolerance_override();
      VerificationReport report = verify(net, surface, tol);
      std::cout << verification_to_json(report).dump(2) << "\n";
      return report.pass ? 0 : 1;
    }

    if (*sea) {
      if (sea_target == "figure8")
        cfg.target = SearchTarget::Figure8;
      else if (sea_target == "bifocal")
        cfg.target = SearchTarget::Bifocal;
      else
        throw Error(ErrorCode::ParseError, "unknown target: " + sea_target);
      cfg.report_near_misses = sea_near || cfg.report_near_misses;
      SearchReport report = run_search(cfg);
      json j = search_report_to_json(report);
      if (!sea_report.empty()) write_file(sea_report, j.dump(2) + "\n");
      json summary;
      summary["candidates_examined"] = report.candidates_examined;
      summary["solutions"] = report.solutions.size();
      summary["near_misses"] = report.near_misses.size();
      summary["notes"] = report.notes;
      std::cout << summary.dump(2) << "\n";
      return (sea_expect && report.solutions.empty()) ? 1 : 0;
    }

    if (*ren) {
      json j = load_json(ren_net);
      Surface surface(surface_from_json(j.at("surface")));
      Net net = net_from_json(j, surface);
      std::string svg;
      if (ren_mode == "sheets")
        svg = render_sheets(surface, net);
      else if (ren_mode == "development")
        svg = render_development(surface, net, ren_edge);
      else
        throw Error(ErrorCode::ParseError, "unknown mode: " + ren_mode);
      write_file(ren_out, svg);
      return 0;
    }

    if (*rep) {
      auto results = run_acceptance(std::max(1, rep_threads), rep_quick);
      bool all = true;
      for (const CriterionResult& r : results) {
        all = all && r.pass;
        std::printf("[%s] %-36s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
      }
      std::printf("%s\n", all ? "all criteria passed" : "SOME CRITERIA FAILED");
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
