#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netlab/io.hpp"
#include "netlab/render.hpp"

using namespace netlab;

TEST_CASE("surface JSON round trip") {
  PolygonSpec reg = PolygonSpec::regular(6, 2.5);
  PolygonSpec reg2 = surface_from_json(surface_to_json(reg));
  CHECK(reg2.kind == PolygonSpec::Kind::Regular);
  CHECK(reg2.n == 6);
  CHECK(reg2.scale == 2.5);

  PolygonSpec tri = PolygonSpec::triangle(kPi / 6, kPi / 6, 2 * kPi / 3, 1.0);
  PolygonSpec tri2 = surface_from_json(surface_to_json(tri));
  CHECK(tri2.kind == PolygonSpec::Kind::Triangle);
  for (int i = 0; i < 3; ++i) CHECK(tri2.angles[i] == doctest::Approx(tri.angles[i]).epsilon(1e-14));

  json bad = {{"kind", "pentagon"}, {"scale", 1.0}};
  CHECK_THROWS_AS((void)surface_from_json(bad), Error);
  json short_n = {{"kind", "regular"}, {"n", 2}, {"scale", 1.0}};
  CHECK_THROWS_AS((void)surface_from_json(short_n), Error);
}

TEST_CASE("construct, serialize, parse, verify round trip for every family") {
  std::vector<Net> nets;
  for (int n : {3, 6, 9, 12}) nets.push_back(construct_theta_regular(n));
  for (int n : {4, 8, 12}) nets.push_back(construct_3regular_4n(n));
  for (int n : {3, 5, 7, 9}) nets.push_back(construct_figure8_odd(n));
  nets.push_back(construct_figure8_isosceles(kPi / 3, kPi / 3, kPi / 3));
  nets.push_back(construct_figure8_isosceles(kPi / 6, kPi / 6, 2 * kPi / 3));
  nets.push_back(construct_figure8_isosceles(70 * kPi / 180, 70 * kPi / 180, 40 * kPi / 180));
  nets.push_back(construct_bifocal_30_30_120());
  nets.push_back(construct_figure8_hexagon());

  for (const Net& net : nets) {
    json j = net_to_json(net);
    Surface surface(surface_from_json(j.at("surface")));
    Net loaded = net_from_json(j, surface);
    VerificationReport rep = verify(loaded, surface);
    CHECK(rep.pass);
    CHECK(loaded.graph_type == net.graph_type);
    CHECK(loaded.vertices.size() == net.vertices.size());
    CHECK(loaded.edges.size() == net.edges.size());
    for (size_t i = 0; i < net.edges.size(); ++i) {
      CHECK(loaded.edges[i].path.word == net.edges[i].path.word);
      CHECK(loaded.edges[i].path.length ==
            doctest::Approx(net.edges[i].path.length).epsilon(1e-12));
    }
  }
}

TEST_CASE("perturbed direction in the file fails verification with the defect visible") {
  Net net = construct_theta_regular(3);
  json j = net_to_json(net);
  j["edges"][0]["direction"] = j["edges"][0]["direction"].get<double>() + 1e-3;
  Surface surface(surface_from_json(j.at("surface")));
  Net loaded = net_from_json(j, surface);
  VerificationReport rep = verify(loaded, surface);
  CHECK(!rep.pass);
  CHECK(rep.vertex_defects[0] == doctest::Approx(1e-3).epsilon(0.01));
}

TEST_CASE("edges without a sheet tag load on the top sheet") {
  Net net = construct_theta_regular(3);
  json j = net_to_json(net);
  for (auto& ej : j["edges"]) ej.erase("sheet");
  Surface surface(surface_from_json(j.at("surface")));
  Net loaded = net_from_json(j, surface);
  CHECK(verify(loaded, surface).pass);
}

TEST_CASE("malformed net JSON raises parse errors") {
  Net net = construct_theta_regular(3);
  json j = net_to_json(net);
  Surface surface(surface_from_json(j.at("surface")));

  json missing = j;
  missing.erase("edges");
  CHECK_THROWS_AS((void)net_from_json(missing, surface), Error);

  json bad_index = j;
  bad_index["edges"][0]["a"] = 9;
  CHECK_THROWS_AS((void)net_from_json(bad_index, surface), Error);

  json bad_word = j;
  bad_word["edges"][0]["word"] = {17};
  CHECK_THROWS_AS((void)net_from_json(bad_word, surface), Error);
}

TEST_CASE("verification report serializes its findings") {
  Net net = construct_bifocal_30_30_120();
  Surface surface(net.surface_spec);
  VerificationReport rep = verify(net, surface);
  json j = verification_to_json(rep);
  CHECK(j["pass"] == true);
  CHECK(j["euler"]["V"] == 2);
  CHECK(j["euler"]["F"] == 3);
  CHECK(j["faces"].size() == 3);
}

TEST_CASE("admissibility report shape") {
  json j = admissibility_to_json(12);
  CHECK(j["n"] == 12);
  CHECK(j["three_regular"].size() == 5);
  CHECK(j["three_regular"][0][0] == 5);
  CHECK(j["three_regular"][0][1] == 1);
  CHECK(j["theta"]["admissible"] == true);
  CHECK(j["theta"]["x"] == 4);
  CHECK(j["bifocal"]["loop_x"] == 5);
  CHECK(j["bifocal"]["outer_x"] == 2);
  CHECK(j["figure8_angles"][1]["alpha_over_pi"] == "1/3");

  json j5 = admissibility_to_json(5);
  CHECK(j5["three_regular"].empty());
  CHECK(j5["theta"]["admissible"] == false);
  CHECK(j5["bifocal"]["admissible"] == false);
}

TEST_CASE("SVG output is deterministic and well formed") {
  Net net = construct_figure8_hexagon();
  Surface surface(net.surface_spec);
  std::string a = render_sheets(surface, net);
  std::string b = render_sheets(surface, net);
  CHECK(a == b);
  CHECK(a.find("<svg") == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("<polygon") != std::string::npos);
  CHECK(a.find("k=") != std::string::npos); // curvature labels

  std::string d1 = render_development(surface, net, 0);
  std::string d2 = render_development(surface, net, 0);
  CHECK(d1 == d2);
  CHECK(d1.find("<line") != std::string::npos);
  CHECK_THROWS_AS((void)render_development(surface, net, 5), Error);
}

TEST_CASE("an empty net still renders the polygons") {
  Surface surface(PolygonSpec::regular(5, 1.0));
  Net net;
  net.surface_spec = surface.spec();
  std::string svg = render_sheets(surface, net);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("path JSON carries the perpendicular flags") {
  Net net = construct_figure8_odd(5);
  json j = path_to_json(net.edges[0].path);
  CHECK(j["word"].size() == 1);
  CHECK(j["perpendicular_crossings"].size() == 1);
  CHECK(j["perpendicular_crossings"][0] == 0);
  CHECK(j["length"].get<double>() > 0.0);
}

TEST_CASE("search report JSON echoes its configuration") {
  SearchConfig cfg;
  cfg.n = 6;
  cfg.max_word_length = 5;
  SearchReport rep = search_figure8(cfg);
  json j = search_report_to_json(rep);
  CHECK(j["config"]["n"] == 6);
  CHECK(j["config"]["target"] == "figure8");
  CHECK(j["config"]["max_word_length"] == 5);
  CHECK(j["exhaustive_up_to"] == 5);
  CHECK(j.contains("solutions"));
  CHECK(j.contains("near_misses"));
}
