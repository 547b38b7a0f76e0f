#pragma once

// Deterministic SVG rendering: the two sheets side by side with the net
// overlaid and cone points labeled, or the unfolded corridor of one edge
// with its straight development. Coordinates are emitted at fixed precision
// so identical inputs produce identical bytes.

#include <cstdio>
#include <sstream>
#include <string>

#include "netlab/net.hpp"

namespace netlab {

namespace detail {

inline std::string fmt(double v) {
  char buf[40];
  if (v == 0.0) v = 0.0; // normalize negative zero
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct SvgCanvas {
  std::ostringstream body;
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;

  void grow(Vec2 p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }

  void polygon(const std::vector<Vec2>& pts, const std::string& style) {
    body << "<polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) body << ' ';
      body << fmt(pts[i].x) << ',' << fmt(-pts[i].y);
      grow({pts[i].x, -pts[i].y});
    }
    body << "\" " << style << "/>\n";
  }

  void line(Vec2 a, Vec2 b, const std::string& style) {
    body << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(-a.y) << "\" x2=\"" << fmt(b.x)
         << "\" y2=\"" << fmt(-b.y) << "\" " << style << "/>\n";
    grow({a.x, -a.y});
    grow({b.x, -b.y});
  }

  void circle(Vec2 c, double r, const std::string& style) {
    body << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(-c.y) << "\" r=\"" << fmt(r)
         << "\" " << style << "/>\n";
    grow({c.x - r, -c.y - r});
    grow({c.x + r, -c.y + r});
  }

  void text(Vec2 p, const std::string& s, double size) {
    body << "<text x=\"" << fmt(p.x) << "\" y=\"" << fmt(-p.y) << "\" font-size=\""
         << fmt(size) << "\" font-family=\"monospace\">" << s << "</text>\n";
    grow({p.x, -p.y});
  }

  std::string finish() const {
    double pad = 0.05 * std::max(max_x - min_x, max_y - min_y);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(min_x - pad) << ' '
        << fmt(min_y - pad) << ' ' << fmt(max_x - min_x + 2 * pad) << ' '
        << fmt(max_y - min_y + 2 * pad) << "\">\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

} // namespace detail

// Top and bottom sheets side by side with the net overlaid and cone points
// marked with their curvature.
inline std::string render_sheets(const Surface& surface, const Net& net) {
  detail::SvgCanvas svg;
  double shift = 2.4 * surface.scale();
  auto place = [&](Vec2 p, Sheet sheet) {
    return sheet == Sheet::Top ? p : Vec2{p.x + shift, p.y};
  };
  const std::string outline = "fill=\"none\" stroke=\"black\" stroke-width=\"0.01\"";
  for (Sheet sheet : {Sheet::Top, Sheet::Bottom}) {
    std::vector<Vec2> pts;
    for (Vec2 v : surface.vertices()) pts.push_back(place(v, sheet));
    svg.polygon(pts, outline);
    for (const ConePoint& c : surface.cone_points()) {
      Vec2 p = place(c.position, sheet);
      svg.circle(p, 0.02 * surface.scale(), "fill=\"black\"");
      char label[48];
      std::snprintf(label, sizeof(label), "k=%.4f", c.curvature);
      svg.text(p + Vec2{0.03 * surface.scale(), 0.03 * surface.scale()}, label,
               0.08 * surface.scale());
    }
  }
  const std::string edge_style = "stroke=\"crimson\" stroke-width=\"0.015\"";
  for (const NetEdge& e : net.edges)
    for (const PathSegment& s : e.path.segments)
      svg.line(place(s.a, s.sheet), place(s.b, s.sheet), edge_style);
  for (const SurfacePoint& v : net.vertices) {
    svg.circle(place(v.coords, Sheet::Top), 0.018 * surface.scale(), "fill=\"navy\"");
    if (!v.locus.is_interior() || v.sheet == Sheet::Bottom)
      svg.circle(place(v.coords, Sheet::Bottom), 0.018 * surface.scale(), "fill=\"navy\"");
  }
  return svg.finish();
}

// Unfolded polygon corridor of one net edge with the straight developed path.
inline std::string render_development(const Surface& surface, const Net& net, int edge_index) {
  if (edge_index < 0 || edge_index >= static_cast<int>(net.edges.size()))
    throw Error(ErrorCode::ParseError, "edge index out of range");
  const GeodesicPath& path = net.edges[static_cast<size_t>(edge_index)].path;
  Development dev = develop(surface, path);
  detail::SvgCanvas svg;
  const std::string outline = "fill=\"none\" stroke=\"gray\" stroke-width=\"0.008\"";
  for (const Iso2& iso : dev.isometries) {
    std::vector<Vec2> pts;
    for (Vec2 v : surface.vertices()) pts.push_back(iso.apply(v));
    svg.polygon(pts, outline);
  }
  svg.line(dev.start, dev.end, "stroke=\"crimson\" stroke-width=\"0.015\"");
  svg.circle(dev.start, 0.02 * surface.scale(), "fill=\"navy\"");
  svg.circle(dev.end, 0.02 * surface.scale(), "fill=\"navy\"");
  return svg.finish();
}

} // namespace netlab
