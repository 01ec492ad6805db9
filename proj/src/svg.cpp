#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <string>

#include "minsect/cli_io.hpp"

namespace minsect {
namespace {

struct Point2 {
  double x, y;
};

Point2 lerp(Point2 a, Point2 b, double t) { return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}; }

// Fixed two-decimal formatting so output does not depend on stream state.
std::string num(double v) {
  if (std::fabs(v) < 0.005) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Point pushed `by` pixels away from `center` along the ray through `p`.
Point2 outward(Point2 center, Point2 p, double by) {
  const double dx = p.x - center.x, dy = p.y - center.y;
  const double len = std::hypot(dx, dy);
  if (len == 0.0) return p;
  return {p.x + dx / len * by, p.y + dy / len * by};
}

std::string text(Point2 at, double size, const std::string& cls, const std::string& body) {
  return "<text class=\"" + cls + "\" x=\"" + num(at.x) + "\" y=\"" + num(at.y) +
         "\" font-size=\"" + num(size) +
         "\" text-anchor=\"middle\" dominant-baseline=\"central\">" + body + "</text>\n";
}

}  // namespace

std::string emit_svg(const SurfaceWord& surface, const PointList& p, const SegmentList& c,
                     const RenderSpec& spec) {
  const auto& sides = surface.symbols();
  const std::size_t corners = 2 * sides.size();
  const double r = spec.polygon_radius;
  const double extent = 2.0 * (r + spec.margin);
  const Point2 center{r + spec.margin, r + spec.margin};

  // Corners clockwise from the top (SVG y grows downward).
  std::vector<Point2> vertex(corners);
  for (std::size_t j = 0; j < corners; ++j) {
    const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(j) /
                                                     static_cast<double>(corners);
    vertex[j] = {center.x + r * std::cos(angle), center.y + r * std::sin(angle)};
  }

  // Crossing points, evenly spaced along each labeled side in P order.
  std::map<EdgePoint, Point2> where;
  const auto order = p.cyclic_order();
  std::size_t at = 0;
  for (std::size_t t = 0; t < sides.size(); ++t) {
    const int m = p.multiplicity(sides[t].letter);
    for (int j = 0; j < m; ++j, ++at) {
      where[order[at]] = lerp(vertex[2 * t], vertex[2 * t + 1],
                              static_cast<double>(j + 1) / static_cast<double>(m + 1));
    }
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(extent) +
         "\" height=\"" + num(extent) + "\" viewBox=\"0 0 " + num(extent) + " " + num(extent) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out += "<g class=\"polygon\" fill=\"none\">\n";
  for (std::size_t t = 0; t < sides.size(); ++t) {
    const Point2 a = vertex[2 * t], b = vertex[2 * t + 1];
    out += "<line class=\"side\" x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" +
           num(b.x) + "\" y2=\"" + num(b.y) + "\" stroke=\"black\" stroke-width=\"" +
           num(spec.edge_stroke) + "\"/>\n";
    // Free boundary side, bowed inward.
    const Point2 d = vertex[(2 * t + 2) % corners];
    const Point2 mid = lerp(b, d, 0.5);
    const double bow = spec.boundary_bow * std::hypot(d.x - b.x, d.y - b.y);
    const Point2 ctrl = outward(center, mid, -2.0 * bow);
    out += "<path class=\"boundary\" d=\"M " + num(b.x) + " " + num(b.y) + " Q " + num(ctrl.x) +
           " " + num(ctrl.y) + " " + num(d.x) + " " + num(d.y) +
           "\" stroke=\"gray\" stroke-width=\"" + num(spec.edge_stroke) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g class=\"chords\" stroke=\"#1f5fbf\" stroke-width=\"" + num(spec.chord_stroke) +
         "\">\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Point2 a = where.at(c[i].start), b = where.at(c[i].end);
    out += "<line class=\"chord\" data-segment=\"" + std::to_string(i) + "\" x1=\"" + num(a.x) +
           "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g class=\"labels\" font-family=\"sans-serif\">\n";
  for (std::size_t t = 0; t < sides.size(); ++t) {
    const Point2 mid = lerp(vertex[2 * t], vertex[2 * t + 1], 0.5);
    out += text(outward(center, mid, 2.2 * spec.edge_font_size), spec.edge_font_size, "side-label",
                std::string(1, surface.to_char(sides[t])));
  }
  for (const auto& [pt, xy] : where) {
    out += "<circle class=\"point\" cx=\"" + num(xy.x) + "\" cy=\"" + num(xy.y) + "\" r=\"" +
           num(spec.point_radius) + "\" fill=\"black\"/>\n";
    out += text(outward(center, xy, spec.point_font_size), spec.point_font_size, "point-label",
                label(surface, pt));
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace minsect
