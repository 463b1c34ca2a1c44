#include "polysec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "polysec/heptagon.hpp"

namespace polysec {
namespace {

struct Box {
  double x0, y0, x1, y1;
};

struct Xy {
  double x, y;
};

// Clips a*x + b*y + c = 0 to the box; empty when the line misses it.
std::vector<Xy> clip_line(double a, double b, double c, const Box& box) {
  std::vector<Xy> hits;
  auto add = [&](double x, double y) {
    const double eps = 1e-12 * (1 + std::abs(box.x1 - box.x0) + std::abs(box.y1 - box.y0));
    if (x < box.x0 - eps || x > box.x1 + eps || y < box.y0 - eps || y > box.y1 + eps) return;
    for (const auto& h : hits) {
      if (std::abs(h.x - x) < eps && std::abs(h.y - y) < eps) return;
    }
    hits.push_back({x, y});
  };
  if (b != 0) {
    add(box.x0, -(a * box.x0 + c) / b);
    add(box.x1, -(a * box.x1 + c) / b);
  }
  if (a != 0) {
    add(-(b * box.y0 + c) / a, box.y0);
    add(-(b * box.y1 + c) / a, box.y1);
  }
  if (hits.size() > 2) hits.resize(2);
  return hits;
}

}  // namespace

std::string render_svg(const Polygon& p, const SvgOptions& opts) {
  std::vector<Xy> v;
  for (const auto& q : p.vertices()) v.push_back({q.x.get_d(), q.y.get_d()});
  Box box{v[0].x, v[0].y, v[0].x, v[0].y};
  for (const auto& q : v) {
    box.x0 = std::min(box.x0, q.x);
    box.x1 = std::max(box.x1, q.x);
    box.y0 = std::min(box.y0, q.y);
    box.y1 = std::max(box.y1, q.y);
  }
  const double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
  const bool draw_lines = opts.std_lines && p.size() == 7;
  if (draw_lines) {
    // Stretch the box so every standardization line passes through it:
    // include the point of each line nearest the vertex centroid.
    Xy center{0, 0};
    for (const auto& q : v) center = {center.x + q.x / 7, center.y + q.y / 7};
    for (int i = 0; i < 7; ++i) {
      const Vec3 h = std_points(p, i).line.h();
      const double a = h.x.get_d(), b = h.y.get_d(), c = h.w.get_d();
      const double n2 = a * a + b * b;
      if (n2 == 0) continue;
      const double t = (a * center.x + b * center.y + c) / n2;
      const Xy foot{center.x - t * a, center.y - t * b};
      box.x0 = std::min(box.x0, foot.x);
      box.x1 = std::max(box.x1, foot.x);
      box.y0 = std::min(box.y0, foot.y);
      box.y1 = std::max(box.y1, foot.y);
    }
  }
  const double pad = draw_lines ? span * 0.6 : span * 0.1;
  box = {box.x0 - pad, box.y0 - pad, box.x1 + pad, box.y1 + pad};

  const double size = 600;
  const double scale = size / std::max(box.x1 - box.x0, box.y1 - box.y0);
  auto sx = [&](double x) { return (x - box.x0) * scale; };
  auto sy = [&](double y) { return (box.y1 - y) * scale; };
  const double stroke = 2;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (box.x1 - box.x0) * scale << "\" height=\""
      << (box.y1 - box.y0) * scale << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (draw_lines) {
    for (int i = 0; i < 7; ++i) {
      const ProjLine line = std_points(p, i).line;
      const Crossing kind = classify_line(p, i);
      const bool crossing = kind != Crossing::NonCrossing;
      const auto ends = clip_line(line.h().x.get_d(), line.h().y.get_d(), line.h().w.get_d(), box);
      if (ends.size() < 2) continue;
      const char* color = kind == Crossing::PlusCrossing ? "#c0392b" : kind == Crossing::MinusCrossing ? "#e67e22" : "#27ae60";
      out << "<line class=\"std-line " << (crossing ? "crossing" : "noncrossing") << "\" data-index=\"" << i
          << "\" data-kind=\"" << crossing_name(kind) << "\" x1=\"" << sx(ends[0].x) << "\" y1=\""
          << sy(ends[0].y) << "\" x2=\"" << sx(ends[1].x) << "\" y2=\"" << sy(ends[1].y) << "\" stroke=\""
          << color << "\" stroke-width=\"1\" stroke-dasharray=\"6 3\"/>\n";
    }
  }

  out << "<polygon class=\"outline\" points=\"";
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << sx(v[k].x) << "," << sy(v[k].y);
  out << "\" fill=\"#dfe9f5\" stroke=\"#1f3a5f\" stroke-width=\"" << stroke << "\"/>\n";

  if (opts.labels) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      out << "<text x=\"" << sx(v[k].x) + 6 << "\" y=\"" << sy(v[k].y) - 6
          << "\" font-family=\"sans-serif\" font-size=\"14\">p" << k << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace polysec
