#pragma once

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tiltcat/combinatorics.hpp"

namespace tiltcat::render {

inline constexpr int kMaxRenderN = 12;

inline void check_budget(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > kMaxRenderN)
    throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the rendering budget (n <= " +
                                std::to_string(kMaxRenderN) + ")");
}

/// "(a,b)(c,d)..." for a sorted coordinate list.
inline std::string coordinates_text(const std::vector<comb::Coordinate>& cs) {
  std::string s;
  for (const auto& c : cs) s += c.str();
  return s;
}

namespace detail {

struct Point {
  long x;
  long y;
};

// Vertex v of the regular (n+2)-gon; vertex 1 on top, numbering clockwise.
inline Point polygon_vertex(int n, int v, long radius, long centre) {
  const double angle = 2.0 * std::numbers::pi * (v - 1) / (n + 2);
  return {centre + std::lround(radius * std::sin(angle)), centre - std::lround(radius * std::cos(angle))};
}

}  // namespace detail

inline std::string triangulation_svg(const comb::Triangulation& t) {
  check_budget(t.n());
  const int n = t.n();
  const long size = 240, radius = 90, centre = 120;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (int v = 1; v <= n + 2; ++v) {
    const auto p = detail::polygon_vertex(n, v, radius, centre);
    os << (v > 1 ? " " : "") << p.x << ',' << p.y;
  }
  os << "\"/>\n";
  for (const auto& d : t.diagonals()) {
    const auto p = detail::polygon_vertex(n, d.a(), radius, centre);
    const auto q = detail::polygon_vertex(n, d.b(), radius, centre);
    os << "<line x1=\"" << p.x << "\" y1=\"" << p.y << "\" x2=\"" << q.x << "\" y2=\"" << q.y
       << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
  }
  for (int v = 1; v <= n + 2; ++v) {
    const auto p = detail::polygon_vertex(n, v, radius + 16, centre);
    os << "<text x=\"" << p.x << "\" y=\"" << p.y + 5 << "\" text-anchor=\"middle\" font-size=\"14\">" << v
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

/// Vertex (i,j) drawn at column i+j and height j-i, projective-injective on top.
inline std::string arquiver_svg(const comb::ArQuiver& q) {
  check_budget(q.n);
  const int n = q.n;
  const long step = 40, margin = 30;
  auto pos = [&](const comb::Coordinate& c) {
    const long x = margin + step * (c.a() + c.b() - 4);
    const long y = margin + step * (n - (c.b() - c.a() - 2) - 1);
    return detail::Point{x, y};
  };
  const long width = 2 * margin + step * (2 * n - 2);
  const long height = 2 * margin + step * (n - 1);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"8\" refY=\"4\" "
        "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>\n";
  for (const auto& a : q.arrows) {
    const auto p = pos(a.from), r = pos(a.to);
    // shorten both ends so labels stay readable
    const long dx = (r.x - p.x) / 4, dy = (r.y - p.y) / 4;
    os << "<line x1=\"" << p.x + dx << "\" y1=\"" << p.y + dy << "\" x2=\"" << r.x - dx << "\" y2=\"" << r.y - dy
       << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (const auto& v : q.vertices) {
    const auto p = pos(v);
    os << "<text x=\"" << p.x << "\" y=\"" << p.y + 4 << "\" text-anchor=\"middle\" font-size=\"11\">" << v.str()
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline std::string arquiver_text(const comb::ArQuiver& q) {
  check_budget(q.n);
  std::ostringstream os;
  os << "vertices " << q.vertices.size() << ":";
  for (const auto& v : q.vertices) os << ' ' << v.str();
  os << "\narrows " << q.arrows.size() << ":";
  for (const auto& a : q.arrows) os << ' ' << a.from.str() << "->" << a.to.str();
  os << '\n';
  return os.str();
}

}  // namespace tiltcat::render
