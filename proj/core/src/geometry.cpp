#include "hdw/geometry.hpp"

#include <set>

namespace hdw {

bool is_collinear(std::span<const Point> points) {
  if (points.size() < 2) throw domain_error("is_collinear: need at least 2 points");
  {
    std::set<Point> seen(points.begin(), points.end());
    if (seen.size() != points.size())
      throw domain_error("is_collinear: duplicate points");
  }
  if (points.size() == 2) return true;
  const Point& p0 = points[0];
  const std::size_t k = p0.size();
  Point u(k);
  for (std::size_t j = 0; j < k; ++j) u[j] = points[1][j] - p0[j];
  for (std::size_t i = 2; i < points.size(); ++i) {
    // every 2x2 minor of (u | v) must vanish
    for (std::size_t a = 0; a < k; ++a) {
      Coord va = points[i][a] - p0[a];
      for (std::size_t b = a + 1; b < k; ++b) {
        Coord vb = points[i][b] - p0[b];
        if (static_cast<__int128>(u[a]) * vb != static_cast<__int128>(u[b]) * va)
          return false;
      }
    }
  }
  return true;
}

Point primitive_direction(Point v) {
  Coord g = 0;
  for (Coord c : v) g = std::gcd(g, c < 0 ? -c : c);
  if (g == 0) throw domain_error("primitive_direction: zero vector");
  for (Coord& c : v) c /= g;
  for (Coord c : v) {
    if (c > 0) break;
    if (c < 0) {
      for (Coord& d : v) d = -d;
      break;
    }
  }
  return v;
}

LineKey line_key(const Point& p, const Point& q) {
  Point d(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) d[j] = q[j] - p[j];
  d = primitive_direction(std::move(d));
  std::size_t i = 0;
  while (d[i] == 0) ++i;
  // reduce p so the anchor's i-th coordinate lies in [0, d[i])
  Coord m = p[i] >= 0 ? p[i] / d[i] : -((-p[i] + d[i] - 1) / d[i]);
  Point anchor(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) anchor[j] = p[j] - m * d[j];
  return {std::move(d), std::move(anchor)};
}

std::map<LineKey, std::vector<int>> group_maximal_lines(std::span<const Point> points) {
  std::map<LineKey, std::set<int>> groups;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      auto key = line_key(points[i], points[j]);
      auto& g = groups[key];
      g.insert(static_cast<int>(i));
      g.insert(static_cast<int>(j));
    }
  std::map<LineKey, std::vector<int>> out;
  for (auto& [key, members] : groups)
    out.emplace(key, std::vector<int>(members.begin(), members.end()));
  return out;
}

RatPoint intersect(const PlanarLine& a, const PlanarLine& b) {
  if (a.slope == b.slope) throw domain_error("intersect: parallel lines");
  Rational x = (a.offset - b.offset) / (a.slope - b.slope);
  return {x, a.y_at(x)};
}

PlanarLineKey planar_line_key(const PlanarPoint& p, const PlanarPoint& q) {
  if (p.x == q.x) {
    if (p.y == q.y) throw domain_error("planar_line_key: identical points");
    return {true, Rational(p.x), Rational(0)};
  }
  Rational slope = make_rational(q.y - p.y, q.x - p.x);
  Rational intercept = Rational(p.y) - slope * Rational(p.x);
  return {false, slope, intercept};
}

std::map<PlanarLineKey, std::vector<int>> group_planar_lines(std::span<const PlanarPoint> points) {
  std::map<PlanarLineKey, std::set<int>> groups;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      auto key = planar_line_key(points[i], points[j]);
      auto& g = groups[key];
      g.insert(static_cast<int>(i));
      g.insert(static_cast<int>(j));
    }
  std::map<PlanarLineKey, std::vector<int>> out;
  for (auto& [key, members] : groups)
    out.emplace(key, std::vector<int>(members.begin(), members.end()));
  return out;
}

}  // namespace hdw
