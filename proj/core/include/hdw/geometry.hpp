#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "hdw/numeric.hpp"

namespace hdw {

using Coord = long long;
using Point = std::vector<Coord>;  // one point of Z^k

/// Exact collinearity test over Z^k: all difference vectors from the first
/// point must be pairwise parallel (every 2x2 minor vanishes).
/// Throws domain_error on duplicate points.
bool is_collinear(std::span<const Point> points);

/// gcd-reduces `v` and flips its sign so the first nonzero coordinate is
/// positive. Zero vectors are rejected.
Point primitive_direction(Point v);

/// Canonical key of the infinite line through `p` with primitive direction
/// `dir` (first nonzero coordinate of dir positive): the anchor is the unique
/// point p - m*dir whose i-th coordinate lies in [0, dir_i), where i is the
/// first index with dir_i != 0.
struct LineKey {
  Point dir;
  Point anchor;
  auto operator<=>(const LineKey&) const = default;
};

LineKey line_key(const Point& p, const Point& q);

/// Groups a point set into its maximal collinear subsets of size >= 2.
/// Indices within a group and the groups themselves come out in canonical
/// order. Points on no 2-point line appear in no group.
std::map<LineKey, std::vector<int>> group_maximal_lines(std::span<const Point> points);

// ---------------------------------------------------------------------------
// Exact planar primitives (arbitrary-precision coordinates).

struct PlanarPoint {
  BigInt x, y;
  bool operator==(const PlanarPoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const PlanarPoint& o) const { return x != o.x ? x < o.x : y < o.y; }
};

inline bool planar_collinear(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c) {
  return (b.x - a.x) * (c.y - a.y) == (c.x - a.x) * (b.y - a.y);
}

/// Non-vertical line y = slope * x - offset.
struct PlanarLine {
  Rational slope, offset;
  bool operator==(const PlanarLine& o) const { return slope == o.slope && offset == o.offset; }
  bool operator<(const PlanarLine& o) const {
    return slope != o.slope ? slope < o.slope : offset < o.offset;
  }

  Rational y_at(const Rational& x) const { return slope * x - offset; }
};

struct RatPoint {
  Rational x, y;
  bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const RatPoint& o) const { return x != o.x ? x < o.x : y < o.y; }
};

/// Intersection of two non-parallel lines; throws domain_error on equal slopes.
RatPoint intersect(const PlanarLine& a, const PlanarLine& b);

inline bool passes_through(const PlanarLine& l, const RatPoint& p) {
  return l.y_at(p.x) == p.y;
}

/// Groups planar points into maximal collinear subsets of size >= 2,
/// keyed by the exact (slope, intercept) pair (vertical lines keyed by x).
struct PlanarLineKey {
  bool vertical = false;
  Rational a, b;  // vertical: a = x; else y = a*x + b
  bool operator==(const PlanarLineKey& o) const {
    return vertical == o.vertical && a == o.a && b == o.b;
  }
  bool operator<(const PlanarLineKey& o) const {
    if (vertical != o.vertical) return vertical < o.vertical;
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

PlanarLineKey planar_line_key(const PlanarPoint& p, const PlanarPoint& q);

std::map<PlanarLineKey, std::vector<int>> group_planar_lines(std::span<const PlanarPoint> points);

}  // namespace hdw
