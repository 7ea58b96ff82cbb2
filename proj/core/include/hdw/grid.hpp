#pragma once

#include <map>
#include <vector>

#include "hdw/geometry.hpp"
#include "hdw/numeric.hpp"

namespace hdw {

/// The grid [n]^k = {1,...,n}^k.
struct GridSpec {
  long long n = 1;
  int k = 1;

  GridSpec(long long n_, int k_) : n(n_), k(k_) {
    if (n < 1 || k < 1) throw domain_error("GridSpec: n >= 1 and k >= 1 required");
  }
  BigInt point_count() const { return ipow(BigInt(n), static_cast<unsigned>(k)); }
  bool contains(const Point& p) const {
    for (Coord c : p)
      if (c < 1 || c > n) return false;
    return true;
  }
};

/// A maximal collinear subset of the grid in canonical form: primitive
/// direction with positive first nonzero coordinate, anchor = lexicographically
/// smallest grid point on the line, count = number of grid points it holds.
struct GridLine {
  Point anchor;
  Point direction;
  long long count = 0;
  auto operator<=>(const GridLine&) const = default;
};

struct EnumLimits {
  /// Enumeration refuses when the line-count estimate (the hyperedge-count
  /// bound at r = min_count) exceeds this. Sized so grids up to 10^6 points
  /// pass at min_count >= 2.
  double max_estimated_lines = 1e14;
};

/// Degree / co-degree statistics of the collinearity hypergraph H(n,k,r).
struct CollinearStats {
  int r = 0;
  BigInt edge_count;
  Rational avg_degree;
  std::map<int, BigInt> codegree_max;  // j -> Delta_j, 2 <= j <= r
  long long max_line_count = 0;
};

/// All maximal collinear subsets of [n]^k with at least min_count points,
/// canonical and sorted by (direction, anchor).
std::vector<GridLine> enumerate_lines(const GridSpec& grid, long long min_count,
                                      const EnumLimits& limits = {});

/// |E(H(n,k,r))| = sum over maximal lines of C(count, r), exact.
BigInt count_collinear_tuples(const GridSpec& grid, int r, const EnumLimits& limits = {});

/// The three-case piecewise upper bound on |E(H(n,k,r))| (natural log inside).
double hyperedge_count_bound(long long n, int k, int r);

CollinearStats collinear_stats(const GridSpec& grid, int r, const EnumLimits& limits = {});

/// All points of [n]^k in lexicographic order.
std::vector<Point> grid_points(const GridSpec& grid);

/// Grid points lying on the infinite line through `base` with direction `dir`
/// (dir need not be primitive), in increasing order along the primitive
/// direction.
std::vector<Point> grid_points_on_line(const GridSpec& grid, const Point& base, const Point& dir);

}  // namespace hdw
