#include "hdw/grid.hpp"

#include <algorithm>
#include <cmath>

namespace hdw {

std::vector<Point> grid_points(const GridSpec& grid) {
  std::vector<Point> pts;
  BigInt total = grid.point_count();
  if (total > 10'000'000) throw resource_limit_error("grid_points: grid too large");
  pts.reserve(static_cast<std::size_t>(total));
  Point p(grid.k, 1);
  while (true) {
    pts.push_back(p);
    int j = grid.k - 1;
    while (j >= 0 && p[j] == grid.n) p[j--] = 1;
    if (j < 0) break;
    ++p[j];
  }
  // lexicographic order: the odometer above increments the last coordinate
  // fastest, which is exactly lexicographic order on (p_1,...,p_k).
  return pts;
}

std::vector<Point> grid_points_on_line(const GridSpec& grid, const Point& base, const Point& dir) {
  Point d = primitive_direction(dir);
  long long lo = std::numeric_limits<long long>::min();
  long long hi = std::numeric_limits<long long>::max();
  for (int j = 0; j < grid.k; ++j) {
    if (d[j] == 0) {
      if (base[j] < 1 || base[j] > grid.n) return {};
      continue;
    }
    // 1 <= base_j + m*d_j <= n
    double a = (1.0 - base[j]) / static_cast<double>(d[j]);
    double b = (static_cast<double>(grid.n) - base[j]) / static_cast<double>(d[j]);
    if (d[j] < 0) std::swap(a, b);
    lo = std::max(lo, static_cast<long long>(std::ceil(a - 1e-9)));
    hi = std::min(hi, static_cast<long long>(std::floor(b + 1e-9)));
  }
  std::vector<Point> pts;
  for (long long m = lo; m <= hi; ++m) {
    Point p(grid.k);
    bool ok = true;
    for (int j = 0; j < grid.k; ++j) {
      p[j] = base[j] + m * d[j];
      if (p[j] < 1 || p[j] > grid.n) ok = false;
    }
    if (ok) pts.push_back(std::move(p));
  }
  return pts;
}

namespace {

/// All primitive, lexicographically positive direction vectors with
/// coordinates in [-bound, bound].
std::vector<Point> canonical_directions(int k, long long bound) {
  std::vector<Point> dirs;
  if (bound < 1) return dirs;
  Point d(k, -bound);
  while (true) {
    bool nonzero = false, lexpos = false;
    for (Coord c : d) {
      if (c != 0) {
        nonzero = true;
        lexpos = c > 0;
        break;
      }
    }
    if (nonzero && lexpos) {
      Coord g = 0;
      for (Coord c : d) g = std::gcd(g, c < 0 ? -c : c);
      if (g == 1) dirs.push_back(d);
    }
    int j = k - 1;
    while (j >= 0 && d[j] == bound) d[j--] = -bound;
    if (j < 0) break;
    ++d[j];
  }
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

}  // namespace

std::vector<GridLine> enumerate_lines(const GridSpec& grid, long long min_count,
                                      const EnumLimits& limits) {
  if (min_count < 2) throw domain_error("enumerate_lines: min_count >= 2 required");
  if (grid.n >= std::max<long long>(grid.k, min_count)) {
    double est = hyperedge_count_bound(grid.n, grid.k, static_cast<int>(std::min<long long>(min_count, 1000)));
    if (est > limits.max_estimated_lines)
      throw resource_limit_error("enumerate_lines: estimated line count exceeds cap");
  }
  std::vector<GridLine> lines;
  if (grid.n < 2) return lines;
  long long bound = (grid.n - 1) / (min_count - 1);
  auto dirs = canonical_directions(grid.k, bound);
  auto pts = grid_points(grid);
  Point prev(grid.k);
  for (const auto& d : dirs) {
    for (const auto& p : pts) {
      for (int j = 0; j < grid.k; ++j) prev[j] = p[j] - d[j];
      if (grid.contains(prev)) continue;  // not the first point on its line
      long long count = 1;
      Point q = p;
      while (true) {
        for (int j = 0; j < grid.k; ++j) q[j] += d[j];
        if (!grid.contains(q)) break;
        ++count;
      }
      if (count >= min_count) lines.push_back({p, d, count});
    }
  }
  std::sort(lines.begin(), lines.end(), [](const GridLine& a, const GridLine& b) {
    return std::tie(a.direction, a.anchor) < std::tie(b.direction, b.anchor);
  });
  return lines;
}

BigInt count_collinear_tuples(const GridSpec& grid, int r, const EnumLimits& limits) {
  if (r < 2) throw domain_error("count_collinear_tuples: r >= 2 required");
  BigInt total = 0;
  for (const auto& line : enumerate_lines(grid, r, limits))
    total += binomial(BigInt(line.count), static_cast<unsigned>(r));
  return total;
}

double hyperedge_count_bound(long long n, int k, int r) {
  if (n < std::max<long long>(k, r))
    throw domain_error("hyperedge_count_bound: requires n >= max(k, r)");
  double logn = std::log(static_cast<double>(n));
  double log_rfact = std::lgamma(static_cast<double>(r) + 1.0);
  double log_coeff = std::log(static_cast<double>(k)) + (r + k) * std::log(2.0) - log_rfact;
  double log_value;
  if (r <= k) {
    log_value = log_coeff + 2.0 * k * logn;
  } else if (r == k + 1) {
    log_value = log_coeff + 2.0 * k * logn + std::log(logn);
  } else {
    log_value = log_coeff + std::log(2.0) + (r + k - 1.0) * logn;
  }
  return std::exp(log_value);
}

CollinearStats collinear_stats(const GridSpec& grid, int r, const EnumLimits& limits) {
  if (r < 2) throw domain_error("collinear_stats: r >= 2 required");
  CollinearStats stats;
  stats.r = r;
  stats.edge_count = 0;
  for (int j = 2; j <= r; ++j) stats.codegree_max[j] = 0;
  for (const auto& line : enumerate_lines(grid, 2, limits)) {
    stats.max_line_count = std::max(stats.max_line_count, line.count);
    stats.edge_count += binomial(BigInt(line.count), static_cast<unsigned>(r));
    if (line.count < r) continue;
    for (int j = 2; j <= r; ++j) {
      BigInt c = binomial(BigInt(line.count - j), static_cast<unsigned>(r - j));
      if (c > stats.codegree_max[j]) stats.codegree_max[j] = c;
    }
  }
  stats.avg_degree = Rational(BigInt(r) * stats.edge_count, grid.point_count());
  return stats;
}

}  // namespace hdw
