#include <doctest.h>

#include <cmath>

#include "hdw/grid.hpp"
#include "oracles.hpp"

using namespace hdw;

TEST_CASE("grid_points is lexicographic and complete") {
  GridSpec g(3, 2);
  auto pts = grid_points(g);
  REQUIRE(pts.size() == 9);
  CHECK(pts.front() == Point{1, 1});
  CHECK(pts[1] == Point{1, 2});
  CHECK(pts.back() == Point{3, 3});
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1] < pts[i]);
}

TEST_CASE("GridSpec validation and counting") {
  CHECK_THROWS_AS(GridSpec(0, 2), domain_error);
  CHECK_THROWS_AS(GridSpec(3, 0), domain_error);
  CHECK(GridSpec(5, 3).point_count() == 125);
  CHECK(GridSpec(2, 10).point_count() == 1024);
}

TEST_CASE("enumerate_lines on tiny grids") {
  // [2]^2: 2 rows + 2 columns + 2 diagonals
  CHECK(enumerate_lines(GridSpec(2, 2), 2).size() == 6);
  // [3]^2 full lines: 3 rows + 3 columns + 2 diagonals
  auto full = enumerate_lines(GridSpec(3, 2), 3);
  CHECK(full.size() == 8);
  for (const auto& line : full) {
    CHECK(line.count == 3);
    // canonical: anchor is on the grid, anchor - direction is not
    GridSpec g(3, 2);
    CHECK(g.contains(line.anchor));
    Point prev = line.anchor;
    for (int j = 0; j < 2; ++j) prev[j] -= line.direction[j];
    CHECK(!g.contains(prev));
  }
}

TEST_CASE("collinear tuple counts match brute force on small grids") {
  for (int k = 2; k <= 3; ++k)
    for (long long n = 2; n <= 4; ++n)
      for (int r = 3; r <= 4; ++r) {
        GridSpec g(n, k);
        auto pts = grid_points(g);
        long long expected = testing::brute_force_collinear_tuples(pts, r);
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(r);
        CHECK(count_collinear_tuples(g, r) == expected);
      }
}

TEST_CASE("known anchor values") {
  CHECK(count_collinear_tuples(GridSpec(3, 2), 3) == 8);
  CHECK(count_collinear_tuples(GridSpec(4, 2), 3) == 44);
}

TEST_CASE("hyperedge count bound: piecewise formula and dominance") {
  // r = k+1 case at the anchor point
  double b = hyperedge_count_bound(3, 2, 3);
  double expected = 2.0 * std::pow(2.0, 5) / 6.0 * std::pow(3.0, 4) * std::log(3.0);
  CHECK(b == doctest::Approx(expected).epsilon(1e-12));
  CHECK(static_cast<double>(count_collinear_tuples(GridSpec(3, 2), 3)) <= b);

  // r <= k case has no log factor
  double b2 = hyperedge_count_bound(4, 3, 3);
  double expected2 = 3.0 * std::pow(2.0, 6) / 6.0 * std::pow(4.0, 6);
  CHECK(b2 == doctest::Approx(expected2).epsilon(1e-12));

  // r > k+1 case
  double b3 = hyperedge_count_bound(5, 2, 4);
  double expected3 = 2.0 * std::pow(2.0, 7) / 24.0 * std::pow(5.0, 5);
  CHECK(b3 == doctest::Approx(expected3).epsilon(1e-12));

  CHECK_THROWS_AS(hyperedge_count_bound(2, 2, 3), domain_error);
}

TEST_CASE("collinear_stats on [3]^2") {
  auto stats = collinear_stats(GridSpec(3, 2), 3);
  CHECK(stats.edge_count == 8);
  CHECK(stats.avg_degree == Rational(8, 3));
  CHECK(stats.codegree_max.at(2) == 1);
  CHECK(stats.codegree_max.at(3) == 1);
  CHECK(stats.max_line_count == 3);
}

TEST_CASE("grid_points_on_line walks the full maximal line") {
  GridSpec g(4, 2);
  auto pts = grid_points_on_line(g, Point{2, 2}, Point{2, 2});  // non-primitive input
  REQUIRE(pts.size() == 4);
  CHECK(pts.front() == Point{1, 1});
  CHECK(pts.back() == Point{4, 4});
}

TEST_CASE("line grouping matches the collinearity predicate") {
  std::vector<Point> pts{{1, 1}, {2, 2}, {3, 3}, {1, 2}, {3, 1}};
  auto groups = group_maximal_lines(pts);
  int count3 = 0;
  for (const auto& [key, members] : groups)
    if (members.size() == 3) {
      ++count3;
      std::vector<Point> tuple{pts[members[0]], pts[members[1]], pts[members[2]]};
      CHECK(is_collinear(tuple));
    }
  CHECK(count3 == 1);
}
