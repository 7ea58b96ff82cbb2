#include <doctest.h>

#include <cmath>

#include "hdw/coloring.hpp"

using namespace hdw;

namespace {

std::vector<PlanarPoint> planar_grid(long long n) {
  std::vector<PlanarPoint> out;
  for (const auto& p : grid_points(GridSpec(n, 2))) out.push_back({p[0], p[1]});
  return out;
}

}  // namespace

TEST_CASE("line-section hypergraph construction") {
  auto P = planar_grid(3);
  auto H = build_Hq(P, 3);
  CHECK(H.edges.size() == 8);  // 3 rows + 3 columns + 2 diagonals
  for (const auto& e : H.edges) CHECK(e.size() == 3);
  CHECK(build_Hq(P, 4).edges.empty());

  // general position: no section reaches size 3
  std::vector<PlanarPoint> generic{{0, 0}, {1, 0}, {2, 1}, {3, 3}};
  CHECK(build_Hq(generic, 3).edges.empty());

  // one long section is a single maximal edge
  std::vector<PlanarPoint> five{{0, 0}, {1, 2}, {2, 4}, {3, 6}, {4, 8}};
  auto H5 = build_Hq(five, 3);
  REQUIRE(H5.edges.size() == 1);
  CHECK(H5.edges[0] == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("chromatic number of section hypergraphs") {
  SUBCASE("edge-free is 1-chromatic") {
    std::vector<PlanarPoint> generic{{0, 0}, {1, 0}, {2, 1}, {3, 3}};
    auto chi = hq_chromatic_number(build_Hq(generic, 3), 1'000'000);
    REQUIRE(chi.exact.has_value());
    CHECK(*chi.exact == 1);
  }
  SUBCASE("a single 3-point section needs 2 colors") {
    std::vector<PlanarPoint> line{{0, 0}, {1, 1}, {2, 2}};
    auto chi = hq_chromatic_number(build_Hq(line, 3), 1'000'000);
    REQUIRE(chi.exact.has_value());
    CHECK(*chi.exact == 2);
    REQUIRE(chi.exact_coloring.has_value());
    CHECK(coloring_is_proper(*chi.exact_coloring, build_Hq(line, 3).edges, 3));
  }
  SUBCASE("the full 3x3 grid is exactly 2-chromatic") {
    auto H = build_Hq(planar_grid(3), 3);
    auto chi = hq_chromatic_number(H, 10'000'000);
    REQUIRE(chi.exact.has_value());
    CHECK(*chi.exact == 2);
    CHECK(chi.greedy_upper >= 2);
    REQUIRE(chi.exact_coloring.has_value());
    CHECK(coloring_is_proper(*chi.exact_coloring, H.edges, 3));
  }
}

TEST_CASE("properness predicate") {
  std::vector<std::vector<int>> edges{{0, 1, 2}};
  CHECK(coloring_is_proper({0, 0, 1}, edges, 3));
  CHECK(!coloring_is_proper({1, 1, 1}, edges, 3));
  // a 4-section is monochromatic-violating already at 3 same-colored points
  std::vector<std::vector<int>> edge4{{0, 1, 2, 3}};
  CHECK(!coloring_is_proper({0, 1, 0, 0}, edge4, 3));
  CHECK(coloring_is_proper({0, 1, 0, 1}, edge4, 3));
}

TEST_CASE("chromatic lower-bound pipeline invariants") {
  auto rep = gq_lower_pipeline(3, Rational(2, 5), 40, 7, 50'000'000);
  CHECK(rep.plan.coloring);
  CHECK(rep.plan.k == 3);
  CHECK(rep.n >= 2);
  CHECK(rep.alpha > 0);
  CHECK(rep.alpha <= 1);
  CHECK(rep.m > 0);
  CHECK(rep.m <= rep.sample_size);
  CHECK(rep.M >= 1);
  CHECK(rep.M <= rep.m);
  CHECK(rep.chi_pigeonhole == (rep.m + rep.M - 1) / rep.M);
  CHECK(rep.ideal_log_bound ==
        doctest::Approx(static_cast<double>(rep.plan.gq_exponent) *
                        std::log(static_cast<double>(rep.m))));
  if (rep.chi.exact) {
    CHECK(*rep.chi.exact >= rep.chi_pigeonhole);
    REQUIRE(rep.chi.exact_coloring.has_value());
    CHECK(coloring_is_proper(*rep.chi.exact_coloring, rep.edges, 3));
  }
  CHECK(coloring_is_proper(rep.chi.greedy_coloring, rep.edges, 3));
  CHECK(rep.chi.greedy_upper >= rep.chi_pigeonhole);

  // deterministic
  auto rep2 = gq_lower_pipeline(3, Rational(2, 5), 40, 7, 50'000'000);
  CHECK(rep2.m == rep.m);
  CHECK(rep2.M == rep.M);
  CHECK(rep2.edges == rep.edges);
}

TEST_CASE("greedy upper experiment") {
  auto stats = greedy_upper_experiment(3, 12, 5, 3);
  CHECK(stats.q == 3);
  CHECK(stats.m == 12);
  REQUIRE(stats.trials.size() == 5);
  int max_seen = 0;
  double sum = 0;
  for (const auto& t : stats.trials) {
    CHECK(t.chi_greedy >= 1);
    max_seen = std::max(max_seen, t.chi_greedy);
    sum += t.chi_greedy;
  }
  CHECK(stats.max_greedy == max_seen);
  CHECK(stats.mean_greedy == doctest::Approx(sum / 5));
  CHECK(stats.ideal == doctest::Approx(std::sqrt(12.0)));
  CHECK(stats.mean_ratio == doctest::Approx(stats.mean_greedy / stats.ideal));
  auto stats2 = greedy_upper_experiment(3, 12, 5, 3);
  CHECK(stats2.mean_greedy == stats.mean_greedy);  // deterministic
}
