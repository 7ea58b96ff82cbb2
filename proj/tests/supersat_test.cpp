#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "hdw/supersat.hpp"

using namespace hdw;

TEST_CASE("prime sieve") {
  auto primes = primes_up_to(30);
  CHECK(primes == std::vector<long long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1).empty());
}

TEST_CASE("config validation and constants") {
  GridSpec g(20, 2);
  CHECK_THROWS_AS(SupersatConfig::make(GridSpec(20, 1), 3, 0.0), domain_error);
  CHECK_THROWS_AS(SupersatConfig::make(g, 3, 0.95), domain_error);
  auto c = SupersatConfig::make(g, 3, 0.0);
  CHECK(c.c0 == BigInt(3) * 1000 * 81);  // r * 1000 * 9^k
  CHECK(c.t.exact);
  CHECK(!c.feasible);  // 243000 > 20^0.99
  auto c3 = SupersatConfig::make(GridSpec(20, 3), 3, 0.0);
  CHECK(c3.c0 == BigInt(3) * 1000 * 729);
}

TEST_CASE("direction set sizes from the sieve") {
  GridSpec g(20, 2);
  auto c = SupersatConfig::make(g, 3, 0.0, Rational(4));
  auto V = build_direction_set(c);
  CHECK(V.size() == 12);  // primes in [5,10] are {5,7}; 5 + 7 vectors
  for (const auto& v : V) {
    CHECK((v[0] == 5 || v[0] == 7));
    CHECK(v[1] >= 0);
    CHECK(v[1] < v[0]);
  }
  auto c8 = SupersatConfig::make(GridSpec(8, 2), 3, 0.0, Rational(4));
  CHECK(build_direction_set(c8).size() == 5);  // primes in [2,4] are {2,3}
}

TEST_CASE("anchor set is the full box") {
  GridSpec g(20, 2);
  auto U = build_anchor_set(SupersatConfig::make(g, 3, 0.0, Rational(4)));
  CHECK(U.size() == 410);  // floor(40/4) * 41
  auto U2 = build_anchor_set(SupersatConfig::make(g, 3, 0.0, Rational(40)));
  CHECK(U2.size() == 41);  // floor(40/40) = 1
  auto U3 = build_anchor_set(SupersatConfig::make(g, 3, 0.0, Rational(41)));
  CHECK(U3.empty());  // t > 2n
}

TEST_CASE("axis-parallel prime collision is real: two primes merge one line class") {
  // primes 2 and 3 both land in [2,4]; directions (2,0) and (3,0) span the
  // same lines, so each point sees |V| - 1 distinct family lines.
  GridSpec g(8, 2);
  auto c = SupersatConfig::make(g, 3, 0.0, Rational(4));
  auto fam = build_line_family(c);
  CHECK(fam.size_V == 5);
  auto cov = verify_point_coverage(fam, g);
  CHECK(cov.min_count == 4);
  CHECK(!cov.covered);
}

TEST_CASE("single-prime configs: distinctness, coverage, incidences") {
  struct Cfg {
    long long n;
    int k;
    long long t;
  };
  for (Cfg cfg : {Cfg{11, 2, 5}, Cfg{16, 2, 7}, Cfg{11, 3, 5}}) {
    CAPTURE(cfg.n);
    CAPTURE(cfg.k);
    GridSpec g(cfg.n, cfg.k);
    auto c = SupersatConfig::make(g, 3, 0.0, Rational(cfg.t));
    auto V = build_direction_set(c);
    auto U = build_anchor_set(c);
    auto fam = build_line_family(c);

    // exactly one prime in [n/t, 2n/t]
    std::set<long long> firsts;
    for (const auto& v : V) firsts.insert(v[0]);
    REQUIRE(firsts.size() == 1);

    // lines from distinct v never coincide: per-direction line sets disjoint
    std::set<LineKey> seen;
    for (const auto& v : V) {
      std::set<LineKey> mine;
      for (const auto& u : U) {
        Point shifted = u;
        for (int j = 0; j < cfg.k; ++j) shifted[j] += v[j];
        mine.insert(line_key(u, shifted));
      }
      for (const auto& key : mine) {
        CHECK(!seen.count(key));
        seen.insert(key);
      }
    }
    CHECK(BigInt(static_cast<long long>(seen.size())) == fam.size_L);

    // every grid point on >= |V| family lines
    auto cov = verify_point_coverage(fam, g);
    CHECK(cov.covered);
    CHECK(BigInt(cov.min_count) >= fam.size_V);

    // incidences >= |S| * |V| for seeded subsets
    auto pts = grid_points(g);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Point> S;
      for (const auto& p : pts)
        if (rng() % 2 == 0) S.push_back(p);
      CHECK(incidence_count(S, fam, g) >= BigInt(static_cast<long long>(S.size())) * fam.size_V);
    }
  }
}

TEST_CASE("r-tuple count on the family is a lower part of the global count") {
  GridSpec g(8, 2);
  auto c = SupersatConfig::make(g, 3, 0.0, Rational(4));
  auto fam = build_line_family(c);
  auto all = grid_points(g);
  CHECK(count_r_tuples_on_family(all, fam, g, 3) <= count_collinear_tuples(g, 3));
  CHECK(count_r_tuples_on_family({}, fam, g, 3) == 0);
  // three collinear points on one family line
  std::vector<Point> S{{1, 1}, {3, 1}, {5, 1}};
  CHECK(count_r_tuples_on_family(S, fam, g, 3) >= 1);
}

TEST_CASE("interval endpoint arithmetic is exact under overrides") {
  GridSpec g(20, 2);
  auto c = SupersatConfig::make(g, 3, 0.0, Rational(4));
  CHECK(c.upper_endpoint() == 10);
  CHECK(c.in_prime_interval(5));
  CHECK(c.in_prime_interval(10));
  CHECK(!c.in_prime_interval(4));
  CHECK(!c.in_prime_interval(11));
  auto c2 = SupersatConfig::make(g, 3, 0.0, Rational(3));
  CHECK(c2.upper_endpoint() == 13);  // floor(40/3)
}

TEST_CASE("closed-form lower bound evaluator") {
  // (n = e^300, k = 3, r = 3, s = 0.5)
  auto b = supersat_lower_bound_log(300.0, 3, 3, 0.5);
  long double expected = (2.0L * 3 - 4 * 0.5L) * 300 -
                         4 * (std::log(3.0L) + std::log(1000.0L) + 3 * std::log(9.0L)) -
                         std::log(300.0L);
  CHECK(b.log_value == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
  CHECK(b.hypotheses_met);  // 300 >= 100k = 300

  // s = 0 dominates s = 0.9; doubling r lowers the bound
  CHECK(supersat_lower_bound_log(300, 3, 3, 0.0).log_value >
        supersat_lower_bound_log(300, 3, 3, 0.9).log_value);
  CHECK(supersat_lower_bound_log(300, 3, 6, 0.5).log_value <
        supersat_lower_bound_log(300, 3, 3, 0.5).log_value);

  CHECK(!supersat_lower_bound_log(299, 3, 3, 0.5).hypotheses_met);
  CHECK_THROWS_AS(supersat_lower_bound_log(300, 2, 3, 0.5), domain_error);
}
