#include "hdw/supersat.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace hdw {

namespace {
constexpr double kGuard = 1e-12;
}

SupersatConfig SupersatConfig::make(const GridSpec& grid, int r, double s,
                                    std::optional<Rational> t_override) {
  if (grid.k < 2) throw domain_error("supersat: k >= 2 required");
  if (r < 2) throw domain_error("supersat: r >= 2 required");
  if (s < 0.0 || s > 0.9) throw domain_error("supersat: s in [0, 0.9] required");
  SupersatConfig c{grid, r, s, BigInt(r) * 1000 * ipow(BigInt(9), static_cast<unsigned>(grid.k)),
                   TParam{}, false};
  if (t_override) {
    if (*t_override <= 0) throw domain_error("supersat: t must be positive");
    c.t = TParam::from_rational(*t_override);
  } else if (s == 0.0) {
    c.t = TParam::from_rational(Rational(c.c0));
  } else {
    c.t = TParam::from_double(static_cast<double>(c.c0) *
                              std::pow(static_cast<double>(grid.n), s));
  }
  c.feasible = c.t.value <= std::pow(static_cast<double>(grid.n), 0.99) * (1 + kGuard);
  return c;
}

long long SupersatConfig::upper_endpoint() const {
  if (t.exact) {
    Rational bound = Rational(2 * grid.n) / t.exact_value;
    BigInt fl = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
    return static_cast<long long>(fl);
  }
  double b = 2.0 * static_cast<double>(grid.n) / t.value;
  return static_cast<long long>(std::floor(b * (1 + kGuard)));
}

bool SupersatConfig::in_prime_interval(long long a) const {
  if (t.exact) {
    Rational lo = Rational(grid.n) / t.exact_value;
    Rational hi = Rational(2 * grid.n) / t.exact_value;
    return Rational(a) >= lo && Rational(a) <= hi;
  }
  double lo = static_cast<double>(grid.n) / t.value;
  double hi = 2.0 * lo;
  return a >= lo * (1 - kGuard) && a <= hi * (1 + kGuard);
}

std::vector<long long> primes_up_to(long long limit) {
  std::vector<long long> primes;
  if (limit < 2) return primes;
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  for (long long i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (long long j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = 1;
  }
  return primes;
}

std::vector<Point> build_direction_set(const SupersatConfig& config) {
  const int k = config.grid.k;
  std::vector<Point> dirs;
  long long hi = config.upper_endpoint();
  if (hi > 10'000) throw resource_limit_error("build_direction_set: 2n/t too large");
  for (long long p : primes_up_to(hi)) {
    if (!config.in_prime_interval(p)) continue;
    // all vectors (p, a_2, ..., a_k) with 0 <= a_j < p
    Point v(k, 0);
    v[0] = p;
    double est = std::pow(static_cast<double>(p), k - 1);
    if (est > 5e6) throw resource_limit_error("build_direction_set: direction set too large");
    while (true) {
      dirs.push_back(v);
      int j = k - 1;
      while (j >= 1 && v[j] == p - 1) v[j--] = 0;
      if (j < 1) break;
      ++v[j];
    }
  }
  return dirs;
}

std::vector<Point> build_anchor_set(const SupersatConfig& config) {
  const int k = config.grid.k;
  const long long n = config.grid.n;
  long long a1_max = config.upper_endpoint();
  std::vector<Point> anchors;
  if (a1_max < 1) return anchors;
  double est = static_cast<double>(a1_max) * std::pow(2.0 * n + 1, k - 1);
  if (est > 2e7) throw resource_limit_error("build_anchor_set: anchor set too large");
  for (long long a1 = 1; a1 <= a1_max; ++a1) {
    Point a(k, -n);
    a[0] = a1;
    while (true) {
      anchors.push_back(a);
      int j = k - 1;
      while (j >= 1 && a[j] == n) a[j--] = -n;
      if (j < 1) break;
      ++a[j];
    }
  }
  return anchors;
}

SupersatFamily build_line_family(const SupersatConfig& config) {
  SupersatFamily fam;
  fam.directions = build_direction_set(config);
  fam.anchors = build_anchor_set(config);
  fam.size_U = fam.anchors.size();
  fam.size_V = fam.directions.size();
  fam.prime_bound_applies = config.prime_bound_applies();
  std::set<LineKey> dedup;
  Point shifted(config.grid.k);
  for (const auto& u : fam.anchors)
    for (const auto& v : fam.directions) {
      for (int j = 0; j < config.grid.k; ++j) shifted[j] = u[j] + v[j];
      dedup.insert(line_key(u, shifted));
    }
  fam.lines.assign(dedup.begin(), dedup.end());
  fam.size_L = fam.lines.size();
  return fam;
}

namespace {

std::size_t lex_rank(const Point& p, const GridSpec& grid) {
  std::size_t rank = 0;
  for (int j = 0; j < grid.k; ++j)
    rank = rank * static_cast<std::size_t>(grid.n) + static_cast<std::size_t>(p[j] - 1);
  return rank;
}

}  // namespace

CoverageReport verify_point_coverage(const SupersatFamily& family, const GridSpec& grid) {
  BigInt total = grid.point_count();
  if (total > 10'000'000) throw resource_limit_error("verify_point_coverage: grid too large");
  CoverageReport rep;
  rep.per_point.assign(static_cast<std::size_t>(total), 0);
  for (const auto& line : family.lines)
    for (const auto& p : grid_points_on_line(grid, line.anchor, line.dir))
      ++rep.per_point[lex_rank(p, grid)];
  rep.min_count = rep.per_point.empty()
                      ? 0
                      : *std::min_element(rep.per_point.begin(), rep.per_point.end());
  rep.covered = rep.per_point.empty() || BigInt(rep.min_count) >= family.size_V;
  return rep;
}

BigInt incidence_count(const std::vector<Point>& S, const SupersatFamily& family,
                       const GridSpec& grid) {
  std::set<Point> members(S.begin(), S.end());
  BigInt total = 0;
  for (const auto& line : family.lines)
    for (const auto& p : grid_points_on_line(grid, line.anchor, line.dir))
      if (members.count(p)) ++total;
  return total;
}

BigInt count_r_tuples_on_family(const std::vector<Point>& S, const SupersatFamily& family,
                                const GridSpec& grid, int r) {
  if (r < 2) throw domain_error("count_r_tuples_on_family: r >= 2 required");
  std::set<Point> members(S.begin(), S.end());
  BigInt total = 0;
  for (const auto& line : family.lines) {
    long long hits = 0;
    for (const auto& p : grid_points_on_line(grid, line.anchor, line.dir))
      if (members.count(p)) ++hits;
    total += binomial(BigInt(hits), static_cast<unsigned>(r));
  }
  return total;
}

SupersatBound supersat_lower_bound_log(double log_n, int k, int r, double s) {
  if (s < 0.0 || s > 0.9) throw domain_error("supersat_lower_bound_log: s in [0, 0.9]");
  if (k < 3 || r < 3) throw domain_error("supersat_lower_bound_log: k, r >= 3 required");
  double log_c = std::log(static_cast<double>(r)) + std::log(1000.0) +
                 k * std::log(9.0);  // log(r * 1000 * 9^k)
  SupersatBound b;
  b.log_value = (2.0 * k - (k + 1) * s) * log_n - (k + 1) * log_c - std::log(log_n);
  b.hypotheses_met = log_n >= std::max(100.0 * k, 100.0 * std::log(static_cast<double>(r)));
  return b;
}

}  // namespace hdw
