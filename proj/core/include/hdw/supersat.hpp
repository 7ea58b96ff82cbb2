#pragma once

#include <optional>
#include <vector>

#include "hdw/grid.hpp"

namespace hdw {

/// The interval parameter t = c0 * n^s. Exact rational whenever the caller
/// supplies an override (or s = 0); otherwise floating point with a 1e-12
/// relative guard band at interval endpoints.
struct TParam {
  bool exact = false;
  Rational exact_value;
  double value = 0.0;

  static TParam from_rational(const Rational& r) {
    return {true, r, static_cast<double>(r)};
  }
  static TParam from_double(double v) { return {false, Rational(0), v}; }
};

struct SupersatConfig {
  GridSpec grid;
  int r;
  double s;       // density exponent, in [0, 0.9]
  BigInt c0;      // r * 1000 * 9^k
  TParam t;
  bool feasible;  // t <= n^0.99

  /// t defaults to c0 * n^s; an explicit override replaces it (exactly, when
  /// rational).
  static SupersatConfig make(const GridSpec& grid, int r, double s,
                             std::optional<Rational> t_override = {});

  /// Largest integer <= 2n/t (with guard band in the float case).
  long long upper_endpoint() const;
  /// a is inside [n/t, 2n/t]?
  bool in_prime_interval(long long a) const;
  /// 2n/t >= 17, the prime-counting precondition.
  bool prime_bound_applies() const { return upper_endpoint() >= 17; }
};

struct SupersatFamily {
  std::vector<Point> anchors;     // U
  std::vector<Point> directions;  // V
  std::vector<LineKey> lines;     // canonical, deduplicated L(u, v)
  BigInt size_U, size_V, size_L;
  bool prime_bound_applies = false;
};

/// Direction set V: prime first coordinate in [n/t, 2n/t], remaining
/// coordinates in [0, a1). Empty when no prime lies in the interval.
std::vector<Point> build_direction_set(const SupersatConfig& config);

/// Anchor set U: 1 <= a1 <= 2n/t, -n <= a_j <= n for j >= 2.
std::vector<Point> build_anchor_set(const SupersatConfig& config);

SupersatFamily build_line_family(const SupersatConfig& config);

struct CoverageReport {
  std::vector<long long> per_point;  // lexicographic point order
  long long min_count = 0;
  bool covered = false;  // every grid point on >= |V| family lines
};

CoverageReport verify_point_coverage(const SupersatFamily& family, const GridSpec& grid);

/// Number of point-line incidences between S and the family.
BigInt incidence_count(const std::vector<Point>& S, const SupersatFamily& family,
                       const GridSpec& grid);

/// Sum over family lines of C(|S ∩ line|, r).
BigInt count_r_tuples_on_family(const std::vector<Point>& S, const SupersatFamily& family,
                                const GridSpec& grid, int r);

struct SupersatBound {
  double log_value;      // natural log of the stated lower bound
  bool hypotheses_met;   // n >= max(e^{100k}, r^{100})
};

/// log of n^{2k-(k+1)s} / (r^{k+1} (1000*9^k)^{k+1} log n), n given as ln n.
SupersatBound supersat_lower_bound_log(double log_n, int k, int r, double s);

/// Deterministic sieve of Eratosthenes; primes <= limit.
std::vector<long long> primes_up_to(long long limit);

}  // namespace hdw
