#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hdw/grid.hpp"
#include "hdw/solver.hpp"

namespace hdw {

/// One seeded construct-and-delete run over [n]^k.
struct RandomSubsetRun {
  GridSpec grid;
  double alpha = 0;
  std::uint64_t seed = 0;
  int u = 0;
  std::vector<Point> sample;     // the alpha-random subset, lexicographic order
  std::vector<Point> deleted;
  std::vector<Point> survivors;  // sample minus deleted; < u points per line
};

/// PRNG contract (frozen): std::mt19937_64 seeded with `seed`; one 64-bit
/// draw per grid point in lexicographic order; the point is included iff the
/// draw is strictly below round(alpha * 2^64).
std::vector<Point> sample_subset(const GridSpec& grid, double alpha, std::uint64_t seed);

/// Removes points until every line holds at most u-1 of them. Lines are
/// processed by (excess descending, canonical order); within a line the
/// lexicographically largest points go first; rescans until fixpoint.
/// Returns (survivors, deleted).
std::pair<std::vector<Point>, std::vector<Point>> delete_collinear_u_tuples(
    const std::vector<Point>& sample, int u);

bool verify_no_u_collinear(const std::vector<Point>& points, int u);

RandomSubsetRun make_run(const GridSpec& grid, double alpha, int u, std::uint64_t seed);

/// ln of the expected number of independent p-sets surviving in the sample
/// (the sufficient-condition left side); a negative value certifies the
/// o(1) direction at this scale. Inputs in log form.
SignedLog expected_independent_sets_log(double log_n, int k, int q, double log_p,
                                        double log_alpha, double s0, double f);

struct UTupleExpectation {
  double log_expected = 0;   // ln of the u-tuple expectation bound
  double log_threshold = 0;  // ln(alpha n^k)
  double difference = 0;     // negative certifies the condition direction
  bool precondition_ok = false;  // u >= k+1
};

UTupleExpectation expected_u_tuples_log(double log_n, int k, int u, double log_alpha);

/// Exact expected number of collinear u-tuples in an alpha-random subset:
/// sum over maximal grid lines of C(count, u) * alpha^u.
double exact_expected_u_tuples(const GridSpec& grid, int u, double alpha);

struct IndependentSetOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  int best_size = 0;
  std::vector<Point> witness;  // a size-target_p independent subset when found
  std::uint64_t nodes = 0;
};

/// Searches S for a subset of size target_p with at most q-1 points per
/// line. Exhausted + best_size < target_p is a nonexistence certificate.
IndependentSetOutcome find_independent_set(const std::vector<Point>& S, int q, int target_p,
                                           std::uint64_t node_budget);

struct TailCheck {
  long long observed = 0;
  double threshold = 0;  // alpha n^k / 2
  bool holds = false;
  double prob_ge_threshold = 0;  // a-priori P[|sample| >= threshold]
  bool normal_approx = false;    // used above 10^6 points
};

TailCheck sample_size_tail_check(const GridSpec& grid, double alpha, long long observed);

}  // namespace hdw
