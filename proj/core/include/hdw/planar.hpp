#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hdw/geometry.hpp"
#include "hdw/param_plan.hpp"
#include "hdw/randcon.hpp"
#include "hdw/solver.hpp"

namespace hdw {

/// Image of a Z^k point set under an integer linear map to the plane,
/// together with the coefficients needed to re-verify it independently.
struct PlanarPointSet {
  std::vector<PlanarPoint> points;  // image, in source order
  std::vector<Coord> coeff_x;       // x = sum coeff_x[i] * p[i]
  std::vector<Coord> coeff_y;
  std::uint64_t source_hash = 0;
  int attempts = 0;                     // accepted on this projection attempt
  bool triple_check_exhaustive = true;  // false above the exhaustive-size cap
};

/// Projects S to the plane by x |-> (a.x, b.x) with random integer
/// coefficients, accepting only maps whose image (a) has pairwise distinct
/// points and x-coordinates and (b) has exactly the collinear triples of S
/// (exhaustive for |S| <= 60, sampled and flagged above). Retries with fresh
/// coefficients; throws resource_limit_error after 64 rejected attempts.
PlanarPointSet project_to_plane(const std::vector<Point>& S, std::uint64_t seed);

/// Dual family under (a,b) |-> { y = a*x - b }.
struct LineFamily {
  std::vector<PlanarLine> lines;  // same order as the source points
};

/// Throws domain_error when two source points share an x-coordinate (their
/// duals would be parallel and the concurrency equivalence breaks).
LineFamily dualize(const PlanarPointSet& image);

enum class Verdict { Proved, Refuted, Unknown };

struct PqResult {
  Verdict verdict = Verdict::Unknown;
  bool exhausted = false;
  int max_no_q_concurrent = 0;  // M; exact only when exhausted
  std::vector<int> witness;     // refuted: p line indices with no q concurrent
  std::uint64_t nodes = 0;
};

/// (p,q) property of F: among any p lines, some q share a point. Decided by
/// searching for the largest sub-family with at most q-1 lines through any
/// point; proved iff that search exhausts below p.
PqResult verify_pq_property(const LineFamily& F, int p, int q, std::uint64_t node_budget);

struct PiercingResult {
  int max_concurrency = 1;  // most lines through a single point
  Rational lower;           // |F| / max_concurrency
  std::optional<int> exact;
  int greedy_upper = 0;
  std::vector<RatPoint> exact_points;  // optimal piercing set when exact
  std::vector<RatPoint> greedy_points;
  std::uint64_t nodes = 0;
};

/// Candidate points are the pairwise intersections (plus one private point
/// for each line meeting no other); exact minimum by branch-and-bound when
/// the budget allows.
PiercingResult piercing_number(const LineFamily& F, std::uint64_t node_budget);

/// Intersection-point concurrency histogram: histogram[c] = number of
/// distinct points lying on exactly c >= 2 lines of the family.
std::vector<std::pair<int, long long>> concurrency_histogram(const LineFamily& F);

struct PiercingCertificate {
  int schema_version = 1;
  // provenance
  std::uint64_t seed = 0;
  ParameterPlan plan;
  long long n = 0;
  double alpha = 0;
  int survivors = 0;
  // stages
  PlanarPointSet image;
  LineFamily family;
  // realized p: one more than the exact max q-concurrency-free sub-family
  std::optional<int> p;
  PqResult pq;
  PiercingResult piercing;
  Rational piercing_lower_u;  // |F| / (u-1), valid since no u lines concur
  // realized log_p(|F|/(u-1)) next to the plan target; meaningful only under
  // the asymptotic hypotheses, hence the banner
  std::optional<double> realized_T;
  bool asymptotics_in_range = false;  // ln n >= plan.log_n_min
};

/// Full pipeline on a finished run: project survivors, dualize, certify the
/// (p,q) property at the realized p, compute piercing bounds.
PiercingCertificate emit_certificate(const RandomSubsetRun& run, const ParameterPlan& plan,
                                     std::uint64_t node_budget);

}  // namespace hdw
