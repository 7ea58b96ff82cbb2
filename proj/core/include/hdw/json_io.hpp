#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hdw/coloring.hpp"
#include "hdw/container_bounds.hpp"
#include "hdw/grid.hpp"
#include "hdw/param_plan.hpp"
#include "hdw/planar.hpp"
#include "hdw/randcon.hpp"
#include "hdw/supersat.hpp"

namespace hdw {

using json = nlohmann::ordered_json;

// Every numeric report field is wrapped as {"value": ..., "provenance": tag}
// so downstream consumers can tell exact counts from bound formulas. Tags:
// exact | float | log-space | nested-log. Exact big integers and rationals
// travel as decimal / "p/q" strings.
json tag_exact(long long v);
json tag_exact(const BigInt& v);
json tag_exact(const Rational& v);
json tag_float(double v);
json tag_log(double v);
json tag_nested(const DepthValue& v);

long long untag_int(const json& j);
BigInt untag_big(const json& j);
Rational untag_rational(const json& j);
double untag_double(const json& j);
DepthValue untag_depth(const json& j);

// ---------------------------------------------------------------------------
// Artifact reports (one per CLI subcommand).

struct EnumerateReport {
  long long n = 1;
  int k = 1;
  int r = 3;
  CollinearStats stats;
  double bound = 0;  // hyperedge count bound (value; +inf when out of range)
};

struct SupersatReport {
  long long n = 1;
  int k = 2;
  int r = 3;
  double s = 0;
  BigInt c0;
  bool t_exact = false;
  Rational t_exact_value;
  double t_value = 0;
  bool feasible = false;
  BigInt size_U, size_V, size_L;
  bool prime_bound_applies = false;
  long long coverage_min = 0;
  bool covered = false;
  double bound_log_value = 0;
  bool bound_hypotheses_met = false;
};

struct BoundsReport {
  double log_n = 0;
  int k = 0;
  int r = 0;
  double s0 = 0;
  double f = 0;
  double m = 0;  // independent-set count bound evaluated at this m
  BoundChain chain;
  IndepCountBound indep;
};

struct ConstructReport {
  RandomSubsetRun run;
  bool no_u_collinear = false;
  TailCheck tail;
  UTupleExpectation u_tuple;
};

struct ColorReport {
  GqReport gq;
  bool coloring_proper = false;  // greedy (and exact, when present) verified
  bool pigeonhole_ok = false;    // exact/greedy chi >= ceil(m / M)
};

// ---------------------------------------------------------------------------
// Serialization. Each to_* stamps a versioned "schema" field; each from_*
// round-trips it losslessly.

json to_json(const ParameterPlan& plan);
ParameterPlan plan_from_json(const json& j);

json to_json(const EnumerateReport& rep);
EnumerateReport enumerate_from_json(const json& j);

json to_json(const SupersatReport& rep);
SupersatReport supersat_from_json(const json& j);

json to_json(const BoundsReport& rep);
BoundsReport bounds_from_json(const json& j);

json to_json(const ConstructReport& rep);
ConstructReport construct_from_json(const json& j);

json to_json(const PiercingCertificate& cert);
PiercingCertificate certificate_from_json(const json& j);

json to_json(const ColorReport& rep);
ColorReport color_from_json(const json& j);

json to_json(const GreedyStats& stats);
GreedyStats greedy_stats_from_json(const json& j);

/// Writes text atomically: temp file in the same directory, then rename.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace hdw
