#include "hdw/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace hdw {

namespace {

json number_or_string(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double double_from(const json& j) {
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw domain_error("json: bad numeric string '" + s + "'");
  }
  return j.get<double>();
}

void expect_schema(const json& j, const std::string& id) {
  if (!j.contains("schema") || j["schema"] != id)
    throw domain_error("json: expected schema '" + id + "'");
}

}  // namespace

json tag_exact(long long v) { return {{"value", v}, {"provenance", "exact"}}; }
json tag_exact(const BigInt& v) { return {{"value", v.str()}, {"provenance", "exact"}}; }
json tag_exact(const Rational& v) {
  return {{"value", rational_to_string(v)}, {"provenance", "exact"}};
}
json tag_float(double v) { return {{"value", number_or_string(v)}, {"provenance", "float"}}; }
json tag_log(double v) { return {{"value", number_or_string(v)}, {"provenance", "log-space"}}; }
json tag_nested(const DepthValue& v) {
  return {{"value", number_or_string(v.value)},
          {"log_depth", v.log_depth},
          {"provenance", "nested-log"}};
}

long long untag_int(const json& j) { return j.at("value").get<long long>(); }
BigInt untag_big(const json& j) { return BigInt(j.at("value").get<std::string>()); }
Rational untag_rational(const json& j) {
  return rational_from_string(j.at("value").get<std::string>());
}
double untag_double(const json& j) { return double_from(j.at("value")); }
DepthValue untag_depth(const json& j) {
  return {double_from(j.at("value")), j.at("log_depth").get<int>()};
}

// ---------------------------------------------------------------------------
// Shared pieces.

namespace {

json point_to_json(const Point& p) { return json(p); }
Point point_from_json(const json& j) { return j.get<Point>(); }

json points_to_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(point_to_json(p));
  return arr;
}
std::vector<Point> points_from_json(const json& j) {
  std::vector<Point> pts;
  for (const auto& e : j) pts.push_back(point_from_json(e));
  return pts;
}

json planar_point_to_json(const PlanarPoint& p) {
  return {{"x", p.x.str()}, {"y", p.y.str()}};
}
PlanarPoint planar_point_from_json(const json& j) {
  return {BigInt(j.at("x").get<std::string>()), BigInt(j.at("y").get<std::string>())};
}

json rat_point_to_json(const RatPoint& p) {
  return {{"x", rational_to_string(p.x)}, {"y", rational_to_string(p.y)}};
}
RatPoint rat_point_from_json(const json& j) {
  return {rational_from_string(j.at("x").get<std::string>()),
          rational_from_string(j.at("y").get<std::string>())};
}

json line_to_json(const PlanarLine& l) {
  return {{"slope", rational_to_string(l.slope)}, {"offset", rational_to_string(l.offset)}};
}
PlanarLine line_from_json(const json& j) {
  return {rational_from_string(j.at("slope").get<std::string>()),
          rational_from_string(j.at("offset").get<std::string>())};
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "proved";
    case Verdict::Refuted: return "refuted";
    default: return "unknown";
  }
}
Verdict verdict_from(const std::string& s) {
  if (s == "proved") return Verdict::Proved;
  if (s == "refuted") return Verdict::Refuted;
  if (s == "unknown") return Verdict::Unknown;
  throw domain_error("json: bad verdict '" + s + "'");
}

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::TargetReached: return "target-reached";
    default: return "budget-exceeded";
  }
}
SearchStatus status_from(const std::string& s) {
  if (s == "exhausted") return SearchStatus::Exhausted;
  if (s == "target-reached") return SearchStatus::TargetReached;
  if (s == "budget-exceeded") return SearchStatus::BudgetExceeded;
  throw domain_error("json: bad status '" + s + "'");
}

json plan_body(const ParameterPlan& p) {
  return {{"q", tag_exact(static_cast<long long>(p.q))},
          {"eta", tag_exact(p.eta)},
          {"coloring", p.coloring},
          {"k", tag_exact(static_cast<long long>(p.k))},
          {"u", tag_exact(static_cast<long long>(p.u))},
          {"s0", tag_exact(p.s0)},
          {"f", tag_exact(p.f)},
          {"beta_boundary", tag_exact(p.beta_boundary)},
          {"alpha_exp", tag_exact(p.alpha_exp)},
          {"p_exp", tag_exact(p.p_exp)},
          {"T_plan", tag_exact(p.T_plan)},
          {"T_floor", tag_exact(p.T_floor)},
          {"gq_exponent", tag_exact(p.gq_exponent)},
          {"log_n_min", tag_log(p.log_n_min)}};
}
ParameterPlan plan_body_from(const json& j) {
  ParameterPlan p;
  p.q = static_cast<int>(untag_int(j.at("q")));
  p.eta = untag_rational(j.at("eta"));
  p.coloring = j.at("coloring").get<bool>();
  p.k = static_cast<int>(untag_int(j.at("k")));
  p.u = static_cast<int>(untag_int(j.at("u")));
  p.s0 = untag_rational(j.at("s0"));
  p.f = untag_rational(j.at("f"));
  p.beta_boundary = untag_rational(j.at("beta_boundary"));
  p.alpha_exp = untag_rational(j.at("alpha_exp"));
  p.p_exp = untag_rational(j.at("p_exp"));
  p.T_plan = untag_rational(j.at("T_plan"));
  p.T_floor = untag_rational(j.at("T_floor"));
  p.gq_exponent = untag_rational(j.at("gq_exponent"));
  p.log_n_min = untag_double(j.at("log_n_min"));
  return p;
}

json chromatic_to_json(const ChromaticResult& c) {
  json j{{"greedy_upper", tag_exact(static_cast<long long>(c.greedy_upper))},
         {"lower", tag_exact(static_cast<long long>(c.lower))},
         {"greedy_coloring", json(c.greedy_coloring)},
         {"nodes", c.nodes}};
  j["exact"] = c.exact ? tag_exact(static_cast<long long>(*c.exact)) : json(nullptr);
  j["exact_coloring"] = c.exact_coloring ? json(*c.exact_coloring) : json(nullptr);
  return j;
}
ChromaticResult chromatic_from_json(const json& j) {
  ChromaticResult c;
  c.greedy_upper = static_cast<int>(untag_int(j.at("greedy_upper")));
  c.lower = static_cast<int>(untag_int(j.at("lower")));
  c.greedy_coloring = j.at("greedy_coloring").get<std::vector<int>>();
  c.nodes = j.at("nodes").get<std::uint64_t>();
  if (!j.at("exact").is_null()) c.exact = static_cast<int>(untag_int(j.at("exact")));
  if (!j.at("exact_coloring").is_null())
    c.exact_coloring = j.at("exact_coloring").get<std::vector<int>>();
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

json to_json(const ParameterPlan& plan) {
  json j = plan_body(plan);
  j["schema"] = "hdw.plan/1";
  return j;
}
ParameterPlan plan_from_json(const json& j) {
  expect_schema(j, "hdw.plan/1");
  return plan_body_from(j);
}

json to_json(const EnumerateReport& rep) {
  json codeg = json::object();
  for (const auto& [jidx, v] : rep.stats.codegree_max)
    codeg[std::to_string(jidx)] = tag_exact(v);
  return {{"schema", "hdw.enumerate/1"},
          {"n", tag_exact(rep.n)},
          {"k", tag_exact(static_cast<long long>(rep.k))},
          {"r", tag_exact(static_cast<long long>(rep.r))},
          {"edge_count", tag_exact(rep.stats.edge_count)},
          {"avg_degree", tag_exact(rep.stats.avg_degree)},
          {"codegree_max", codeg},
          {"max_line_count", tag_exact(rep.stats.max_line_count)},
          {"bound", tag_float(rep.bound)}};
}
EnumerateReport enumerate_from_json(const json& j) {
  expect_schema(j, "hdw.enumerate/1");
  EnumerateReport rep;
  rep.n = untag_int(j.at("n"));
  rep.k = static_cast<int>(untag_int(j.at("k")));
  rep.r = static_cast<int>(untag_int(j.at("r")));
  rep.stats.r = rep.r;
  rep.stats.edge_count = untag_big(j.at("edge_count"));
  rep.stats.avg_degree = untag_rational(j.at("avg_degree"));
  for (const auto& [key, v] : j.at("codegree_max").items())
    rep.stats.codegree_max[std::stoi(key)] = untag_big(v);
  rep.stats.max_line_count = untag_int(j.at("max_line_count"));
  rep.bound = untag_double(j.at("bound"));
  return rep;
}

json to_json(const SupersatReport& rep) {
  return {{"schema", "hdw.supersat/1"},
          {"n", tag_exact(rep.n)},
          {"k", tag_exact(static_cast<long long>(rep.k))},
          {"r", tag_exact(static_cast<long long>(rep.r))},
          {"s", tag_float(rep.s)},
          {"c0", tag_exact(rep.c0)},
          {"t_exact", rep.t_exact},
          {"t_exact_value", tag_exact(rep.t_exact_value)},
          {"t_value", tag_float(rep.t_value)},
          {"feasible", rep.feasible},
          {"size_U", tag_exact(rep.size_U)},
          {"size_V", tag_exact(rep.size_V)},
          {"size_L", tag_exact(rep.size_L)},
          {"prime_bound_applies", rep.prime_bound_applies},
          {"coverage_min", tag_exact(rep.coverage_min)},
          {"covered", rep.covered},
          {"bound_log_value", tag_log(rep.bound_log_value)},
          {"bound_hypotheses_met", rep.bound_hypotheses_met}};
}
SupersatReport supersat_from_json(const json& j) {
  expect_schema(j, "hdw.supersat/1");
  SupersatReport rep;
  rep.n = untag_int(j.at("n"));
  rep.k = static_cast<int>(untag_int(j.at("k")));
  rep.r = static_cast<int>(untag_int(j.at("r")));
  rep.s = untag_double(j.at("s"));
  rep.c0 = untag_big(j.at("c0"));
  rep.t_exact = j.at("t_exact").get<bool>();
  rep.t_exact_value = untag_rational(j.at("t_exact_value"));
  rep.t_value = untag_double(j.at("t_value"));
  rep.feasible = j.at("feasible").get<bool>();
  rep.size_U = untag_big(j.at("size_U"));
  rep.size_V = untag_big(j.at("size_V"));
  rep.size_L = untag_big(j.at("size_L"));
  rep.prime_bound_applies = j.at("prime_bound_applies").get<bool>();
  rep.coverage_min = untag_int(j.at("coverage_min"));
  rep.covered = j.at("covered").get<bool>();
  rep.bound_log_value = untag_double(j.at("bound_log_value"));
  rep.bound_hypotheses_met = j.at("bound_hypotheses_met").get<bool>();
  return rep;
}

namespace {

json condition_to_json(const ConditionReport& c) {
  return {{"lhs", tag_float(c.lhs)}, {"rhs", tag_float(c.rhs)}, {"pass", c.pass}};
}
ConditionReport condition_from_json(const json& j) {
  return {untag_double(j.at("lhs")), untag_double(j.at("rhs")), j.at("pass").get<bool>()};
}

}  // namespace

json to_json(const BoundsReport& rep) {
  const BoundChain& c = rep.chain;
  return {{"schema", "hdw.bounds/1"},
          {"log_n", tag_log(rep.log_n)},
          {"k", tag_exact(static_cast<long long>(rep.k))},
          {"r", tag_exact(static_cast<long long>(rep.r))},
          {"s0", tag_float(rep.s0)},
          {"f", tag_float(rep.f)},
          {"m", tag_float(rep.m)},
          {"hypotheses",
           {{"cond1", condition_to_json(c.hypotheses.cond1)},
            {"cond2", condition_to_json(c.hypotheses.cond2)},
            {"cond3", condition_to_json(c.hypotheses.cond3)},
            {"pass", c.hypotheses.pass}}},
          {"epsilon_exponent", tag_float(c.epsilon_exponent)},
          {"tau_exponent", tag_float(c.tau_extremal.exponent)},
          {"n_tau_leq_1", c.tau_extremal.n_tau_leq_1},
          {"per_step_log_count", tag_nested({c.per_step_log_count, 2})},
          {"total_log_count", tag_nested({c.total_log_count, 2})},
          {"ledger",
           {{"exact_steps", tag_float(c.ledger.exact_steps)},
            {"steps_cap", tag_float(c.ledger.steps_cap)},
            {"within_cap", c.ledger.within_cap}}},
          {"indep_log_value", tag_log(rep.indep.log_value)},
          {"indep_reported", tag_nested(rep.indep.reported)}};
}
BoundsReport bounds_from_json(const json& j) {
  expect_schema(j, "hdw.bounds/1");
  BoundsReport rep;
  rep.log_n = untag_double(j.at("log_n"));
  rep.k = static_cast<int>(untag_int(j.at("k")));
  rep.r = static_cast<int>(untag_int(j.at("r")));
  rep.s0 = untag_double(j.at("s0"));
  rep.f = untag_double(j.at("f"));
  rep.m = untag_double(j.at("m"));
  const json& h = j.at("hypotheses");
  rep.chain.hypotheses.cond1 = condition_from_json(h.at("cond1"));
  rep.chain.hypotheses.cond2 = condition_from_json(h.at("cond2"));
  rep.chain.hypotheses.cond3 = condition_from_json(h.at("cond3"));
  rep.chain.hypotheses.pass = h.at("pass").get<bool>();
  rep.chain.epsilon_exponent = untag_double(j.at("epsilon_exponent"));
  rep.chain.tau_extremal.exponent = untag_double(j.at("tau_exponent"));
  rep.chain.tau_extremal.n_tau_leq_1 = j.at("n_tau_leq_1").get<bool>();
  rep.chain.per_step_log_count = untag_depth(j.at("per_step_log_count")).value;
  rep.chain.total_log_count = untag_depth(j.at("total_log_count")).value;
  rep.chain.ledger.exact_steps = untag_double(j.at("ledger").at("exact_steps"));
  rep.chain.ledger.steps_cap = untag_double(j.at("ledger").at("steps_cap"));
  rep.chain.ledger.within_cap = j.at("ledger").at("within_cap").get<bool>();
  rep.chain.ledger.s0 = rep.s0;
  rep.chain.ledger.f = rep.f;
  rep.chain.ledger.k = rep.k;
  rep.indep.log_value = untag_double(j.at("indep_log_value"));
  rep.indep.reported = untag_depth(j.at("indep_reported"));
  return rep;
}

json to_json(const ConstructReport& rep) {
  return {{"schema", "hdw.construct/1"},
          {"n", tag_exact(rep.run.grid.n)},
          {"k", tag_exact(static_cast<long long>(rep.run.grid.k))},
          {"alpha", tag_float(rep.run.alpha)},
          {"seed", rep.run.seed},
          {"u", tag_exact(static_cast<long long>(rep.run.u))},
          {"sample", points_to_json(rep.run.sample)},
          {"deleted", points_to_json(rep.run.deleted)},
          {"survivors", points_to_json(rep.run.survivors)},
          {"no_u_collinear", rep.no_u_collinear},
          {"tail",
           {{"observed", tag_exact(rep.tail.observed)},
            {"threshold", tag_float(rep.tail.threshold)},
            {"holds", rep.tail.holds},
            {"prob_ge_threshold", tag_float(rep.tail.prob_ge_threshold)},
            {"normal_approx", rep.tail.normal_approx}}},
          {"u_tuple",
           {{"log_expected", tag_log(rep.u_tuple.log_expected)},
            {"log_threshold", tag_log(rep.u_tuple.log_threshold)},
            {"difference", tag_log(rep.u_tuple.difference)},
            {"precondition_ok", rep.u_tuple.precondition_ok}}}};
}
ConstructReport construct_from_json(const json& j) {
  expect_schema(j, "hdw.construct/1");
  GridSpec grid(untag_int(j.at("n")), static_cast<int>(untag_int(j.at("k"))));
  ConstructReport rep{{grid, 0, 0, 0, {}, {}, {}}, false, {}, {}};
  rep.run.alpha = untag_double(j.at("alpha"));
  rep.run.seed = j.at("seed").get<std::uint64_t>();
  rep.run.u = static_cast<int>(untag_int(j.at("u")));
  rep.run.sample = points_from_json(j.at("sample"));
  rep.run.deleted = points_from_json(j.at("deleted"));
  rep.run.survivors = points_from_json(j.at("survivors"));
  rep.no_u_collinear = j.at("no_u_collinear").get<bool>();
  const json& t = j.at("tail");
  rep.tail.observed = untag_int(t.at("observed"));
  rep.tail.threshold = untag_double(t.at("threshold"));
  rep.tail.holds = t.at("holds").get<bool>();
  rep.tail.prob_ge_threshold = untag_double(t.at("prob_ge_threshold"));
  rep.tail.normal_approx = t.at("normal_approx").get<bool>();
  const json& ut = j.at("u_tuple");
  rep.u_tuple.log_expected = untag_double(ut.at("log_expected"));
  rep.u_tuple.log_threshold = untag_double(ut.at("log_threshold"));
  rep.u_tuple.difference = untag_double(ut.at("difference"));
  rep.u_tuple.precondition_ok = ut.at("precondition_ok").get<bool>();
  return rep;
}

namespace {

json image_to_json(const PlanarPointSet& s) {
  json pts = json::array();
  for (const auto& p : s.points) pts.push_back(planar_point_to_json(p));
  return {{"points", pts},
          {"coeff_x", json(s.coeff_x)},
          {"coeff_y", json(s.coeff_y)},
          {"source_hash", s.source_hash},
          {"attempts", tag_exact(static_cast<long long>(s.attempts))},
          {"triple_check_exhaustive", s.triple_check_exhaustive}};
}
PlanarPointSet image_from_json(const json& j) {
  PlanarPointSet s;
  for (const auto& e : j.at("points")) s.points.push_back(planar_point_from_json(e));
  s.coeff_x = j.at("coeff_x").get<std::vector<Coord>>();
  s.coeff_y = j.at("coeff_y").get<std::vector<Coord>>();
  s.source_hash = j.at("source_hash").get<std::uint64_t>();
  s.attempts = static_cast<int>(untag_int(j.at("attempts")));
  s.triple_check_exhaustive = j.at("triple_check_exhaustive").get<bool>();
  return s;
}

json family_to_json(const LineFamily& f) {
  json lines = json::array();
  for (const auto& l : f.lines) lines.push_back(line_to_json(l));
  return {{"lines", lines}};
}
LineFamily family_from_json(const json& j) {
  LineFamily f;
  for (const auto& e : j.at("lines")) f.lines.push_back(line_from_json(e));
  return f;
}

json rat_points_to_json(const std::vector<RatPoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(rat_point_to_json(p));
  return arr;
}
std::vector<RatPoint> rat_points_from_json(const json& j) {
  std::vector<RatPoint> pts;
  for (const auto& e : j) pts.push_back(rat_point_from_json(e));
  return pts;
}

}  // namespace

json to_json(const PiercingCertificate& cert) {
  json j{{"schema", "hdw.certificate/1"},
         {"seed", cert.seed},
         {"plan", plan_body(cert.plan)},
         {"n", tag_exact(cert.n)},
         {"alpha", tag_float(cert.alpha)},
         {"survivors", tag_exact(static_cast<long long>(cert.survivors))},
         {"image", image_to_json(cert.image)},
         {"family", family_to_json(cert.family)},
         {"pq",
          {{"verdict", verdict_name(cert.pq.verdict)},
           {"exhausted", cert.pq.exhausted},
           {"max_no_q_concurrent", tag_exact(static_cast<long long>(cert.pq.max_no_q_concurrent))},
           {"witness", json(cert.pq.witness)},
           {"nodes", cert.pq.nodes}}},
         {"piercing",
          {{"max_concurrency", tag_exact(static_cast<long long>(cert.piercing.max_concurrency))},
           {"lower", tag_exact(cert.piercing.lower)},
           {"greedy_upper", tag_exact(static_cast<long long>(cert.piercing.greedy_upper))},
           {"exact_points", rat_points_to_json(cert.piercing.exact_points)},
           {"greedy_points", rat_points_to_json(cert.piercing.greedy_points)},
           {"nodes", cert.piercing.nodes}}},
         {"piercing_lower_u", tag_exact(cert.piercing_lower_u)},
         {"asymptotics_in_range", cert.asymptotics_in_range}};
  j["p"] = cert.p ? tag_exact(static_cast<long long>(*cert.p)) : json(nullptr);
  j["piercing"]["exact"] =
      cert.piercing.exact ? tag_exact(static_cast<long long>(*cert.piercing.exact))
                          : json(nullptr);
  j["realized_T"] = cert.realized_T ? tag_float(*cert.realized_T) : json(nullptr);
  return j;
}
PiercingCertificate certificate_from_json(const json& j) {
  expect_schema(j, "hdw.certificate/1");
  PiercingCertificate cert;
  cert.seed = j.at("seed").get<std::uint64_t>();
  cert.plan = plan_body_from(j.at("plan"));
  cert.n = untag_int(j.at("n"));
  cert.alpha = untag_double(j.at("alpha"));
  cert.survivors = static_cast<int>(untag_int(j.at("survivors")));
  cert.image = image_from_json(j.at("image"));
  cert.family = family_from_json(j.at("family"));
  const json& pq = j.at("pq");
  cert.pq.verdict = verdict_from(pq.at("verdict").get<std::string>());
  cert.pq.exhausted = pq.at("exhausted").get<bool>();
  cert.pq.max_no_q_concurrent = static_cast<int>(untag_int(pq.at("max_no_q_concurrent")));
  cert.pq.witness = pq.at("witness").get<std::vector<int>>();
  cert.pq.nodes = pq.at("nodes").get<std::uint64_t>();
  const json& pc = j.at("piercing");
  cert.piercing.max_concurrency = static_cast<int>(untag_int(pc.at("max_concurrency")));
  cert.piercing.lower = untag_rational(pc.at("lower"));
  cert.piercing.greedy_upper = static_cast<int>(untag_int(pc.at("greedy_upper")));
  cert.piercing.exact_points = rat_points_from_json(pc.at("exact_points"));
  cert.piercing.greedy_points = rat_points_from_json(pc.at("greedy_points"));
  cert.piercing.nodes = pc.at("nodes").get<std::uint64_t>();
  if (!pc.at("exact").is_null())
    cert.piercing.exact = static_cast<int>(untag_int(pc.at("exact")));
  cert.piercing_lower_u = untag_rational(j.at("piercing_lower_u"));
  if (!j.at("p").is_null()) cert.p = static_cast<int>(untag_int(j.at("p")));
  if (!j.at("realized_T").is_null()) cert.realized_T = untag_double(j.at("realized_T"));
  cert.asymptotics_in_range = j.at("asymptotics_in_range").get<bool>();
  return cert;
}

json to_json(const ColorReport& rep) {
  const GqReport& g = rep.gq;
  return {{"schema", "hdw.color/1"},
          {"plan", plan_body(g.plan)},
          {"n", tag_exact(g.n)},
          {"alpha", tag_float(g.alpha)},
          {"seed", g.seed},
          {"sample_size", tag_exact(static_cast<long long>(g.sample_size))},
          {"m", tag_exact(static_cast<long long>(g.m))},
          {"M", tag_exact(static_cast<long long>(g.M))},
          {"M_exact", g.M_exact},
          {"chi_pigeonhole", tag_exact(static_cast<long long>(g.chi_pigeonhole))},
          {"chi", chromatic_to_json(g.chi)},
          {"ideal_log_bound", tag_log(g.ideal_log_bound)},
          {"asymptotics_in_range", g.asymptotics_in_range},
          {"coloring_proper", rep.coloring_proper},
          {"pigeonhole_ok", rep.pigeonhole_ok}};
}
ColorReport color_from_json(const json& j) {
  expect_schema(j, "hdw.color/1");
  ColorReport rep;
  rep.gq.plan = plan_body_from(j.at("plan"));
  rep.gq.n = untag_int(j.at("n"));
  rep.gq.alpha = untag_double(j.at("alpha"));
  rep.gq.seed = j.at("seed").get<std::uint64_t>();
  rep.gq.sample_size = static_cast<int>(untag_int(j.at("sample_size")));
  rep.gq.m = static_cast<int>(untag_int(j.at("m")));
  rep.gq.M = static_cast<int>(untag_int(j.at("M")));
  rep.gq.M_exact = j.at("M_exact").get<bool>();
  rep.gq.chi_pigeonhole = static_cast<int>(untag_int(j.at("chi_pigeonhole")));
  rep.gq.chi = chromatic_from_json(j.at("chi"));
  rep.gq.ideal_log_bound = untag_double(j.at("ideal_log_bound"));
  rep.gq.asymptotics_in_range = j.at("asymptotics_in_range").get<bool>();
  rep.coloring_proper = j.at("coloring_proper").get<bool>();
  rep.pigeonhole_ok = j.at("pigeonhole_ok").get<bool>();
  return rep;
}

json to_json(const GreedyStats& stats) {
  json trials = json::array();
  for (const auto& t : stats.trials)
    trials.push_back({{"chi_greedy", tag_exact(static_cast<long long>(t.chi_greedy))},
                      {"edges", tag_exact(static_cast<long long>(t.edges))}});
  return {{"schema", "hdw.greedy/1"},
          {"q", tag_exact(static_cast<long long>(stats.q))},
          {"m", tag_exact(stats.m)},
          {"trials", trials},
          {"mean_greedy", tag_float(stats.mean_greedy)},
          {"max_greedy", tag_exact(static_cast<long long>(stats.max_greedy))},
          {"ideal", tag_float(stats.ideal)},
          {"mean_ratio", tag_float(stats.mean_ratio)}};
}
GreedyStats greedy_stats_from_json(const json& j) {
  expect_schema(j, "hdw.greedy/1");
  GreedyStats stats;
  stats.q = static_cast<int>(untag_int(j.at("q")));
  stats.m = untag_int(j.at("m"));
  for (const auto& e : j.at("trials"))
    stats.trials.push_back({static_cast<int>(untag_int(e.at("chi_greedy"))),
                            static_cast<int>(untag_int(e.at("edges")))});
  stats.mean_greedy = untag_double(j.at("mean_greedy"));
  stats.max_greedy = static_cast<int>(untag_int(j.at("max_greedy")));
  stats.ideal = untag_double(j.at("ideal"));
  stats.mean_ratio = untag_double(j.at("mean_ratio"));
  return stats;
}

void write_text_atomic(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw resource_limit_error("cannot open '" + tmp + "' for writing");
    out << text;
    if (!out.flush()) throw resource_limit_error("short write to '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw resource_limit_error("cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace hdw
