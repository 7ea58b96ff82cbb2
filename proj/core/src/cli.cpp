#include "hdw/cli.hpp"
#include <limits>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hdw/json_io.hpp"

namespace hdw {

namespace {

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void emit(const RunConfig& config, json j) {
  if (!config.no_timestamp) j["generated_at"] = utc_timestamp();
  std::string text = j.dump(2) + "\n";
  if (config.out.empty())
    std::cout << text;
  else
    write_text_atomic(config.out, text);
}

void guard_grid_size(const GridSpec& grid) {
  if (grid.point_count() > 5'000'000)
    throw resource_limit_error("grid too large: more than 5e6 points");
}

int run_enumerate(const RunConfig& config) {
  GridSpec grid(config.n, config.k);
  guard_grid_size(grid);
  EnumerateReport rep;
  rep.n = config.n;
  rep.k = config.k;
  rep.r = config.r;
  rep.stats = collinear_stats(grid, config.r);
  rep.bound = hyperedge_count_bound(config.n, config.k, config.r);
  emit(config, to_json(rep));
  return exit_code::ok;
}

int run_supersat(const RunConfig& config) {
  GridSpec grid(config.n, config.k);
  guard_grid_size(grid);
  std::optional<Rational> t_override;
  if (config.t_override) t_override = rational_from_string(*config.t_override);
  SupersatConfig sc = SupersatConfig::make(grid, config.r, config.s, t_override);
  SupersatFamily family = build_line_family(sc);
  CoverageReport coverage = verify_point_coverage(family, grid);
  // The closed-form bound is defined for k, r >= 3 only; construction also
  // supports k = 2, where the bound fields stay NaN.
  SupersatBound bound{std::numeric_limits<double>::quiet_NaN(), false};
  if (config.k >= 3 && config.r >= 3)
    bound = supersat_lower_bound_log(std::log(static_cast<double>(config.n)), config.k, config.r,
                                     config.s);
  SupersatReport rep;
  rep.n = config.n;
  rep.k = config.k;
  rep.r = config.r;
  rep.s = config.s;
  rep.c0 = sc.c0;
  rep.t_exact = sc.t.exact;
  rep.t_exact_value = sc.t.exact_value;
  rep.t_value = sc.t.value;
  rep.feasible = sc.feasible;
  rep.size_U = family.size_U;
  rep.size_V = family.size_V;
  rep.size_L = family.size_L;
  rep.prime_bound_applies = family.prime_bound_applies;
  rep.coverage_min = coverage.min_count;
  rep.covered = coverage.covered;
  rep.bound_log_value = bound.log_value;
  rep.bound_hypotheses_met = bound.hypotheses_met;
  emit(config, to_json(rep));
  if (config.mode == "strict" && family.size_V > 0 && !coverage.covered)
    return exit_code::verification_failure;
  return exit_code::ok;
}

int run_bounds(const RunConfig& config) {
  BoundsReport rep;
  rep.log_n = config.log_n;
  rep.k = config.k;
  rep.r = config.r;
  rep.s0 = config.s0;
  rep.f = config.f;
  rep.m = config.m_bound;
  rep.chain = container_bound_chain(config.log_n, config.k, config.r, config.s0, config.f);
  rep.indep = independent_set_count_log_bound(config.log_n, config.k, config.r, config.s0,
                                              config.f, config.m_bound);
  emit(config, to_json(rep));
  return exit_code::ok;
}

int run_plan(const RunConfig& config) {
  Rational eta = rational_from_string(config.eta);
  ParameterPlan plan = config.coloring_variant ? coloring_plan(config.q, eta)
                                               : choose_parameters(config.q, eta);
  emit(config, to_json(plan));
  return exit_code::ok;
}

ConstructReport build_construct_report(const RunConfig& config, const ParameterPlan& plan) {
  GridSpec grid(config.n, plan.k);
  guard_grid_size(grid);
  double log_n = std::log(static_cast<double>(config.n));
  double alpha =
      std::min(1.0, std::pow(static_cast<double>(config.n), static_cast<double>(plan.alpha_exp)));
  RandomSubsetRun run = make_run(grid, alpha, plan.u, config.seed);
  ConstructReport rep{std::move(run), false, {}, {}};
  rep.no_u_collinear = verify_no_u_collinear(rep.run.survivors, plan.u);
  rep.tail = sample_size_tail_check(grid, alpha, static_cast<long long>(rep.run.sample.size()));
  rep.u_tuple = expected_u_tuples_log(log_n, plan.k, plan.u,
                                      static_cast<double>(plan.alpha_exp) * log_n);
  return rep;
}

int run_construct(const RunConfig& config) {
  Rational eta = rational_from_string(config.eta);
  ParameterPlan plan = choose_parameters(config.q, eta);
  ConstructReport rep = build_construct_report(config, plan);
  emit(config, to_json(rep));
  if (config.mode == "strict" && !rep.no_u_collinear) return exit_code::verification_failure;
  return exit_code::ok;
}

int run_pierce(const RunConfig& config) {
  std::ifstream in(config.in_path);
  if (!in) throw domain_error("pierce: cannot open '" + config.in_path + "'");
  json run_json = json::parse(in);
  ConstructReport crep = construct_from_json(run_json);
  Rational eta = rational_from_string(config.eta);
  ParameterPlan plan = choose_parameters(config.q, eta);
  if (plan.u != crep.run.u)
    throw domain_error("pierce: plan u does not match the input run's u");
  PiercingCertificate cert = emit_certificate(crep.run, plan, config.budget);
  emit(config, to_json(cert));
  if (!config.csv_out.empty()) {
    std::ostringstream csv;
    csv << "concurrency,points\n";
    for (auto [c, count] : concurrency_histogram(cert.family)) csv << c << "," << count << "\n";
    write_text_atomic(config.csv_out, csv.str());
  }
  if (config.mode == "strict" && cert.pq.verdict == Verdict::Refuted)
    return exit_code::verification_failure;
  return exit_code::ok;
}

int run_color(const RunConfig& config) {
  Rational eta = rational_from_string(config.eta);
  ColorReport rep;
  rep.gq = gq_lower_pipeline(config.q, eta, config.m_target, config.seed, config.budget);
  rep.coloring_proper = coloring_is_proper(rep.gq.chi.greedy_coloring, rep.gq.edges, config.q) &&
                        (!rep.gq.chi.exact_coloring ||
                         coloring_is_proper(*rep.gq.chi.exact_coloring, rep.gq.edges, config.q));
  rep.pigeonhole_ok = !rep.gq.M_exact ||
                      (rep.gq.chi.greedy_upper >= rep.gq.chi_pigeonhole &&
                       (!rep.gq.chi.exact || *rep.gq.chi.exact >= rep.gq.chi_pigeonhole));
  emit(config, to_json(rep));
  if (config.mode == "strict" && (!rep.coloring_proper || !rep.pigeonhole_ok))
    return exit_code::verification_failure;
  return exit_code::ok;
}

}  // namespace

int dispatch(const RunConfig& config) {
  try {
    if (config.mode != "strict" && config.mode != "formula-only")
      throw domain_error("mode must be 'strict' or 'formula-only'");
    if (config.subcommand == "enumerate") return run_enumerate(config);
    if (config.subcommand == "supersat") return run_supersat(config);
    if (config.subcommand == "bounds") return run_bounds(config);
    if (config.subcommand == "plan") return run_plan(config);
    if (config.subcommand == "construct") return run_construct(config);
    if (config.subcommand == "pierce") return run_pierce(config);
    if (config.subcommand == "color") return run_color(config);
    throw domain_error("unknown subcommand '" + config.subcommand + "'");
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return exit_code::resource;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return exit_code::usage;
  }
}

}  // namespace hdw
