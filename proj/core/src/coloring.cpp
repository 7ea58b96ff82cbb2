#include "hdw/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace hdw {

LineSectionHypergraph build_Hq(const std::vector<PlanarPoint>& P, int q) {
  if (q < 2) throw domain_error("build_Hq: q >= 2 required");
  LineSectionHypergraph H;
  H.points = P;
  H.q = q;
  for (auto& [key, members] : group_planar_lines(H.points))
    if (static_cast<int>(members.size()) >= q) H.edges.push_back(members);
  return H;
}

ChromaticResult hq_chromatic_number(const LineSectionHypergraph& H, std::uint64_t node_budget) {
  return chromatic_number(static_cast<int>(H.points.size()), H.edges, H.q, node_budget);
}

GqReport gq_lower_pipeline(int q, const Rational& eta, long long m_target, std::uint64_t seed,
                           std::uint64_t node_budget) {
  if (q < 3) throw domain_error("gq_lower_pipeline: q >= 3 required");
  if (m_target < 2) throw domain_error("gq_lower_pipeline: m_target >= 2 required");
  GqReport rep;
  rep.plan = coloring_plan(q, eta);
  rep.seed = seed;

  // survivors ~ alpha n^k = n^{k-1-f}; invert for the grid side
  double growth = static_cast<double>(rep.plan.k) - 1 - static_cast<double>(rep.plan.f);
  rep.n = std::max<long long>(
      2, std::llround(std::pow(static_cast<double>(m_target), 1.0 / growth)));
  GridSpec grid{rep.n, rep.plan.k};
  rep.alpha = std::min(1.0, std::pow(static_cast<double>(rep.n),
                                     static_cast<double>(rep.plan.alpha_exp)));

  RandomSubsetRun run = make_run(grid, rep.alpha, rep.plan.u, seed);
  rep.sample_size = static_cast<int>(run.sample.size());
  if (run.survivors.empty()) throw domain_error("gq_lower_pipeline: empty survivor set");

  PlanarPointSet image = project_to_plane(run.survivors, seed ^ 0x9e3779b97f4a7c15ULL);
  rep.m = static_cast<int>(image.points.size());

  LineSectionHypergraph H = build_Hq(image.points, q);
  rep.edges = H.edges;
  IndepResult indep =
      max_line_bounded_subset(rep.m, H.edges, q, 0, node_budget);
  rep.M = std::max(1, indep.best_size);  // any single point is edge-free
  rep.M_exact = indep.status == SearchStatus::Exhausted;
  rep.chi_pigeonhole = (rep.m + rep.M - 1) / rep.M;

  rep.chi = hq_chromatic_number(H, node_budget);
  rep.ideal_log_bound =
      static_cast<double>(rep.plan.gq_exponent) * std::log(static_cast<double>(rep.m));
  rep.asymptotics_in_range = std::log(static_cast<double>(rep.m)) >= rep.plan.log_n_min;
  return rep;
}

GreedyStats greedy_upper_experiment(int q, long long m, int trials, std::uint64_t seed) {
  if (q < 3) throw domain_error("greedy_upper_experiment: q >= 3 required");
  if (trials < 1) throw domain_error("greedy_upper_experiment: trials >= 1 required");
  if (m < 1) throw domain_error("greedy_upper_experiment: m >= 1 required");
  GreedyStats stats;
  stats.q = q;
  stats.m = m;
  stats.ideal = std::pow(static_cast<double>(m), 1.0 / (q - 1));
  long long span = 4 * m;  // dense enough for collinear sections to appear
  double total = 0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
    std::uniform_int_distribution<long long> coord(0, span - 1);
    std::set<PlanarPoint> pts;
    while (static_cast<long long>(pts.size()) < m)
      pts.insert({BigInt(coord(rng)), BigInt(coord(rng))});
    LineSectionHypergraph H = build_Hq({pts.begin(), pts.end()}, q);
    ChromaticResult c = chromatic_number(static_cast<int>(H.points.size()), H.edges, q, 0);
    GreedyTrial trial;
    trial.chi_greedy = c.greedy_upper;
    trial.edges = static_cast<int>(H.edges.size());
    total += c.greedy_upper;
    stats.max_greedy = std::max(stats.max_greedy, c.greedy_upper);
    stats.trials.push_back(trial);
  }
  stats.mean_greedy = total / trials;
  stats.mean_ratio = stats.mean_greedy / stats.ideal;
  return stats;
}

}  // namespace hdw
