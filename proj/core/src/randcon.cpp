#include "hdw/randcon.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace hdw {

std::vector<Point> sample_subset(const GridSpec& grid, double alpha, std::uint64_t seed) {
  if (alpha < 0.0 || alpha > 1.0) throw domain_error("sample_subset: alpha in [0,1]");
  std::vector<Point> out;
  std::mt19937_64 rng(seed);
  const bool all = alpha >= 1.0;
  // threshold = round(alpha * 2^64), saturating
  long double scaled = static_cast<long double>(alpha) * std::ldexp(1.0L, 64);
  std::uint64_t threshold =
      scaled >= std::ldexp(1.0L, 64) ? ~0ULL : static_cast<std::uint64_t>(scaled);
  for (auto& p : grid_points(grid)) {
    std::uint64_t draw = rng();
    if (all || draw < threshold) out.push_back(std::move(p));
  }
  return out;
}

std::pair<std::vector<Point>, std::vector<Point>> delete_collinear_u_tuples(
    const std::vector<Point>& sample, int u) {
  if (u < 3) throw domain_error("delete_collinear_u_tuples: u >= 3 required");
  std::vector<Point> live = sample;
  std::vector<Point> deleted;
  while (true) {
    auto groups = group_maximal_lines(live);
    struct Violation {
      long long excess;
      LineKey key;
      std::vector<int> members;
    };
    std::vector<Violation> violations;
    for (auto& [key, members] : groups)
      if (static_cast<int>(members.size()) >= u)
        violations.push_back({static_cast<long long>(members.size()) - (u - 1), key, members});
    if (violations.empty()) break;
    std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
      if (a.excess != b.excess) return a.excess > b.excess;
      return a.key < b.key;
    });
    std::vector<char> dead(live.size(), 0);
    for (const auto& v : violations) {
      std::vector<int> alive;
      for (int i : v.members)
        if (!dead[i]) alive.push_back(i);
      long long excess = static_cast<long long>(alive.size()) - (u - 1);
      if (excess <= 0) continue;
      std::sort(alive.begin(), alive.end(),
                [&](int a, int b) { return live[a] > live[b]; });  // lex-largest first
      for (long long i = 0; i < excess; ++i) dead[alive[static_cast<std::size_t>(i)]] = 1;
    }
    std::vector<Point> next;
    for (std::size_t i = 0; i < live.size(); ++i)
      (dead[i] ? deleted : next).push_back(live[i]);
    live = std::move(next);
  }
  std::sort(deleted.begin(), deleted.end());
  return {std::move(live), std::move(deleted)};
}

bool verify_no_u_collinear(const std::vector<Point>& points, int u) {
  if (points.size() < static_cast<std::size_t>(u)) return true;
  for (const auto& [key, members] : group_maximal_lines(points))
    if (static_cast<int>(members.size()) >= u) return false;
  return true;
}

RandomSubsetRun make_run(const GridSpec& grid, double alpha, int u, std::uint64_t seed) {
  RandomSubsetRun run{grid, alpha, seed, u, {}, {}, {}};
  run.sample = sample_subset(grid, alpha, seed);
  auto [survivors, deleted] = delete_collinear_u_tuples(run.sample, u);
  run.survivors = std::move(survivors);
  run.deleted = std::move(deleted);
  return run;
}

SignedLog expected_independent_sets_log(double log_n, int k, int q, double log_p,
                                        double log_alpha, double s0, double f) {
  if (q < 3) throw domain_error("expected_independent_sets_log: q >= 3 required");
  if (std::isinf(log_alpha) && log_alpha < 0 && std::isfinite(log_p))
    return {-1, std::numeric_limits<double>::infinity()};  // alpha = 0, p >= 1
  double e1 = k - s0 - (k - k * s0) / (q - 1) + 0.3 * f;
  double e2 = k - s0 + 0.1 * f;
  SignedLog term1 = SignedLog::from_log(e1 * log_n);
  double inner = 1.0 + e2 * log_n - log_p + log_alpha;  // ln(e n^{e2} alpha / p)
  SignedLog term2 = inner == 0.0
                        ? SignedLog::zero()
                        : SignedLog{inner > 0 ? 1 : -1, log_p + std::log(std::abs(inner))};
  return slog_add(term1, term2);
}

UTupleExpectation expected_u_tuples_log(double log_n, int k, int u, double log_alpha) {
  if (u < 3) throw domain_error("expected_u_tuples_log: u >= 3 required");
  UTupleExpectation e;
  e.precondition_ok = u >= k + 1;
  double log_coeff = std::log(static_cast<double>(k)) + (u + k) * std::log(2.0) -
                     std::lgamma(static_cast<double>(u) + 1.0);
  e.log_expected = log_coeff + (u + k - 1.0) * log_n + std::log(log_n) + u * log_alpha;
  e.log_threshold = log_alpha + k * log_n;
  e.difference = e.log_expected - e.log_threshold;
  return e;
}

double exact_expected_u_tuples(const GridSpec& grid, int u, double alpha) {
  double total = 0;
  for (const auto& line : enumerate_lines(grid, u))
    total += static_cast<double>(binomial(BigInt(line.count), static_cast<unsigned>(u))) *
             std::pow(alpha, u);
  return total;
}

IndependentSetOutcome find_independent_set(const std::vector<Point>& S, int q, int target_p,
                                           std::uint64_t node_budget) {
  if (q < 3) throw domain_error("find_independent_set: q >= 3 required");
  std::vector<std::vector<int>> lines;
  for (auto& [key, members] : group_maximal_lines(S)) lines.push_back(members);
  IndepResult r = max_line_bounded_subset(static_cast<int>(S.size()), lines, q, target_p,
                                          node_budget);
  IndependentSetOutcome out;
  out.status = r.status;
  out.best_size = r.best_size;
  out.nodes = r.nodes;
  if (target_p > 0 && r.best_size >= target_p) {
    for (int i = 0; i < target_p; ++i) out.witness.push_back(S[r.best_subset[i]]);
  } else if (target_p <= 0) {
    for (int i : r.best_subset) out.witness.push_back(S[i]);
  }
  return out;
}

TailCheck sample_size_tail_check(const GridSpec& grid, double alpha, long long observed) {
  TailCheck t;
  BigInt total = grid.point_count();
  double n_pts = static_cast<double>(total);
  t.observed = observed;
  t.threshold = alpha * n_pts / 2.0;
  t.holds = static_cast<double>(observed) >= t.threshold;
  if (total <= 1'000'000) {
    // P[X >= ceil(threshold)] = 1 - sum_{i < threshold} pmf(i), exact terms
    long long cut = static_cast<long long>(std::ceil(t.threshold - 1e-12));
    double below = 0;
    long long N = static_cast<long long>(total);
    for (long long i = 0; i < cut; ++i) {
      double lp = std::lgamma(N + 1.0) - std::lgamma(i + 1.0) - std::lgamma(N - i + 1.0);
      if (alpha > 0) lp += i * std::log(alpha);
      if (alpha < 1) lp += (N - i) * std::log1p(-alpha);
      if (i > 0 && alpha == 0) lp = -std::numeric_limits<double>::infinity();
      below += std::exp(lp);
    }
    t.prob_ge_threshold = std::max(0.0, 1.0 - below);
  } else {
    double mu = alpha * n_pts;
    double sigma = std::sqrt(n_pts * alpha * (1 - alpha));
    t.prob_ge_threshold = 0.5 * std::erfc((t.threshold - mu) / (sigma * std::sqrt(2.0)));
    t.normal_approx = true;
  }
  return t;
}

}  // namespace hdw
