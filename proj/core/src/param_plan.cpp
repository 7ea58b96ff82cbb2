#include "hdw/param_plan.hpp"

#include <cmath>

namespace hdw {

Rational target_T(int k, int q) {
  Rational frac(k - q + 1, k);
  Rational denom = Rational(k) - frac - 1;
  if (denom <= 0) throw domain_error("target_T: k - (k-q+1)/k - 1 must be positive");
  return 1 + frac / denom;
}

Rational coloring_target(int k, int q) {
  Rational num = Rational(k) - Rational(k, q);
  Rational denom = Rational(k) - Rational(k - q + 1, k) - 1;
  if (denom <= 0) throw domain_error("coloring_target: denominator must be positive");
  return num / denom;
}

SweepResult sweep_k(int q, int k_lo, int k_hi) {
  SweepResult res;
  for (int k = k_lo; k <= k_hi; ++k) {
    Rational frac(k - q + 1, k);
    if (Rational(k) - frac - 1 <= 0) continue;
    res.values.emplace_back(k, target_T(k, q));
  }
  if (res.values.empty()) throw domain_error("sweep_k: empty domain");
  res.max_value = res.values.front().second;
  for (const auto& [k, v] : res.values)
    if (v > res.max_value) res.max_value = v;
  for (const auto& [k, v] : res.values)
    if (v == res.max_value) res.argmax.push_back(k);
  // increasing then decreasing?
  bool decreasing_started = false;
  res.unimodal = true;
  for (std::size_t i = 1; i < res.values.size(); ++i) {
    if (res.values[i].second >= res.values[i - 1].second) {
      if (decreasing_started) {
        res.unimodal = false;
        break;
      }
    } else {
      decreasing_started = true;
    }
  }
  return res;
}

namespace {

/// Smallest x = ln(n) with c * (x / ln x)^{1/root} >= q, for x > e.
double feasibility_log_threshold(double c, int q, int root) {
  double target = std::pow(static_cast<double>(q) / c, root);  // need x/ln x >= target
  auto ratio = [](double x) { return x / std::log(x); };
  double hi = 4.0;
  while (ratio(hi) < target) hi *= 2;
  double lo = hi / 2;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (ratio(mid) >= target ? hi : lo) = mid;
  }
  return hi;
}

void check_q_eta(int q, const Rational& eta) {
  if (q < 3) throw domain_error("plan: q >= 3 required");
  if (eta <= 0 || eta >= Rational(1, 2)) throw domain_error("plan: eta in (0, 1/2) required");
}

}  // namespace

ParameterPlan choose_parameters(int q, const Rational& eta) {
  check_q_eta(q, eta);
  ParameterPlan plan;
  plan.q = q;
  plan.eta = eta;
  plan.k = 2 * q - 2;
  plan.u = 2 * q - 1;
  plan.s0 = Rational(1, 2);
  plan.f = eta / (4 * q);
  plan.beta_boundary = (Rational(plan.k) - Rational(plan.k) * plan.s0) / (q - 1);  // = 1
  plan.alpha_exp = -1 - plan.f;
  plan.p_exp = Rational(4 * q - 7, 2) + plan.f;  // 2q - 3.5 + f
  plan.T_plan = 1 + Rational(1, 4 * q - 7) - plan.f;
  plan.T_floor = 1 + (1 - eta) / (4 * q - 7);
  plan.log_n_min = feasibility_log_threshold(0.01 * static_cast<double>(eta), q, 2);
  return plan;
}

ParameterPlan coloring_plan(int q, const Rational& eta) {
  check_q_eta(q, eta);
  ParameterPlan plan;
  plan.q = q;
  plan.eta = eta;
  plan.coloring = true;
  plan.k = q;
  plan.u = q + 1;
  plan.s0 = Rational(1, q);  // (k-q+1)/k at k = q
  plan.f = eta / (q * q);
  plan.beta_boundary = (Rational(plan.k) - Rational(plan.k) * plan.s0) / (q - 1);
  plan.alpha_exp = -(Rational(plan.k) - Rational(plan.k) * plan.s0) / (q - 1) - plan.f;
  plan.p_exp = Rational(plan.k) - plan.s0 -
               (Rational(plan.k) - Rational(plan.k) * plan.s0) / (q - 1) + plan.f;
  plan.T_plan = 1 + Rational(1, q * q - q - 1);
  plan.T_floor = 1 + (1 - eta) / (q * q - q - 1);
  plan.gq_exponent = (1 - eta) / (Rational(q * q - q) - eta);
  plan.log_n_min = feasibility_log_threshold(0.005 * static_cast<double>(eta), q, 4);
  return plan;
}

BetaCheck beta_feasible(int k, int q, const Rational& s0, const Rational& beta) {
  BetaCheck c;
  c.boundary = (Rational(k) - Rational(k) * s0) / (q - 1);
  c.feasible = beta < c.boundary;
  return c;
}

MarginSweepReport margin_sweep(int q, const Rational& eta, const std::vector<Rational>& s0_grid,
                                const std::vector<int>& u_grid) {
  check_q_eta(q, eta);
  MarginSweepReport rep;
  rep.k = 2 * q - 2;
  int k = rep.k;
  Rational s0_boundary(k - q + 1, k);
  Rational p_exp_boundary = Rational(k) - s0_boundary - (Rational(k) - Rational(k) * s0_boundary) / (q - 1);
  rep.boundary_target = target_T(k, q);
  for (const Rational& s0 : s0_grid) {
    if (s0 <= s0_boundary || s0 > Rational(9, 10))
      throw domain_error("margin_sweep: s0 must lie in ((k-q+1)/k, 0.9]");
    MarginSweepRow row;
    row.s0 = s0;
    row.p_exp = Rational(k) - s0 - (Rational(k) - Rational(k) * s0) / (q - 1);
    if (row.p_exp < p_exp_boundary) row.p_exp = p_exp_boundary;
    row.capped_target = Rational(k - 1) / row.p_exp;
    row.margin = rep.boundary_target - row.capped_target;
    rep.rows.push_back(std::move(row));
  }
  rep.all_margins_nonnegative = true;
  for (const auto& row : rep.rows)
    if (row.margin < 0) rep.all_margins_nonnegative = false;
  rep.u_cap_holds = true;
  for (int u : u_grid) {
    if (u < 2) throw domain_error("margin_sweep: u >= 2 required");
    // alpha n <= u forces alpha/(4(u-1)) <= n^{-1} * u/(4(u-1)) <= n^{-1}
    if (Rational(u, 4 * (u - 1)) > 1) rep.u_cap_holds = false;
  }
  return rep;
}

}  // namespace hdw
