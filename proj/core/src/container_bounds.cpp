#include "hdw/container_bounds.hpp"

#include <cmath>

namespace hdw {

namespace {

Rational rational_pow(const Rational& base, unsigned e) {
  Rational v = 1;
  for (unsigned i = 0; i < e; ++i) v *= base;
  return v;
}

unsigned choose2(int m) { return m < 2 ? 0u : static_cast<unsigned>(m) * (m - 1) / 2; }

}  // namespace

Rational delta_H_tau(const ContainerParams& params) {
  if (params.d <= 0) throw domain_error("delta_H_tau: average degree must be positive");
  if (params.tau <= 0 || params.tau >= 1) throw domain_error("delta_H_tau: tau in (0,1)");
  Rational sum = 0;
  for (int j = 2; j <= params.r; ++j) {
    auto it = params.delta.find(j);
    Rational dj = it == params.delta.end() ? Rational(0) : it->second;
    Rational denom = params.d * rational_pow(params.tau, static_cast<unsigned>(j - 1)) *
                     Rational(ipow(BigInt(2), choose2(j - 1)));
    sum += dj / denom;
  }
  return Rational(ipow(BigInt(2), choose2(params.r) - 1)) * sum;
}

HypothesisCheck check_container_hypotheses(const ContainerParams& params) {
  HypothesisCheck h;
  BigInt rfact = factorial(static_cast<unsigned>(params.r));
  h.tau_value = params.tau;
  h.tau_threshold = Rational(1, BigInt(200) * params.r * rfact * rfact);
  h.tau_ok = params.tau < h.tau_threshold;
  h.delta_value = delta_H_tau(params);
  h.delta_threshold = params.epsilon / Rational(BigInt(12) * rfact);
  h.delta_ok = h.delta_value <= h.delta_threshold;
  h.pass = h.tau_ok && h.delta_ok;
  return h;
}

double container_count_log_bound(const ContainerParams& params, bool formula_only) {
  if (!formula_only && !check_container_hypotheses(params).pass)
    throw domain_error("container_count_log_bound: hypotheses fail (use formula-only mode)");
  double tau = static_cast<double>(params.tau);
  double eps = static_cast<double>(params.epsilon);
  return static_cast<double>(params.container_constant()) * params.N * tau *
         std::log(1.0 / eps) * std::log(1.0 / tau);
}

IndepCountBound independent_set_count_log_bound(double log_n, int k, int r, double s0,
                                                double f, double m) {
  if (m < 0) throw domain_error("independent_set_count_log_bound: m >= 0 required");
  double e1 = k - s0 - (k - k * s0) / (r - 1) + 0.3 * f;
  double e2 = k - s0 + 0.1 * f;
  double log_term1 = e1 * log_n;                        // ln of exp-term's exponent
  double log_binom = log_binomial_from_logs(e2 * log_n, m);
  IndepCountBound out;
  SignedLog ln_bound = slog_add(SignedLog::from_log(log_term1), SignedLog::from_value(log_binom));
  out.log_value = ln_bound.to_double();
  if (std::isfinite(out.log_value) && std::abs(out.log_value) < 1e15) {
    out.reported = {out.log_value, 1};
  } else {
    out.reported = {ln_bound.log_abs, 2};
  }
  return out;
}

CountBoundHypotheses validate_count_bound_hypotheses(double log_n, int k, int r, double s0, double f) {
  if (!(log_n > 1.0))
    throw domain_error("validate_count_bound_hypotheses: need n > e (log log n > 0)");
  CountBoundHypotheses rep;
  rep.cond1 = {s0, static_cast<double>(k - r + 1) / k, false};
  rep.cond1.pass = rep.cond1.lhs <= rep.cond1.rhs;
  double loglog = std::log(log_n);
  rep.cond2 = {f, 1e4 * loglog / log_n, false};
  rep.cond2.pass = rep.cond2.lhs >= rep.cond2.rhs;
  rep.cond3 = {static_cast<double>(k), 0.001 * f * log_n / loglog, false};
  rep.cond3.pass = rep.cond3.lhs <= rep.cond3.rhs;
  rep.pass = rep.cond1.pass && rep.cond2.pass && rep.cond3.pass;
  return rep;
}

BoundLedger step_ledger(double s0, double f, int k) {
  if (f <= 0) throw domain_error("step_ledger: f > 0 required");
  BoundLedger l;
  l.s0 = s0;
  l.f = f;
  l.k = k;
  l.exact_steps = ((2 * k + 0.01 * f * k) - (2 * k - (k + 1) * (s0 - 0.1 * f) - 0.01 * f * k)) /
                  (0.05 * f * k);
  l.steps_cap = 40.0 / f;
  l.within_cap = l.exact_steps <= l.steps_cap * (1 + 1e-12);
  return l;
}

TauChoice tau_choice(int k, int r, double s0, double f, double s, bool extremal) {
  TauChoice t;
  t.exponent = (k * s0 - k) / (r - 1);
  if (!extremal) t.exponent -= (s0 - 0.1 * f + s);
  t.n_tau_leq_1 = 1.0 + t.exponent <= 1e-12;  // n * n^exp <= 1  <=>  exp <= -1
  return t;
}

BoundChain container_bound_chain(double log_n, int k, int r, double s0, double f) {
  BoundChain c;
  c.hypotheses = validate_count_bound_hypotheses(log_n, k, r, s0, f);
  c.epsilon_exponent = -0.05 * f * k;
  c.tau_extremal = tau_choice(k, r, s0, f, s0 - 0.1 * f, true);
  double per_step_exp = k - s0 - (k - k * s0) / (r - 1) + 0.2 * f;
  double total_exp = k - s0 - (k - k * s0) / (r - 1) + 0.3 * f;
  c.per_step_log_count = per_step_exp * log_n;  // ln ln of the per-step count
  c.total_log_count = total_exp * log_n;
  c.ledger = step_ledger(s0, f, k);
  return c;
}

}  // namespace hdw
