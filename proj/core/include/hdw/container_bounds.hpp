#pragma once

#include <map>
#include <optional>

#include "hdw/numeric.hpp"

namespace hdw {

struct ContainerParams {
  int r = 3;
  double N = 0;                   // vertex count
  Rational d;                     // average degree
  std::map<int, Rational> delta;  // j -> Delta_j, 2 <= j <= r
  Rational tau;
  Rational epsilon;

  BigInt container_constant() const {  // c(r) = 2000 r (r!)^3
    BigInt f = factorial(static_cast<unsigned>(r));
    return BigInt(2000) * r * f * f * f;
  }
};

/// Delta(H, tau) = 2^{C(r,2)-1} sum_{j=2}^r Delta_j / (d tau^{j-1} 2^{C(j-1,2)}),
/// evaluated exactly in rational arithmetic.
Rational delta_H_tau(const ContainerParams& params);

struct HypothesisCheck {
  Rational tau_value, tau_threshold;       // tau < 1/(200 r (r!)^2)
  Rational delta_value, delta_threshold;   // Delta(H,tau) <= eps/(12 r!)
  bool tau_ok = false;
  bool delta_ok = false;
  bool pass = false;
};

HypothesisCheck check_container_hypotheses(const ContainerParams& params);

/// ln of the container-family size bound, c(r) N tau log(1/eps) log(1/tau).
/// Throws in strict mode when the hypotheses fail.
double container_count_log_bound(const ContainerParams& params, bool formula_only = false);

/// A value reported together with its log depth: depth 0 means `value` is the
/// quantity itself; depth d means `value` is its d-fold natural log.
struct DepthValue {
  double value = 0;
  int log_depth = 0;
};

struct IndepCountBound {
  double log_value;       // ln(bound); +inf when outside double range
  DepthValue reported;    // nested-log form, always finite
};

/// ln of exp(n^{k-s0-(k-k s0)/(r-1)+0.3f}) * C(n^{k-s0+0.1f}, m), n as ln n.
IndepCountBound independent_set_count_log_bound(double log_n, int k, int r, double s0,
                                                double f, double m);

struct ConditionReport {
  double lhs = 0, rhs = 0;
  bool pass = false;
};

struct CountBoundHypotheses {
  ConditionReport cond1;  // s0 <= (k-r+1)/k
  ConditionReport cond2;  // f >= 1e4 loglog n / log n
  ConditionReport cond3;  // k <= 0.001 f log n / loglog n
  bool pass = false;
};

CountBoundHypotheses validate_count_bound_hypotheses(double log_n, int k, int r, double s0, double f);

struct BoundLedger {
  double s0 = 0, f = 0;
  int k = 0;
  double exact_steps = 0;   // ((k+1)(s0-0.1f)+0.02fk)/(0.05fk)
  double steps_cap = 0;     // 40/f
  bool within_cap = false;
};

BoundLedger step_ledger(double s0, double f, int k);

/// The tau exponent used per container round: (k s0 - k)/(r-1) in the
/// extremal round s = s0 - 0.1f, shifted by -(s0 - 0.1f + s) otherwise
/// (implemented verbatim; n_tau_leq_1 flags the regime the surrounding
/// argument needs).
struct TauChoice {
  double exponent = 0;
  bool n_tau_leq_1 = false;
};

TauChoice tau_choice(int k, int r, double s0, double f, double s, bool extremal);

/// Full bound chain for reporting: hypothesis values, epsilon/tau exponents,
/// per-step and total container log-counts, step ledger.
struct BoundChain {
  CountBoundHypotheses hypotheses;
  double epsilon_exponent = 0;        // eps = n^{-0.05 f k}
  TauChoice tau_extremal;
  // Container counts are doubly exponential in n; both fields carry
  // ln(ln(count)), i.e. log depth 2.
  double per_step_log_count = 0;
  double total_log_count = 0;
  BoundLedger ledger;
};

BoundChain container_bound_chain(double log_n, int k, int r, double s0, double f);

}  // namespace hdw
