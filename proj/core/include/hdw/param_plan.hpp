#pragma once

#include <utility>
#include <vector>

#include "hdw/numeric.hpp"

namespace hdw {

/// The full parameter choice for a given (q, eta): grid dimension k,
/// container cutoff s0, sampling and size exponents, error term f, collinear
/// cap u, and the resulting target exponent. Exact rationals throughout;
/// only the feasibility threshold is floating point (it is a log).
struct ParameterPlan {
  int q = 3;
  Rational eta;
  bool coloring = false;
  int k = 0;
  int u = 0;
  Rational s0;
  Rational f;
  Rational beta_boundary;  // (k - k s0)/(q - 1)
  Rational alpha_exp;      // alpha = n^{alpha_exp}
  Rational p_exp;          // p = n^{p_exp}
  Rational T_plan;         // realized target with the f error term
  Rational T_floor;        // asymptotic floor, 1 + (1-eta)/(4q-7) (or coloring variant)
  Rational gq_exponent;    // coloring only: (1-eta)/(q^2-q-eta)
  double log_n_min = 0;    // ln of the asymptotic feasibility threshold
                           // (for coloring plans this is ln m_min)
};

/// T(k, q) = 1 + ((k-q+1)/k) / (k - (k-q+1)/k - 1), exact.
Rational target_T(int k, int q);

/// The section-3.4 variant (k - k/q) / (k - (k-q+1)/k - 1).
Rational coloring_target(int k, int q);

struct SweepResult {
  std::vector<int> argmax;
  Rational max_value;
  bool unimodal = false;  // increasing then decreasing across the scanned range
  std::vector<std::pair<int, Rational>> values;
};

/// Scans T(k, q) over integer k in [k_lo, k_hi] (domain-valid k only).
SweepResult sweep_k(int q, int k_lo, int k_hi);

ParameterPlan choose_parameters(int q, const Rational& eta);

/// k = q, u = q+1 variant used for the chromatic-number bound.
ParameterPlan coloring_plan(int q, const Rational& eta);

struct BetaCheck {
  bool feasible = false;
  Rational boundary;  // (k - k s0)/(q - 1)
};

BetaCheck beta_feasible(int k, int q, const Rational& s0, const Rational& beta);

struct MarginSweepRow {
  Rational s0;
  Rational p_exp;          // clamped to at least the boundary-case exponent
  Rational capped_target;  // (k-1)/p_exp
  Rational margin;         // boundary target - capped target
};

struct MarginSweepReport {
  int k = 0;
  Rational boundary_target;
  std::vector<MarginSweepRow> rows;
  bool all_margins_nonnegative = false;
  bool u_cap_holds = false;  // u/(4(u-1)) <= 1 for every scanned u >= 2
};

MarginSweepReport margin_sweep(int q, const Rational& eta, const std::vector<Rational>& s0_grid,
                                const std::vector<int>& u_grid);

}  // namespace hdw
