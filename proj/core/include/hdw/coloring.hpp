#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hdw/param_plan.hpp"
#include "hdw/planar.hpp"
#include "hdw/solver.hpp"

namespace hdw {

/// H_q(P): hypergraph on a planar point set whose edges are the maximal line
/// sections of size >= q. A coloring is proper iff no line carries q points
/// of one color (equivalently: no section of size >= q is monochromatic).
struct LineSectionHypergraph {
  std::vector<PlanarPoint> points;
  int q = 3;
  std::vector<std::vector<int>> edges;  // canonical order, point indices
};

LineSectionHypergraph build_Hq(const std::vector<PlanarPoint>& P, int q);

ChromaticResult hq_chromatic_number(const LineSectionHypergraph& H, std::uint64_t node_budget);

struct GqReport {
  ParameterPlan plan;
  long long n = 0;  // grid side chosen from the size target
  double alpha = 0;
  std::uint64_t seed = 0;
  int sample_size = 0;
  int m = 0;  // |P| = surviving points after deletion + projection
  // color-class-size argument: every class is edge-free, so chi >= m / M
  int M = 0;  // max edge-free subset size
  bool M_exact = false;
  std::vector<std::vector<int>> edges;  // H_q(P) sections, for re-verification
  int chi_pigeonhole = 1;  // ceil(m / M)
  ChromaticResult chi;
  double ideal_log_bound = 0;  // gq_exponent * ln(m): ln of the plan's bound
  bool asymptotics_in_range = false;
};

/// End-to-end chromatic lower-bound run with the k=q, u=q+1 parameter plan,
/// sized so the survivor count lands near m_target.
GqReport gq_lower_pipeline(int q, const Rational& eta, long long m_target, std::uint64_t seed,
                           std::uint64_t node_budget);

struct GreedyTrial {
  int chi_greedy = 1;
  int edges = 0;
};

struct GreedyStats {
  int q = 3;
  long long m = 0;
  std::vector<GreedyTrial> trials;
  double mean_greedy = 0;
  int max_greedy = 0;
  double ideal = 0;           // m^{1/(q-1)}
  double mean_ratio = 0;      // mean_greedy / ideal, reported only
};

/// Greedy chromatic numbers of H_q on random integer point sets of size m.
GreedyStats greedy_upper_experiment(int q, long long m, int trials, std::uint64_t seed);

}  // namespace hdw
