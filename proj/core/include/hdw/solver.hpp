#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hdw/numeric.hpp"

namespace hdw {

enum class SearchStatus {
  Exhausted,       // search space fully explored; result is exact
  TargetReached,   // witness mode: a subset of the requested size was found
  BudgetExceeded,  // best-so-far only
};

struct IndepResult {
  SearchStatus status = SearchStatus::Exhausted;
  int best_size = 0;
  std::vector<int> best_subset;  // sorted point indices
  std::uint64_t nodes = 0;
};

/// Maximum subset of {0..n_points-1} meeting every line in at most q-1
/// points. `lines` lists point indices per line; lines with fewer than q
/// points impose no constraint and are ignored. If target_p > 0 the search
/// stops once a subset of that size is known. Deterministic: include-first
/// DFS in canonical point order.
IndepResult max_line_bounded_subset(int n_points, const std::vector<std::vector<int>>& lines,
                                    int q, int target_p, std::uint64_t node_budget);

struct HittingSetResult {
  bool exact = false;
  std::vector<int> best;  // candidate indices; optimal iff exact
  std::uint64_t nodes = 0;
};

/// Minimum number of candidates covering every line in 0..n_lines-1.
/// `candidates[i]` lists the lines candidate i covers. Every line must be
/// covered by at least one candidate.
HittingSetResult min_hitting_set(int n_lines, const std::vector<std::vector<int>>& candidates,
                                 std::uint64_t node_budget);

/// Greedy cover: repeatedly the candidate covering most uncovered lines
/// (lowest index on ties).
std::vector<int> greedy_hitting_set(int n_lines, const std::vector<std::vector<int>>& candidates);

struct ChromaticResult {
  std::optional<int> exact;
  int greedy_upper = 1;
  int lower = 1;
  std::vector<int> greedy_coloring;  // per point
  std::optional<std::vector<int>> exact_coloring;
  std::uint64_t nodes = 0;
};

/// Chromatic number of the hypergraph whose violation predicate is "some
/// line section holds >= q same-colored points". `sections` lists point
/// indices per maximal section; sections smaller than q are ignored.
ChromaticResult chromatic_number(int n_points, const std::vector<std::vector<int>>& sections,
                                 int q, std::uint64_t node_budget);

/// True iff no section of the given family holds q same-colored points.
bool coloring_is_proper(const std::vector<int>& colors,
                        const std::vector<std::vector<int>>& sections, int q);

}  // namespace hdw
