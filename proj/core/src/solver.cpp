#include "hdw/solver.hpp"

#include <algorithm>
#include <map>

namespace hdw {

namespace {

struct IndepSearch {
  int q;
  int target_p;
  std::uint64_t budget;
  std::vector<std::vector<int>> lines;        // constraining lines only
  std::vector<std::vector<int>> point_lines;  // constrained point -> line ids
  std::vector<int> order;                     // constrained points, canonical
  std::vector<int> free_points;               // on no constraining line
  std::vector<int> counts;                    // per line, current selection
  std::vector<int> current;
  std::vector<int> best;
  std::uint64_t nodes = 0;
  bool aborted = false;
  bool target_hit = false;

  // Lower bound on the number of points among order[idx..] that any feasible
  // extension must drop: greedy over lines, counting each point once.
  int forced_drops(std::size_t idx, std::vector<char>& scratch) {
    std::fill(scratch.begin(), scratch.end(), 0);
    for (std::size_t i = idx; i < order.size(); ++i) scratch[order[i]] = 1;
    int drops = 0;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      int slack = (q - 1) - counts[l];
      int rem = 0;
      for (int p : lines[l])
        if (scratch[p]) ++rem;
      if (rem > slack) {
        drops += rem - slack;
        for (int p : lines[l]) scratch[p] = 0;  // consume, keep lines disjoint
      }
    }
    return drops;
  }

  void record_best() {
    if (static_cast<int>(current.size()) + static_cast<int>(free_points.size()) >
        static_cast<int>(best.size())) {
      best = current;
      best.insert(best.end(), free_points.begin(), free_points.end());
      if (target_p > 0 && static_cast<int>(best.size()) >= target_p) target_hit = true;
    }
  }

  void dfs(std::size_t idx, std::vector<char>& scratch) {
    if (aborted || target_hit) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    record_best();
    if (idx == order.size()) return;
    int remaining = static_cast<int>(order.size() - idx);
    int ub = static_cast<int>(current.size()) + remaining + static_cast<int>(free_points.size());
    if (ub <= static_cast<int>(best.size())) return;
    if (ub - forced_drops(idx, scratch) <= static_cast<int>(best.size())) return;

    int p = order[idx];
    bool can_include = true;
    for (int l : point_lines[p])
      if (counts[l] + 1 > q - 1) {
        can_include = false;
        break;
      }
    if (can_include) {
      for (int l : point_lines[p]) ++counts[l];
      current.push_back(p);
      dfs(idx + 1, scratch);
      current.pop_back();
      for (int l : point_lines[p]) --counts[l];
    }
    if (aborted || target_hit) return;
    dfs(idx + 1, scratch);
  }
};

}  // namespace

IndepResult max_line_bounded_subset(int n_points, const std::vector<std::vector<int>>& all_lines,
                                    int q, int target_p, std::uint64_t node_budget) {
  if (q < 2) throw domain_error("max_line_bounded_subset: q >= 2 required");
  IndepSearch s;
  s.q = q;
  s.target_p = target_p;
  s.budget = node_budget;
  for (const auto& line : all_lines)
    if (static_cast<int>(line.size()) >= q) s.lines.push_back(line);
  s.point_lines.assign(n_points, {});
  for (std::size_t l = 0; l < s.lines.size(); ++l)
    for (int p : s.lines[l]) s.point_lines[p].push_back(static_cast<int>(l));
  for (int p = 0; p < n_points; ++p)
    (s.point_lines[p].empty() ? s.free_points : s.order).push_back(p);
  s.counts.assign(s.lines.size(), 0);
  std::vector<char> scratch(n_points, 0);
  s.dfs(0, scratch);

  IndepResult res;
  res.nodes = s.nodes;
  res.best_subset = s.best;
  std::sort(res.best_subset.begin(), res.best_subset.end());
  res.best_size = static_cast<int>(res.best_subset.size());
  if (s.target_hit)
    res.status = SearchStatus::TargetReached;
  else if (s.aborted)
    res.status = SearchStatus::BudgetExceeded;
  else
    res.status = SearchStatus::Exhausted;
  return res;
}

std::vector<int> greedy_hitting_set(int n_lines, const std::vector<std::vector<int>>& candidates) {
  std::vector<char> covered(n_lines, 0);
  int uncovered = n_lines;
  std::vector<int> picked;
  while (uncovered > 0) {
    int best_c = -1, best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      int gain = 0;
      for (int l : candidates[c])
        if (!covered[l]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best_c = static_cast<int>(c);
      }
    }
    if (best_c < 0) throw domain_error("greedy_hitting_set: uncoverable line");
    picked.push_back(best_c);
    for (int l : candidates[best_c])
      if (!covered[l]) {
        covered[l] = 1;
        --uncovered;
      }
  }
  return picked;
}

namespace {

struct HitSearch {
  const std::vector<std::vector<int>>* candidates;
  std::vector<std::vector<int>> line_candidates;  // line -> candidates covering it
  std::vector<int> cover_count;                   // per line
  int uncovered = 0;
  int max_cover = 1;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::vector<int> current, best;

  void dfs() {
    if (aborted) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (uncovered == 0) {
      if (current.size() < best.size()) best = current;
      return;
    }
    int lb = static_cast<int>(current.size()) + (uncovered + max_cover - 1) / max_cover;
    if (lb >= static_cast<int>(best.size())) return;
    // branch on the uncovered line with fewest candidates
    int pick = -1;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t l = 0; l < line_candidates.size(); ++l)
      if (cover_count[l] == 0 && line_candidates[l].size() < fewest) {
        fewest = line_candidates[l].size();
        pick = static_cast<int>(l);
      }
    for (int c : line_candidates[pick]) {
      current.push_back(c);
      for (int l : (*candidates)[c])
        if (cover_count[l]++ == 0) --uncovered;
      dfs();
      for (int l : (*candidates)[c])
        if (--cover_count[l] == 0) ++uncovered;
      current.pop_back();
      if (aborted) return;
    }
  }
};

}  // namespace

HittingSetResult min_hitting_set(int n_lines, const std::vector<std::vector<int>>& candidates,
                                 std::uint64_t node_budget) {
  HitSearch s;
  s.candidates = &candidates;
  s.line_candidates.assign(n_lines, {});
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    s.max_cover = std::max(s.max_cover, static_cast<int>(candidates[c].size()));
    for (int l : candidates[c]) s.line_candidates[l].push_back(static_cast<int>(c));
  }
  for (const auto& lc : s.line_candidates)
    if (lc.empty()) throw domain_error("min_hitting_set: uncoverable line");
  s.cover_count.assign(n_lines, 0);
  s.uncovered = n_lines;
  s.budget = node_budget;
  s.best = greedy_hitting_set(n_lines, candidates);
  s.dfs();

  HittingSetResult res;
  res.exact = !s.aborted;
  res.best = s.best;
  std::sort(res.best.begin(), res.best.end());
  res.nodes = s.nodes;
  return res;
}

bool coloring_is_proper(const std::vector<int>& colors,
                        const std::vector<std::vector<int>>& sections, int q) {
  for (const auto& sec : sections) {
    if (static_cast<int>(sec.size()) < q) continue;
    std::map<int, int> tally;
    for (int p : sec)
      if (++tally[colors[p]] >= q) return false;
  }
  return true;
}

namespace {

struct ColorSearch {
  int q;
  int n_colors;
  std::vector<std::vector<int>> sections;
  std::vector<std::vector<int>> point_sections;
  std::vector<int> order;  // constrained points
  std::vector<std::vector<int>> counts;  // section x color
  std::vector<int> assignment;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool aborted = false;

  bool dfs(std::size_t idx, int used) {
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
    if (idx == order.size()) return true;
    int p = order[idx];
    int limit = std::min(n_colors, used + 1);  // symmetry breaking
    for (int col = 0; col < limit; ++col) {
      bool ok = true;
      for (int s : point_sections[p])
        if (counts[s][col] + 1 > q - 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int s : point_sections[p]) ++counts[s][col];
      assignment[p] = col;
      if (dfs(idx + 1, std::max(used, col + 1))) return true;
      for (int s : point_sections[p]) --counts[s][col];
      if (aborted) return false;
    }
    return false;
  }
};

}  // namespace

ChromaticResult chromatic_number(int n_points, const std::vector<std::vector<int>>& all_sections,
                                 int q, std::uint64_t node_budget) {
  if (q < 2) throw domain_error("chromatic_number: q >= 2 required");
  std::vector<std::vector<int>> sections;
  for (const auto& s : all_sections)
    if (static_cast<int>(s.size()) >= q) sections.push_back(s);

  ChromaticResult res;
  res.lower = sections.empty() ? 1 : 2;

  // greedy, canonical point order
  std::vector<std::vector<int>> point_sections(n_points);
  for (std::size_t s = 0; s < sections.size(); ++s)
    for (int p : sections[s]) point_sections[p].push_back(static_cast<int>(s));
  res.greedy_coloring.assign(n_points, 0);
  std::vector<std::map<int, int>> tallies(sections.size());
  int greedy_max = 0;
  for (int p = 0; p < n_points; ++p) {
    int col = 0;
    while (true) {
      bool ok = true;
      for (int s : point_sections[p])
        if (tallies[s][col] + 1 > q - 1) {
          ok = false;
          break;
        }
      if (ok) break;
      ++col;
    }
    res.greedy_coloring[p] = col;
    greedy_max = std::max(greedy_max, col + 1);
    for (int s : point_sections[p]) ++tallies[s][col];
  }
  res.greedy_upper = greedy_max;

  if (sections.empty()) {
    res.exact = 1;
    res.exact_coloring = std::vector<int>(n_points, 0);
    return res;
  }

  for (int c = res.lower; c <= res.greedy_upper; ++c) {
    ColorSearch cs;
    cs.q = q;
    cs.n_colors = c;
    cs.sections = sections;
    cs.point_sections = point_sections;
    for (int p = 0; p < n_points; ++p)
      if (!point_sections[p].empty()) cs.order.push_back(p);
    cs.counts.assign(sections.size(), std::vector<int>(c, 0));
    cs.assignment.assign(n_points, 0);
    cs.budget = node_budget;
    bool feasible = cs.dfs(0, 0);
    res.nodes += cs.nodes;
    if (cs.aborted) return res;  // exact omitted
    if (feasible) {
      res.exact = c;
      res.exact_coloring = cs.assignment;
      return res;
    }
  }
  res.exact = res.greedy_upper;
  res.exact_coloring = res.greedy_coloring;
  return res;
}

}  // namespace hdw
