#include "hdw/planar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace hdw {

namespace {

std::uint64_t hash_points(const std::vector<Point>& S) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  for (const auto& p : S) {
    mix(p.size());
    for (Coord c : p) mix(static_cast<std::uint64_t>(c));
  }
  return h;
}

PlanarPoint apply_map(const Point& p, const std::vector<Coord>& a, const std::vector<Coord>& b) {
  BigInt x = 0, y = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    x += BigInt(a[i]) * p[i];
    y += BigInt(b[i]) * p[i];
  }
  return {x, y};
}

bool triples_match(const std::vector<Point>& S, const std::vector<PlanarPoint>& img, int i,
                   int j, int l) {
  std::vector<Point> t{S[i], S[j], S[l]};
  bool src = is_collinear(t);
  bool dst = planar_collinear(img[i], img[j], img[l]);
  return src == dst;
}

}  // namespace

PlanarPointSet project_to_plane(const std::vector<Point>& S, std::uint64_t seed) {
  if (S.empty()) throw domain_error("project_to_plane: nonempty set required");
  const std::size_t k = S[0].size();
  for (const auto& p : S)
    if (p.size() != k) throw domain_error("project_to_plane: mixed dimensions");
  {
    std::set<Point> dedup(S.begin(), S.end());
    if (dedup.size() != S.size()) throw domain_error("project_to_plane: duplicate points");
  }
  const int n = static_cast<int>(S.size());
  const bool exhaustive = n <= 60;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> coeff(1, 1'000'003);

  const int max_attempts = 64;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<Coord> a(k), b(k);
    if (attempt == 1 && k == 2) {
      a = {1, 0};  // identity-like first try for already-planar sets
      b = {0, 1};
    } else {
      for (auto& c : a) c = coeff(rng);
      for (auto& c : b) c = coeff(rng);
    }
    std::vector<PlanarPoint> img;
    img.reserve(S.size());
    for (const auto& p : S) img.push_back(apply_map(p, a, b));

    bool ok = true;
    {
      std::set<BigInt> xs;
      std::set<PlanarPoint> pts;
      for (const auto& q : img) {
        if (!xs.insert(q.x).second || !pts.insert(q).second) {
          ok = false;
          break;
        }
      }
    }
    if (ok && n >= 3) {
      if (exhaustive) {
        for (int i = 0; ok && i < n; ++i)
          for (int j = i + 1; ok && j < n; ++j)
            for (int l = j + 1; ok && l < n; ++l)
              if (!triples_match(S, img, i, j, l)) ok = false;
      } else {
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; ok && t < 20000; ++t) {
          int i = pick(rng), j = pick(rng), l = pick(rng);
          if (i == j || j == l || i == l) continue;
          if (!triples_match(S, img, i, j, l)) ok = false;
        }
      }
    }
    if (ok) {
      PlanarPointSet out;
      out.points = std::move(img);
      out.coeff_x = std::move(a);
      out.coeff_y = std::move(b);
      out.source_hash = hash_points(S);
      out.attempts = attempt;
      out.triple_check_exhaustive = exhaustive;
      return out;
    }
  }
  throw resource_limit_error("project_to_plane: retry cap exhausted");
}

LineFamily dualize(const PlanarPointSet& image) {
  std::set<BigInt> xs;
  for (const auto& p : image.points)
    if (!xs.insert(p.x).second)
      throw domain_error("dualize: shared x-coordinate; re-project first");
  LineFamily F;
  F.lines.reserve(image.points.size());
  for (const auto& p : image.points)
    F.lines.push_back({Rational(p.x), Rational(p.y)});  // y = p.x * x - p.y
  return F;
}

namespace {

/// Groups line indices by common intersection point; only points on >= 2
/// lines appear. Parallel lines of a duplicate-free family never meet.
std::map<RatPoint, std::vector<int>> concurrency_classes(const LineFamily& F) {
  std::map<RatPoint, std::vector<int>> classes;
  const int n = static_cast<int>(F.lines.size());
  std::map<RatPoint, std::set<int>> seen;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (F.lines[i].slope == F.lines[j].slope) continue;
      RatPoint pt = intersect(F.lines[i], F.lines[j]);
      auto& s = seen[pt];
      s.insert(i);
      s.insert(j);
    }
  for (auto& [pt, s] : seen) classes.emplace(pt, std::vector<int>(s.begin(), s.end()));
  return classes;
}

}  // namespace

PqResult verify_pq_property(const LineFamily& F, int p, int q, std::uint64_t node_budget) {
  if (q < 3 || p < q) throw domain_error("verify_pq_property: p >= q >= 3 required");
  std::vector<std::vector<int>> bundles;
  for (auto& [pt, members] : concurrency_classes(F)) bundles.push_back(members);
  IndepResult r =
      max_line_bounded_subset(static_cast<int>(F.lines.size()), bundles, q, p, node_budget);
  PqResult out;
  out.nodes = r.nodes;
  out.exhausted = r.status == SearchStatus::Exhausted;
  out.max_no_q_concurrent = r.best_size;
  if (r.best_size >= p) {
    out.verdict = Verdict::Refuted;
    out.witness.assign(r.best_subset.begin(), r.best_subset.begin() + p);
  } else if (out.exhausted) {
    out.verdict = Verdict::Proved;
  } else {
    out.verdict = Verdict::Unknown;
  }
  return out;
}

PiercingResult piercing_number(const LineFamily& F, std::uint64_t node_budget) {
  const int n = static_cast<int>(F.lines.size());
  if (n == 0) throw domain_error("piercing_number: nonempty family required");
  {
    std::set<PlanarLine> dedup(F.lines.begin(), F.lines.end());
    if (static_cast<int>(dedup.size()) != n)
      throw domain_error("piercing_number: duplicate lines");
  }
  auto classes = concurrency_classes(F);
  std::vector<RatPoint> candidate_points;
  std::vector<std::vector<int>> covers;
  std::vector<char> met(n, 0);
  for (auto& [pt, members] : classes) {
    candidate_points.push_back(pt);
    covers.push_back(members);
    for (int i : members) met[i] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!met[i]) {  // meets no other line: needs a private point
      candidate_points.push_back({Rational(0), F.lines[i].y_at(Rational(0))});
      covers.push_back({i});
    }

  PiercingResult out;
  out.max_concurrency = 1;
  for (const auto& c : covers)
    out.max_concurrency = std::max(out.max_concurrency, static_cast<int>(c.size()));
  out.lower = Rational(n, out.max_concurrency);

  std::vector<int> greedy = greedy_hitting_set(n, covers);
  out.greedy_upper = static_cast<int>(greedy.size());
  for (int i : greedy) out.greedy_points.push_back(candidate_points[i]);

  HittingSetResult hs = min_hitting_set(n, covers, node_budget);
  out.nodes = hs.nodes;
  if (hs.exact) {
    out.exact = static_cast<int>(hs.best.size());
    for (int i : hs.best) out.exact_points.push_back(candidate_points[i]);
  }
  return out;
}

std::vector<std::pair<int, long long>> concurrency_histogram(const LineFamily& F) {
  std::map<int, long long> hist;
  for (auto& [pt, members] : concurrency_classes(F)) hist[static_cast<int>(members.size())]++;
  return {hist.begin(), hist.end()};
}

PiercingCertificate emit_certificate(const RandomSubsetRun& run, const ParameterPlan& plan,
                                     std::uint64_t node_budget) {
  if (run.survivors.empty()) throw domain_error("emit_certificate: empty survivor set");
  PiercingCertificate cert;
  cert.seed = run.seed;
  cert.plan = plan;
  cert.n = run.grid.n;
  cert.alpha = run.alpha;
  cert.survivors = static_cast<int>(run.survivors.size());

  cert.image = project_to_plane(run.survivors, run.seed ^ 0x9e3779b97f4a7c15ULL);
  cert.family = dualize(cert.image);

  // Realized p: the exact engine on the primal points; p = M + 1 makes the
  // (p,q) property hold by construction once the search exhausts.
  IndependentSetOutcome indep = find_independent_set(run.survivors, plan.q, 0, node_budget);
  if (indep.status == SearchStatus::Exhausted) {
    cert.p = indep.best_size + 1;
    if (*cert.p >= plan.q) {
      cert.pq = verify_pq_property(cert.family, *cert.p, plan.q, node_budget);
    } else {  // p exceeds |F|: the property is vacuous
      cert.pq.verdict = Verdict::Proved;
      cert.pq.exhausted = true;
      cert.pq.max_no_q_concurrent = indep.best_size;
    }
  } else {
    cert.pq.verdict = Verdict::Unknown;
    cert.pq.max_no_q_concurrent = indep.best_size;
  }

  cert.piercing = piercing_number(cert.family, node_budget);
  cert.piercing_lower_u = Rational(static_cast<int>(cert.family.lines.size()), plan.u - 1);

  if (cert.p && *cert.p > 1) {
    double ratio = static_cast<double>(cert.family.lines.size()) / (plan.u - 1);
    if (ratio > 1) cert.realized_T = std::log(ratio) / std::log(static_cast<double>(*cert.p));
  }
  cert.asymptotics_in_range = std::log(static_cast<double>(run.grid.n)) >= plan.log_n_min;
  return cert;
}

}  // namespace hdw
