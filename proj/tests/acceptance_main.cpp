// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] must be the path to the hdw CLI binary (used by the
// rerun-determinism criterion).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hdw/coloring.hpp"
#include "hdw/container_bounds.hpp"
#include "hdw/json_io.hpp"
#include "hdw/param_plan.hpp"
#include "hdw/planar.hpp"
#include "hdw/randcon.hpp"
#include "hdw/supersat.hpp"
#include "oracles.hpp"

using namespace hdw;

namespace {

int failures = 0;

void report(const std::string& name, bool pass) {
  std::cout << (pass ? "PASS" : "FAIL") << " — " << name << "\n";
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool approx(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

// --------------------------------------------------------------------------

bool oracle_equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  for (int k = 1; k <= 3; ++k)
    for (long long n = 1; n <= 5; ++n)
      for (int r : {3, 4}) {
        GridSpec g(n, k);
        auto pts = grid_points(g);
        if (count_collinear_tuples(g, r) !=
            testing::brute_force_collinear_tuples(pts, r))
          return false;
      }
  return seconds_since(t0) < 60.0;
}

bool bound_dominance() {
  auto t0 = std::chrono::steady_clock::now();
  for (int k = 2; k <= 3; ++k)
    for (long long n = 1; n <= 5; ++n)
      for (int r : {3, 4}) {
        if (n < std::max<long long>(k, r)) continue;
        GridSpec g(n, k);
        double exact = static_cast<double>(count_collinear_tuples(g, r));
        if (!(exact <= hyperedge_count_bound(n, k, r))) return false;
      }
  double anchor = hyperedge_count_bound(3, 2, 3);
  if (!(static_cast<double>(count_collinear_tuples(GridSpec(3, 2), 3)) == 8.0)) return false;
  if (!(8.0 <= anchor && approx(anchor, 949.2, 1e-3))) return false;
  return seconds_since(t0) < 60.0;
}

bool line_family_subclaims() {
  auto t0 = std::chrono::steady_clock::now();
  struct Cfg {
    long long n;
    int k;
    long long t;
  };
  // each override leaves a single prime in [n/t, 2n/t], the regime where the
  // family's lines are provably pairwise distinct across directions
  const std::vector<Cfg> configs{{11, 2, 5}, {16, 2, 7}, {32, 2, 14},
                                 {11, 3, 5}, {16, 3, 7}, {32, 3, 14}};
  int incidence_runs = 0;
  for (const Cfg& cfg : configs) {
    GridSpec g(cfg.n, cfg.k);
    auto c = SupersatConfig::make(g, 3, 0.0, Rational(cfg.t));
    auto fam = build_line_family(c);
    if (fam.size_V == 0) return false;

    // (a) lines from distinct directions never coincide (exhaustive)
    std::set<LineKey> seen;
    Point shifted(cfg.k);
    for (const auto& v : fam.directions) {
      std::set<LineKey> mine;
      for (const auto& u : fam.anchors) {
        for (int j = 0; j < cfg.k; ++j) shifted[j] = u[j] + v[j];
        mine.insert(line_key(u, shifted));
      }
      for (const auto& key : mine)
        if (!seen.insert(key).second) return false;
    }
    if (BigInt(static_cast<long long>(seen.size())) != fam.size_L) return false;

    // (b) every grid point lies on >= |V| family lines
    auto cov = verify_point_coverage(fam, g);
    if (!cov.covered || BigInt(cov.min_count) < fam.size_V) return false;

    // (c) incidence floor |S| * |V| for seeded subsets
    auto pts = grid_points(g);
    for (int trial = 0; trial < 17; ++trial) {
      std::mt19937_64 rng(1000 * cfg.n + 10 * cfg.k + static_cast<std::uint64_t>(trial));
      std::vector<Point> S;
      for (const auto& p : pts)
        if (rng() % 3 == 0) S.push_back(p);
      if (incidence_count(S, fam, g) < BigInt(static_cast<long long>(S.size())) * fam.size_V)
        return false;
      ++incidence_runs;
    }
  }
  return incidence_runs >= 100 && seconds_since(t0) < 120.0;
}

bool container_arithmetic() {
  ContainerParams p;
  p.r = 3;
  p.d = Rational(8, 3);
  p.delta = {{2, Rational(1)}, {3, Rational(1)}};
  p.tau = Rational(1, 2);
  p.epsilon = Rational(1, 100);
  if (!approx(static_cast<double>(delta_H_tau(p)), 6.0, 1e-12)) return false;
  auto h = check_container_hypotheses(p);
  if (std::abs(static_cast<double>(h.tau_threshold) - 1.0 / 21600) > 1e-15) return false;
  if (std::abs(static_cast<double>(h.delta_threshold) - 1.0 / 7200) > 1e-15) return false;

  // 10^3-point (s0, f, k) grid: the round count stays under 40/f
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int kk = 0; kk < 10; ++kk) {
        double s0 = 0.05 + 0.09 * i;
        double f = 0.01 + 0.01 * j;
        int k = 2 + kk;
        if (!step_ledger(s0, f, k).within_cap) return false;
      }

  // the sparse-regime hypotheses fail at n = 10^6 and the report says so
  auto rep = validate_count_bound_hypotheses(std::log(1e6), 4, 3, 0.5, 0.025);
  if (rep.pass || !rep.cond1.pass || rep.cond2.pass || rep.cond3.pass) return false;
  if (!(std::isfinite(rep.cond2.rhs) && std::isfinite(rep.cond3.rhs))) return false;
  return true;
}

bool optimizer_certification() {
  auto t0 = std::chrono::steady_clock::now();
  for (int q = 3; q <= 50; ++q) {
    auto res = sweep_k(q, q - 1, 4 * q);
    if (res.argmax != std::vector<int>{2 * q - 3, 2 * q - 2}) return false;
    if (res.max_value != 1 + Rational(1, 4 * q - 7)) return false;
  }
  auto plan = choose_parameters(3, Rational(2, 5));
  if (plan.k != 4 || plan.u != 5) return false;
  if (plan.s0 != Rational(1, 2) || plan.f != Rational(1, 30)) return false;
  if (plan.alpha_exp != Rational(-31, 30) || plan.p_exp != Rational(38, 15)) return false;
  if (plan.T_plan != Rational(7, 6) || plan.T_floor != Rational(28, 25)) return false;

  for (int q : {3, 4, 5}) {
    int k = 2 * q - 2;
    Rational lo(k - q + 1, k);
    std::vector<Rational> grid;
    for (int i = 1; i <= 200; ++i)
      grid.push_back(lo + (Rational(9, 10) - lo) * Rational(i, 200));
    auto rep = margin_sweep(q, Rational(2, 5), grid, {2, 3, 5, 9, 20});
    if (!rep.all_margins_nonnegative || !rep.u_cap_holds) return false;
    if (rep.boundary_target != 1 + Rational(1, 4 * q - 7)) return false;
  }
  return seconds_since(t0) < 10.0;
}

bool duality_bijection() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<Coord> coord(-9, 9);
    std::set<Point> uniq;
    int target = 4 + static_cast<int>(rng() % 37);  // 4..40 points
    while (static_cast<int>(uniq.size()) < target)
      uniq.insert(Point{coord(rng), coord(rng)});
    std::vector<Point> S(uniq.begin(), uniq.end());

    auto img = project_to_plane(S, rng());  // shears until x-coordinates split
    auto F = dualize(img);

    // maximal collinear groups of the image, as sorted index sets
    std::set<std::vector<int>> primal;
    for (const auto& [key, members] : group_planar_lines(img.points))
      primal.insert(members);

    // maximal concurrent bundles of the dual, grouped exhaustively by the
    // exact intersection point of every line pair
    std::map<RatPoint, std::set<int>> classes;
    const int m = static_cast<int>(F.lines.size());
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        if (F.lines[i].slope == F.lines[j].slope) continue;
        auto& cls = classes[intersect(F.lines[i], F.lines[j])];
        cls.insert(i);
        cls.insert(j);
      }
    std::set<std::vector<int>> dual;
    for (const auto& [pt, members] : classes)
      dual.insert(std::vector<int>(members.begin(), members.end()));

    if (primal != dual) return false;
  }
  return seconds_since(t0) < 60.0;
}

bool piercing_solver() {
  auto t0 = std::chrono::steady_clock::now();
  auto sandwich = [](const PiercingResult& r) {
    return !r.exact || (Rational(*r.exact) >= r.lower && *r.exact <= r.greedy_upper);
  };

  // four pairwise non-parallel lines, no three concurrent
  PlanarPointSet generic;
  generic.points = {{0, 0}, {1, 0}, {2, 1}, {3, 3}};
  auto F1 = dualize(generic);
  auto r1 = piercing_number(F1, 10'000'000);
  if (!r1.exact || *r1.exact != 2 || !sandwich(r1)) return false;

  // q concurrent lines need a single point
  for (int q : {3, 5, 8}) {
    PlanarPointSet col;
    for (int i = 1; i <= q; ++i) col.points.push_back({i, 2 * i});
    auto F = dualize(col);
    auto r = piercing_number(F, 10'000'000);
    if (!r.exact || *r.exact != 1 || r.max_concurrency != q || !sandwich(r)) return false;
  }

  // dual of the full 3x3 grid
  auto img = project_to_plane(grid_points(GridSpec(3, 2)), 5);
  auto F3 = dualize(img);
  auto r3 = piercing_number(F3, 100'000'000);
  if (r3.lower != Rational(3)) return false;
  if (!r3.exact || *r3.exact < 3 || !sandwich(r3)) return false;
  return seconds_since(t0) < 30.0;
}

bool end_to_end_certificate() {
  auto t0 = std::chrono::steady_clock::now();
  auto plan = choose_parameters(3, Rational(2, 5));  // k = 4, u = 5
  if (plan.k != 4) return false;
  const long long n = 6;
  double alpha = std::min(
      1.0, std::pow(static_cast<double>(n), static_cast<double>(plan.alpha_exp)));
  auto run = make_run(GridSpec(n, plan.k), alpha, plan.u, 12345);
  if (!verify_no_u_collinear(run.survivors, plan.u)) return false;
  if (run.sample.size() != run.survivors.size() + run.deleted.size()) return false;

  auto cert = emit_certificate(run, plan, 3'000'000);
  std::cout << "  info: |F| = " << cert.family.lines.size() << ", u = " << plan.u
            << ", floor |F|/(u-1) = " << cert.piercing_lower_u << "\n";

  // every stage verdict is proved/true or explicitly unknown
  if (cert.pq.verdict == Verdict::Refuted) return false;
  if (cert.p) {
    std::cout << "  info: realized p = " << *cert.p << " (search exhausted)\n";
  } else {
    std::cout << "  info: realized p unknown (search budget exceeded at best "
              << cert.pq.max_no_q_concurrent << ")\n";
  }
  if (cert.piercing.exact) {
    // exact piercing count respects the ceil(|F|/(u-1)) floor
    Rational floor_u = cert.piercing_lower_u;
    BigInt num = boost::multiprecision::numerator(floor_u);
    BigInt den = boost::multiprecision::denominator(floor_u);
    BigInt ceil_u = (num + den - 1) / den;
    if (BigInt(*cert.piercing.exact) < ceil_u) return false;
    std::cout << "  info: exact piercing = " << *cert.piercing.exact << "\n";
  } else {
    std::cout << "  info: exact piercing unknown (budget); greedy upper = "
              << cert.piercing.greedy_upper << "\n";
  }
  if (cert.realized_T) {
    std::cout << "  info: realized T = " << *cert.realized_T
              << " vs plan T = " << static_cast<double>(plan.T_plan) << "\n";
  }
  std::cout << "  info: asymptotic regime "
            << (cert.asymptotics_in_range ? "reached" : "NOT reached at this n")
            << " (needs ln n >= " << plan.log_n_min << ")\n";

  // the certificate artifact round-trips through its schema
  json j = to_json(cert);
  if (j["schema"] != "hdw.certificate/1") return false;
  json j2 = to_json(certificate_from_json(json::parse(j.dump())));
  if (j.dump() != j2.dump()) return false;
  return seconds_since(t0) < 600.0;
}

bool coloring_bounds() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<PlanarPoint> grid9;
  for (const auto& p : grid_points(GridSpec(3, 2))) grid9.push_back({p[0], p[1]});
  auto chi = hq_chromatic_number(build_Hq(grid9, 3), 10'000'000);
  if (!chi.exact || *chi.exact != 2) return false;

  auto rep = gq_lower_pipeline(3, Rational(2, 5), 40, 7, 50'000'000);
  if (rep.m <= 0 || rep.M < 1) return false;
  if (rep.chi_pigeonhole != (rep.m + rep.M - 1) / rep.M) return false;
  if (rep.M_exact) {
    if (rep.chi.greedy_upper < rep.chi_pigeonhole) return false;
    if (rep.chi.exact && *rep.chi.exact < rep.chi_pigeonhole) return false;
  }
  if (!coloring_is_proper(rep.chi.greedy_coloring, rep.edges, 3)) return false;

  // exact rational limit check of the chromatic exponent at q = 3
  Rational eta(1, 1'000'000);
  Rational g = coloring_plan(3, eta).gq_exponent;
  if (g != (1 - eta) / (Rational(6) - eta)) return false;
  if (std::abs(static_cast<double>(g) - 1.0 / 6.0) > 1e-6) return false;
  return seconds_since(t0) < 60.0;
}

bool rerun_determinism(const std::string& cli) {
  namespace fs = std::filesystem;
  auto tmp = fs::temp_directory_path();
  auto slurp = [](const fs::path& p) -> std::string {
    std::ifstream in(p);
    if (!in) return {};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  };
  struct Cmd {
    std::string args;
    std::string name;
  };
  const std::vector<Cmd> cmds{
      {"enumerate --n 4 --k 2 --r 3", "acc_enum"},
      {"plan --q 3 --eta 0.4", "acc_plan"},
      {"construct --q 3 --n 5 --seed 99 --budget 1000000", "acc_construct"},
  };
  bool ok = true;
  for (const auto& c : cmds) {
    fs::path a = tmp / (c.name + "_a.json");
    fs::path b = tmp / (c.name + "_b.json");
    for (const fs::path& out : {a, b}) {
      std::string cmd = "\"" + cli + "\" " + c.args + " --no-timestamp --out \"" +
                        out.string() + "\"";
      if (std::system(cmd.c_str()) != 0) ok = false;
    }
    std::string ta = slurp(a), tb = slurp(b);
    if (ta.empty() || ta != tb) ok = false;
    fs::remove(a);
    fs::remove(b);
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: hdw_acceptance <path-to-hdw-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  report("collinear tuple counts match brute force", oracle_equivalence());
  report("closed-form hyperedge bound dominates exact counts", bound_dominance());
  report("line-family coverage and incidence floors", line_family_subclaims());
  report("container arithmetic and hypothesis reports", container_arithmetic());
  report("parameter optimizer certification", optimizer_certification());
  report("point-line duality bijection", duality_bijection());
  report("piercing solver exactness and sandwich", piercing_solver());
  report("end-to-end piercing certificate", end_to_end_certificate());
  report("section-coloring bounds", coloring_bounds());
  report("byte-identical artifacts across reruns", rerun_determinism(cli));

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
