#include <CLI11.hpp>

#include "hdw/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"integer-grid collinearity, piercing, and coloring workbench"};
  app.require_subcommand(1);
  hdw::RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "PRNG seed");
    sub->add_option("--budget", cfg.budget, "search node budget")->envname("HDW_BUDGET");
    sub->add_option("--mode", cfg.mode, "strict | formula-only")
        ->check(CLI::IsMember({"strict", "formula-only"}));
    sub->add_option("--out", cfg.out, "write the JSON artifact here (atomic)");
    sub->add_flag("--no-timestamp", cfg.no_timestamp, "omit generated_at (determinism tests)");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "collinearity statistics of [n]^k");
  enumerate->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--k", cfg.k)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--r", cfg.r)->required()->check(CLI::Range(2, 64));
  add_common(enumerate);

  CLI::App* supersat = app.add_subcommand("supersat", "dense line family and coverage checks");
  supersat->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  supersat->add_option("--k", cfg.k)->required()->check(CLI::Range(2, 16));
  supersat->add_option("--r", cfg.r)->required()->check(CLI::Range(2, 64));
  supersat->add_option("--s", cfg.s, "density exponent")->check(CLI::Range(0.0, 0.9));
  supersat->add_option("--t", cfg.t_override, "interval parameter override (exact)");
  add_common(supersat);

  CLI::App* bounds = app.add_subcommand("bounds", "container-method bound arithmetic");
  bounds->add_option("--logn", cfg.log_n, "ln n")->required();
  bounds->add_option("--k", cfg.k)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--r", cfg.r)->required()->check(CLI::Range(2, 64));
  bounds->add_option("--s0", cfg.s0)->required();
  bounds->add_option("--f", cfg.f)->required();
  bounds->add_option("--m", cfg.m_bound, "independent-set count argument");
  add_common(bounds);

  CLI::App* plan = app.add_subcommand("plan", "parameter selection for a given (q, eta)");
  plan->add_option("--q", cfg.q)->required()->check(CLI::Range(3, 1000));
  plan->add_option("--eta", cfg.eta, "slack, exact decimal in (0, 1/2)");
  plan->add_flag("--coloring", cfg.coloring_variant, "k = q, u = q+1 variant");
  add_common(plan);

  CLI::App* construct = app.add_subcommand("construct", "seeded sample-and-delete run");
  construct->add_option("--q", cfg.q)->required()->check(CLI::Range(3, 1000));
  construct->add_option("--eta", cfg.eta);
  construct->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  add_common(construct);

  CLI::App* pierce = app.add_subcommand("pierce", "certificate pipeline on a finished run");
  pierce->add_option("--in", cfg.in_path, "construct artifact")->required();
  pierce->add_option("--q", cfg.q)->required()->check(CLI::Range(3, 1000));
  pierce->add_option("--eta", cfg.eta);
  pierce->add_option("--csv", cfg.csv_out, "concurrency histogram CSV");
  add_common(pierce);

  CLI::App* color = app.add_subcommand("color", "chromatic lower-bound pipeline");
  color->add_option("--q", cfg.q)->required()->check(CLI::Range(3, 1000));
  color->add_option("--m", cfg.m_target, "point-count target")->required();
  color->add_option("--eta", cfg.eta);
  add_common(color);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? hdw::exit_code::ok : hdw::exit_code::usage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return hdw::dispatch(cfg);
}
