// Command-line front end: each subcommand loads a JSON scenario, overrides
// seed/determinism from flags, and dispatches into the library.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "dislo/scenario.hpp"

namespace {

struct CommonArgs {
  std::string config;
  std::string out = "out";
  std::optional<unsigned long long> seed;
  bool deterministic = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config, "Scenario JSON file")->required();
  cmd->add_option("--out", args.out, "Output directory");
  cmd->add_option("--seed", args.seed, "Random seed override");
  cmd->add_flag("--deterministic", args.deterministic,
                "Single-threaded numerics, reproducible output");
}

int dispatch(dislo::Task task, const CommonArgs& args) {
  dislo::Scenario sc;
  try {
    sc = dislo::load_scenario(args.config);
  } catch (const std::exception& e) {
    std::cerr << "[cli] " << e.what() << "\n";
    return 2;
  }
  if (sc.task != task) {
    std::cerr << "[cli] config declares a different task than the subcommand\n";
    return 2;
  }
  if (args.seed) sc.seed = static_cast<unsigned>(*args.seed);
  if (args.deterministic) sc.deterministic = true;
#ifdef _OPENMP
  if (sc.deterministic) omp_set_num_threads(1);
#endif
  return dislo::run(sc, args.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elastic dislocation toolkit: half-space double-layer forward map, "
               "finite-element cross-checks, and slip/geometry inversion"};
  app.require_subcommand(1);

  const std::pair<const char*, dislo::Task> cmds[] = {
      {"forward", dislo::Task::forward},
      {"invert-slip", dislo::Task::invert_slip},
      {"invert-geometry", dislo::Task::invert_geometry},
      {"verify", dislo::Task::verify},
      {"uniqueness", dislo::Task::uniqueness},
      {"fd-compare", dislo::Task::fd_compare},
  };
  std::vector<CommonArgs> args(std::size(cmds));
  std::vector<CLI::App*> subs;
  for (size_t i = 0; i < std::size(cmds); ++i) {
    CLI::App* sub = app.add_subcommand(cmds[i].first);
    add_common(sub, args[i]);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (size_t i = 0; i < std::size(cmds); ++i)
    if (subs[i]->parsed()) return dispatch(cmds[i].second, args[i]);
  return 2;
}
