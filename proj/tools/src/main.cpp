#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bas/bas.hpp"
#include "bascli/campaign.hpp"
#include "bascli/emit.hpp"
#include "bascli/experiment_config.hpp"

namespace {

struct OracleOptions {
  std::string objective = "goldstein_price";
  std::size_t dim = 2;
  std::string init_box;
  std::size_t resolution = 401;
  std::size_t evals = 301;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

void add_oracle_common(CLI::App& app, OracleOptions& o) {
  app.add_option("--objective", o.objective, "Objective name")->capture_default_str();
  app.add_option("--dim", o.dim, "Dimension")->capture_default_str();
  app.add_option("--init-box", o.init_box, "lo:hi[,lo:hi...], default: objective box");
}

bas::Box oracle_box(const OracleOptions& o, const bas::Objective& obj) {
  if (o.init_box.empty()) return obj.default_init_box;
  bas::Box box = bascli::parse_box(o.init_box);
  if (box.dimension() == 1 && o.dim > 1) box = bas::Box::uniform(o.dim, box.axes.front());
  box.validate(o.dim, "init-box");
  return box;
}

void print_point(const char* kind, const bas::Objective& obj, const bas::SearchPoint& p) {
  nlohmann::ordered_json j;
  j["oracle"] = kind;
  j["objective"] = obj.name;
  j["dim"] = obj.dimension;
  j["best_value"] = p.value;
  j["best_position"] = p.x;
  std::cout << j.dump(2) << '\n';
}

int run_command(int argc, char** argv) {
  // A standalone app: CLI11 only reads --config files for the app that owns them.
  bascli::ExperimentConfig config;
  CLI::App app{"Run a seeded multi-trial campaign", "bas run"};
  bascli::add_experiment_options(app, config);
  CLI11_PARSE(app, argc, argv);

  try {
    bascli::finalize_experiment_options(config);
    const auto summary = bascli::run_campaign(config);
    const auto& a = summary.aggregates;
    std::printf("objective %s  dim %zu  trials %zu  evals %zu\n", config.objective.c_str(),
                config.dim, summary.trials.size(), summary.total_evals);
    std::printf("best %s (trial %zu)  median %s  mean %s  stddev %s\n",
                bascli::format_double(a.best).c_str(), summary.best_trial,
                bascli::format_double(a.median).c_str(), bascli::format_double(a.mean).c_str(),
                bascli::format_double(a.stddev).c_str());
    std::printf("wrote %s in %.3f s\n", bascli::summary_path(config.out_dir).string().c_str(),
                summary.wall_seconds);
    return 0;
  } catch (const bas::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "run") return run_command(argc - 1, argv + 1);

  CLI::App app{"Beetle antennae search: seeded campaigns and brute-force oracles"};
  app.require_subcommand(1);
  // Handled by run_command; registered here so it shows up in --help.
  app.add_subcommand("run", "Run a seeded multi-trial campaign (bas run --help)");

  OracleOptions oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force references");
  oracle_cmd->require_subcommand(1);
  CLI::App* grid = oracle_cmd->add_subcommand("grid", "Exhaustive grid minimum");
  add_oracle_common(*grid, oracle);
  grid->add_option("--resolution", oracle.resolution, "Nodes per axis")->capture_default_str();
  grid->add_option("--threads", oracle.threads, "Worker threads, 0 = all")->capture_default_str();
  CLI::App* random = oracle_cmd->add_subcommand("random", "Uniform random-search baseline");
  add_oracle_common(*random, oracle);
  random->add_option("--evals", oracle.evals, "Samples")->capture_default_str();
  random->add_option("--seed", oracle.seed, "Seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    const bas::Objective obj = bas::lookup_objective(oracle.objective, oracle.dim);
    const bas::Box box = oracle_box(oracle, obj);
    if (grid->parsed()) {
      bas::GridSpec spec{box, oracle.resolution};
      print_point("grid", obj, bas::grid_search(obj, spec, oracle.threads));
    } else {
      bas::Rng rng(oracle.seed);
      print_point("random", obj, bas::random_search_baseline(obj, box, oracle.evals, rng));
    }
    return 0;
  } catch (const bas::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
