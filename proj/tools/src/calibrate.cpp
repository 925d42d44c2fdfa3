// Pilot campaign used to set the statistical acceptance thresholds.
// Runs the reference configuration on both benchmarks over many seeds and
// reports quantiles, threshold hit rates and the random-search baseline.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bas/bas.hpp"
#include "bascli/campaign.hpp"
#include "bascli/experiment_config.hpp"

namespace {

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

void report(const std::string& objective, std::size_t trials, std::uint64_t seed,
            const std::vector<double>& thresholds) {
  bascli::ExperimentConfig c;
  c.objective = objective;
  c.trials = trials;
  c.seed = seed;
  c.traj = bascli::TrajectoryMode::none;
  const auto outcome = bascli::execute_campaign(c);

  std::vector<double> f;
  for (const auto& t : outcome.summary.trials) f.push_back(t.f_bst);
  std::vector<double> random_best;
  const auto obj = c.objective_fn();
  for (std::size_t i = 0; i < trials; ++i) {
    bas::Rng rng(c.bas_config(i).seed);
    random_best.push_back(
        bas::random_search_baseline(obj, c.resolved_init_box(), 1 + 3 * c.iters, rng).value);
  }

  const auto& a = outcome.summary.aggregates;
  std::printf("| %s | %zu | %.6f | %.6f | %.6f | %.6f | %.6f |", objective.c_str(), trials,
              a.best, quantile(f, 0.1), a.median, quantile(f, 0.9), a.mean);
  for (double th : thresholds) {
    const auto hits = std::count_if(f.begin(), f.end(), [&](double v) { return v <= th; });
    std::printf(" %.3f (<= %g) |", static_cast<double>(hits) / static_cast<double>(trials), th);
  }
  std::printf(" %.6f |\n", bascli::compute_aggregates(random_best).median);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seed pilot for the statistical acceptance thresholds"};
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  app.add_option("--trials", trials, "Seeds per benchmark")->capture_default_str();
  app.add_option("--seed", seed, "Master seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::printf("| objective | trials | best | p10 | median | p90 | mean | hit rate | hit rate | "
              "random-search median (301 evals) |\n");
  std::printf("|---|---|---|---|---|---|---|---|---|---|\n");
  report("michalewicz", trials, seed, {-1.70, -1.795});
  report("goldstein_price", trials, seed, {10.0, 3.05});
  return 0;
}
