#ifndef BASCLI_CAMPAIGN_HPP_
#define BASCLI_CAMPAIGN_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "bas/search.hpp"
#include "bascli/experiment_config.hpp"

namespace bascli {

struct TrialSummary {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  double f_bst = 0.0;
  bas::Position x_bst;
  std::size_t iterations = 0;
  std::size_t evals = 0;
  bas::Termination termination = bas::Termination::max_iters;
};

struct Aggregates {
  double best = 0.0;
  double median = 0.0;
  double mean = 0.0;
  /// Sample standard deviation (n - 1 denominator); 0 for a single trial.
  double stddev = 0.0;
};

/// Order statistics and moments of `values`. Requires at least one value.
[[nodiscard]] Aggregates compute_aggregates(std::span<const double> values);

struct CampaignSummary {
  ExperimentConfig config;
  std::vector<TrialSummary> trials;
  Aggregates aggregates;
  std::size_t best_trial = 0;
  std::size_t total_evals = 0;
  /// Not written to the summary file, which must be byte-reproducible.
  double wall_seconds = 0.0;
};

struct CampaignOutcome {
  CampaignSummary summary;
  /// Indexed by trial.
  std::vector<bas::RunResult> runs;
};

/// Runs trial `index` of the campaign in isolation.
[[nodiscard]] bas::RunResult run_trial(const ExperimentConfig& config, std::size_t index);

/// Runs every trial (in parallel when config.threads allows) without touching
/// the filesystem. Results do not depend on thread count or scheduling.
/// Objective failures are rethrown as bas::EvaluationError naming the trial.
[[nodiscard]] CampaignOutcome execute_campaign(const ExperimentConfig& config);

/// Builds the summary for already computed runs.
[[nodiscard]] CampaignSummary summarize(const ExperimentConfig& config,
                                        std::span<const bas::RunResult> runs);

/// execute_campaign followed by writing trajectories and summary.json into
/// config.out_dir.
CampaignSummary run_campaign(const ExperimentConfig& config);

[[nodiscard]] std::filesystem::path trajectory_path(const std::filesystem::path& dir,
                                                    std::size_t trial);
[[nodiscard]] std::filesystem::path summary_path(const std::filesystem::path& dir);

}  // namespace bascli

#endif  // BASCLI_CAMPAIGN_HPP_
