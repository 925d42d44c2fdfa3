#include "bascli/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <thread>

#include "bascli/emit.hpp"

namespace bascli {

Aggregates compute_aggregates(std::span<const double> values) {
  if (values.empty()) throw bas::UsageError("compute_aggregates: no values");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  Aggregates a;
  a.best = sorted.front();
  a.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

  double sum = 0.0;
  for (double v : values) sum += v;
  a.mean = sum / static_cast<double>(n);

  if (n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - a.mean) * (v - a.mean);
    a.stddev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return a;
}

bas::RunResult run_trial(const ExperimentConfig& config, std::size_t index) {
  return bas::run(config.bas_config(index), config.objective_fn());
}

CampaignSummary summarize(const ExperimentConfig& config, std::span<const bas::RunResult> runs) {
  CampaignSummary s;
  s.config = config;
  s.trials.reserve(runs.size());
  std::vector<double> values;
  values.reserve(runs.size());
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& r = runs[i];
    s.trials.push_back(TrialSummary{i, config.bas_config(i).seed, r.f_bst, r.x_bst,
                                    r.records.size(), r.evals, r.termination});
    values.push_back(r.f_bst);
    s.total_evals += r.evals;
    if (r.f_bst < runs[s.best_trial].f_bst) s.best_trial = i;
  }
  s.aggregates = compute_aggregates(values);
  return s;
}

CampaignOutcome execute_campaign(const ExperimentConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();

  const std::size_t n = config.trials;
  std::vector<bas::RunResult> runs(n);
  std::vector<std::exception_ptr> errors(n);

  unsigned threads = config.threads != 0 ? config.threads
                                         : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        runs[i] = run_trial(config, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const bas::EvaluationError& e) {
      throw bas::EvaluationError("trial " + std::to_string(i) + ": " + e.what(), e.iteration());
    }
  }

  CampaignOutcome out;
  out.summary = summarize(config, runs);
  out.summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  out.runs = std::move(runs);
  return out;
}

std::filesystem::path trajectory_path(const std::filesystem::path& dir, std::size_t trial) {
  char name[48];
  std::snprintf(name, sizeof name, "trajectory_%04zu.csv", trial);
  return dir / name;
}

std::filesystem::path summary_path(const std::filesystem::path& dir) {
  return dir / "summary.json";
}

CampaignSummary run_campaign(const ExperimentConfig& config) {
  CampaignOutcome outcome = execute_campaign(config);

  const std::filesystem::path dir(config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError(dir, "cannot create directory: " + ec.message());

  const std::size_t n_traj = config.traj == TrajectoryMode::all     ? outcome.runs.size()
                             : config.traj == TrajectoryMode::first ? 1
                                                                    : 0;
  for (std::size_t i = 0; i < n_traj; ++i) {
    emit_trajectory(outcome.runs[i], trajectory_path(dir, i));
  }
  emit_summary(outcome.summary, summary_path(dir));
  return std::move(outcome.summary);
}

}  // namespace bascli
