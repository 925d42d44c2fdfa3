#ifndef BASCLI_EXPERIMENT_CONFIG_HPP_
#define BASCLI_EXPERIMENT_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bas/objectives.hpp"
#include "bas/search.hpp"
#include "bas/types.hpp"

namespace CLI {
class App;
}  // namespace CLI

namespace bascli {

enum class TrajectoryMode { all, first, none };

[[nodiscard]] std::string_view to_string(TrajectoryMode mode) noexcept;
[[nodiscard]] TrajectoryMode trajectory_mode_from_string(std::string_view s);

/// Everything needed to reproduce one campaign. Defaults are the reference
/// benchmark setup: d0 = 2, delta0 = 0.5, d <- 0.95 d + 0.01, delta <- 0.95 delta,
/// 100 iterations.
struct ExperimentConfig {
  std::string objective = "michalewicz";
  std::size_t dim = 2;
  double d0 = 2.0;
  double delta0 = 0.5;
  double eta_d = 0.95;
  double offset_d = 0.01;
  double eta_delta = 0.95;
  std::size_t iters = 100;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  /// Falls back to the objective's default box when unset.
  std::optional<bas::Box> init_box;
  /// Clamp every move into the init box.
  bool clamp = false;
  std::optional<double> target;
  std::optional<std::size_t> stall;
  std::string out_dir = ".";
  TrajectoryMode traj = TrajectoryMode::first;
  /// 0 = hardware concurrency. Has no effect on results.
  unsigned threads = 0;

  /// Throws bas::UsageError naming the offending flag.
  void validate() const;

  [[nodiscard]] bas::Objective objective_fn() const;
  [[nodiscard]] bas::Box resolved_init_box() const;
  /// Search configuration of trial `index`; its seed is derive_seed(seed, index).
  [[nodiscard]] bas::BasConfig bas_config(std::size_t index) const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Parses "lo:hi[,lo:hi...]". A single interval is accepted as-is; the caller
/// decides whether to broadcast it.
[[nodiscard]] bas::Box parse_box(std::string_view text);
[[nodiscard]] std::string format_box(const bas::Box& box);

/// Registers the campaign flags (and --config) on `app`, writing into `config`.
/// Precedence is command-line flag, then config file, then built-in default.
void add_experiment_options(CLI::App& app, ExperimentConfig& config);

/// Finishes option handling after CLI11 has parsed: applies the init-box text,
/// broadcasts single-interval boxes, and validates.
void finalize_experiment_options(ExperimentConfig& config);

/// Parses campaign flags (no subcommand name) into a validated config.
/// Throws bas::UsageError on any parse or validation failure.
[[nodiscard]] ExperimentConfig parse_config(const std::vector<std::string>& args);

}  // namespace bascli

#endif  // BASCLI_EXPERIMENT_CONFIG_HPP_
