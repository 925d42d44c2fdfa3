#ifndef BAS_SEARCH_HPP_
#define BAS_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "bas/objectives.hpp"
#include "bas/rng.hpp"
#include "bas/schedule.hpp"
#include "bas/types.hpp"

namespace bas {

struct BasConfig {
  std::size_t dimension = 2;
  double d0 = 2.0;
  double delta0 = 0.5;
  ScheduleSpec d_schedule = ScheduleSpec::geometric_offset(0.95, 0.01);
  ScheduleSpec delta_schedule = ScheduleSpec::geometric(0.95);
  std::size_t max_iters = 100;
  std::uint64_t seed = 0;
  /// Explicit starting point, or a box sampled uniformly per axis.
  std::variant<Position, Box> init = Box::uniform(2, {0.0, 1.0});
  /// When set, every post-move position is clamped into this box.
  std::optional<Box> clamp_box;
  /// Stop once f_bst <= target_value.
  std::optional<double> target_value;
  /// Stop after this many consecutive iterations without a strict improvement.
  std::optional<std::size_t> stall_iters;

  /// Throws UsageError naming the first offending field.
  void validate() const;
};

struct SearchState {
  std::size_t t = 0;
  Position x;
  /// Objective value at x.
  double f_x = 0.0;
  double d = 0.0;
  double delta = 0.0;
  Position x_bst;
  double f_bst = 0.0;
  std::size_t evals = 0;
};

/// One row of the convergence trajectory. `d` and `delta` are the antenna
/// length and step size that produced x (i.e. before the schedule advanced).
struct IterationRecord {
  std::size_t t = 0;
  double f_x = 0.0;
  double f_bst = 0.0;
  double d = 0.0;
  double delta = 0.0;
  Position x;
};

enum class Termination { max_iters, target_reached, stalled };

[[nodiscard]] const char* to_string(Termination t) noexcept;

struct RunResult {
  /// Starting point and its value. f_bst is the minimum of f_x0 and every
  /// recorded f_x.
  Position x0;
  double f_x0 = 0.0;
  std::vector<IterationRecord> records;
  Position x_bst;
  double f_bst = 0.0;
  std::size_t evals = 0;
  Termination termination = Termination::max_iters;
};

/// Random bearing: components uniform on [-1, 1], redrawn while the raw norm
/// is below 1e-12, then normalized.
[[nodiscard]] Direction sample_direction(std::size_t k, Rng& rng);

/// Right and left antenna positions x + d*b and x - d*b.
[[nodiscard]] std::pair<Position, Position> antenna_probe(std::span<const double> x, double d,
                                                          const Direction& b);

/// Moves x by delta along b toward whichever antenna has the lower value:
/// x - delta * b * sign(f_r - f_l). Equal values leave x unchanged.
/// Throws EvaluationError if either value is not finite.
[[nodiscard]] Position detect_step(std::span<const double> x, double delta, const Direction& b,
                                   double f_r, double f_l);

[[nodiscard]] Position init_position(const BasConfig& config, Rng& rng);

/// Initial state: x^0 from init_position, d = d0, delta = delta0, and the
/// incumbent set to (x^0, f(x^0)). Costs one evaluation.
[[nodiscard]] SearchState initial_state(const BasConfig& config, const Objective& objective,
                                        Rng& rng);

/// One pass of the search loop. Evaluates the objective exactly three times
/// (both antennae, then the new position). The input state is untouched; on
/// an EvaluationError no partial state escapes.
[[nodiscard]] SearchState bas_iterate(const SearchState& state, const Objective& objective,
                                      Rng& rng, const BasConfig& config);

/// Full search from a fresh Rng seeded with config.seed.
[[nodiscard]] RunResult run(const BasConfig& config, const Objective& objective);

}  // namespace bas

#endif  // BAS_SEARCH_HPP_
