#include "bas/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bas {

namespace {

constexpr double kMinRawNorm = 1e-12;

double evaluate_checked(const Objective& objective, std::span<const double> x,
                        std::size_t iteration, const char* where) {
  const double value = objective(x);
  if (!std::isfinite(value)) {
    throw EvaluationError("objective '" + objective.name + "' returned a non-finite value at " +
                              where + " (iteration " + std::to_string(iteration) + ")",
                          iteration);
  }
  return value;
}

void clamp_into(Position& x, const Box& box) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = std::clamp(x[i], box.axes[i].lo, box.axes[i].hi);
  }
}

constexpr double sign(double v) noexcept { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

const char* to_string(Termination t) noexcept {
  switch (t) {
    case Termination::max_iters:
      return "max_iters";
    case Termination::target_reached:
      return "target_reached";
    case Termination::stalled:
      return "stalled";
  }
  return "unknown";
}

void BasConfig::validate() const {
  if (dimension < 1) throw UsageError("dimension: must be >= 1");
  if (!(d0 > 0.0) || !std::isfinite(d0)) throw UsageError("d0: must be finite and > 0");
  if (!(delta0 > 0.0) || !std::isfinite(delta0)) {
    throw UsageError("delta0: must be finite and > 0");
  }
  d_schedule.validate("d_schedule");
  delta_schedule.validate("delta_schedule");
  if (max_iters < 1) throw UsageError("max_iters: must be >= 1");
  if (const auto* x0 = std::get_if<Position>(&init)) {
    if (x0->size() != dimension) {
      throw UsageError("init: explicit position has " + std::to_string(x0->size()) +
                       " coordinates, expected " + std::to_string(dimension));
    }
    if (!all_finite(*x0)) throw UsageError("init: explicit position must be finite");
  } else {
    std::get<Box>(init).validate(dimension, "init");
  }
  if (clamp_box) clamp_box->validate(dimension, "clamp_box");
  if (target_value && !std::isfinite(*target_value)) {
    throw UsageError("target_value: must be finite");
  }
  if (stall_iters && *stall_iters < 1) throw UsageError("stall_iters: must be >= 1");
}

Direction sample_direction(std::size_t k, Rng& rng) {
  if (k < 1) throw UsageError("sample_direction: k must be >= 1");
  std::vector<double> raw(k);
  for (;;) {
    for (double& c : raw) c = rng.uniform(-1.0, 1.0);
    if (euclidean_norm(raw) >= kMinRawNorm) break;
  }
  return Direction::normalized(std::move(raw));
}

std::pair<Position, Position> antenna_probe(std::span<const double> x, double d,
                                            const Direction& b) {
  if (x.size() != b.dimension()) {
    throw UsageError("antenna_probe: position has " + std::to_string(x.size()) +
                     " coordinates but direction has " + std::to_string(b.dimension()));
  }
  Position right(x.size());
  Position left(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    right[i] = x[i] + d * b[i];
    left[i] = x[i] - d * b[i];
  }
  return {std::move(right), std::move(left)};
}

Position detect_step(std::span<const double> x, double delta, const Direction& b, double f_r,
                     double f_l) {
  if (x.size() != b.dimension()) {
    throw UsageError("detect_step: position/direction dimension mismatch");
  }
  if (!std::isfinite(f_r) || !std::isfinite(f_l)) {
    throw EvaluationError("detect_step: non-finite antenna value", 0);
  }
  // Minimization: step away from the higher antenna.
  const double s = sign(f_r - f_l);
  Position next(x.begin(), x.end());
  if (s == 0.0) return next;
  for (std::size_t i = 0; i < next.size(); ++i) next[i] -= delta * b[i] * s;
  return next;
}

Position init_position(const BasConfig& config, Rng& rng) {
  if (const auto* x0 = std::get_if<Position>(&config.init)) {
    if (x0->size() != config.dimension) {
      throw UsageError("init_position: explicit position does not match dimension");
    }
    return *x0;
  }
  const auto& box = std::get<Box>(config.init);
  box.validate(config.dimension, "init_position");
  Position x(config.dimension);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(box.axes[i].lo, box.axes[i].hi);
  return x;
}

SearchState initial_state(const BasConfig& config, const Objective& objective, Rng& rng) {
  SearchState s;
  s.x = init_position(config, rng);
  s.f_x = evaluate_checked(objective, s.x, 0, "x^0");
  s.d = config.d0;
  s.delta = config.delta0;
  s.x_bst = s.x;
  s.f_bst = s.f_x;
  s.evals = 1;
  return s;
}

SearchState bas_iterate(const SearchState& state, const Objective& objective, Rng& rng,
                        const BasConfig& config) {
  const std::size_t iteration = state.t + 1;
  const Direction b = sample_direction(state.x.size(), rng);
  const auto [x_r, x_l] = antenna_probe(state.x, state.d, b);
  const double f_r = evaluate_checked(objective, x_r, iteration, "right antenna");
  const double f_l = evaluate_checked(objective, x_l, iteration, "left antenna");

  Position x_new = detect_step(state.x, state.delta, b, f_r, f_l);
  if (config.clamp_box) clamp_into(x_new, *config.clamp_box);
  const double f_new = evaluate_checked(objective, x_new, iteration, "new position");

  SearchState next;
  next.t = iteration;
  next.f_x = f_new;
  next.d = advance_schedule(state.d, config.d_schedule);
  next.delta = advance_schedule(state.delta, config.delta_schedule);
  next.evals = state.evals + 3;
  if (f_new < state.f_bst) {
    next.x_bst = x_new;
    next.f_bst = f_new;
  } else {
    next.x_bst = state.x_bst;
    next.f_bst = state.f_bst;
  }
  next.x = std::move(x_new);
  return next;
}

RunResult run(const BasConfig& config, const Objective& objective) {
  config.validate();
  if (objective.dimension != 0 && objective.dimension != config.dimension) {
    throw UsageError("run: objective '" + objective.name + "' has dimension " +
                     std::to_string(objective.dimension) + ", config has " +
                     std::to_string(config.dimension));
  }

  Rng rng(config.seed);
  SearchState state = initial_state(config, objective, rng);

  RunResult result;
  result.x0 = state.x;
  result.f_x0 = state.f_x;
  result.records.reserve(config.max_iters);
  std::size_t since_improvement = 0;

  while (state.t < config.max_iters) {
    const double d_used = state.d;
    const double delta_used = state.delta;
    const double previous_best = state.f_bst;

    state = bas_iterate(state, objective, rng, config);
    result.records.push_back(
        IterationRecord{state.t, state.f_x, state.f_bst, d_used, delta_used, state.x});

    since_improvement = state.f_bst < previous_best ? 0 : since_improvement + 1;
    if (config.target_value && state.f_bst <= *config.target_value) {
      result.termination = Termination::target_reached;
      break;
    }
    if (config.stall_iters && since_improvement >= *config.stall_iters) {
      result.termination = Termination::stalled;
      break;
    }
  }

  result.x_bst = state.x_bst;
  result.f_bst = state.f_bst;
  result.evals = state.evals;
  return result;
}

}  // namespace bas
