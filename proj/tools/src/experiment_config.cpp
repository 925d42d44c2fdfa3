#include "bascli/experiment_config.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include <CLI11.hpp>

#include "bas/rng.hpp"

namespace bascli {

std::string_view to_string(TrajectoryMode mode) noexcept {
  switch (mode) {
    case TrajectoryMode::all:
      return "all";
    case TrajectoryMode::first:
      return "first";
    case TrajectoryMode::none:
      return "none";
  }
  return "first";
}

TrajectoryMode trajectory_mode_from_string(std::string_view s) {
  if (s == "all") return TrajectoryMode::all;
  if (s == "first") return TrajectoryMode::first;
  if (s == "none") return TrajectoryMode::none;
  throw bas::UsageError("traj: expected all, first or none, got '" + std::string(s) + "'");
}

namespace {

double parse_double(std::string_view text, std::string_view field) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw bas::UsageError(std::string(field) + ": malformed number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

bas::Box parse_box(std::string_view text) {
  std::vector<bas::Interval> axes;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw bas::UsageError("init-box: expected lo:hi, got '" + std::string(item) + "'");
    }
    const double lo = parse_double(item.substr(0, colon), "init-box");
    const double hi = parse_double(item.substr(colon + 1), "init-box");
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
      throw bas::UsageError("init-box: interval '" + std::string(item) +
                            "' must be finite with lo <= hi");
    }
    axes.push_back({lo, hi});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return bas::Box(std::move(axes));
}

std::string format_box(const bas::Box& box) {
  std::string out;
  for (const auto& a : box.axes) {
    if (!out.empty()) out += ',';
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, a.lo);
    *r.ptr++ = ':';
    r = std::to_chars(r.ptr, buf + sizeof buf, a.hi);
    out.append(buf, r.ptr);
  }
  return out;
}

void ExperimentConfig::validate() const {
  const bas::Objective obj = objective_fn();  // throws on unknown name or bad dim
  if (!(d0 > 0.0) || !std::isfinite(d0)) throw bas::UsageError("d0: must be finite and > 0");
  if (!(delta0 > 0.0) || !std::isfinite(delta0)) {
    throw bas::UsageError("delta0: must be finite and > 0");
  }
  if (!(eta_d > 0.0 && eta_d <= 1.0)) throw bas::UsageError("eta-d: must lie in (0, 1]");
  if (!(offset_d >= 0.0) || !std::isfinite(offset_d)) {
    throw bas::UsageError("offset-d: must be finite and >= 0");
  }
  if (!(eta_delta > 0.0 && eta_delta <= 1.0)) {
    throw bas::UsageError("eta-delta: must lie in (0, 1]");
  }
  if (iters < 1) throw bas::UsageError("iters: must be >= 1");
  if (trials < 1) throw bas::UsageError("trials: must be >= 1");
  if (init_box) init_box->validate(dim, "init-box");
  if (target && !std::isfinite(*target)) throw bas::UsageError("target: must be finite");
  if (stall && *stall < 1) throw bas::UsageError("stall: must be >= 1");
  bas_config(0).validate();
}

bas::Objective ExperimentConfig::objective_fn() const {
  try {
    return bas::lookup_objective(objective, dim);
  } catch (const bas::UsageError& e) {
    throw bas::UsageError(std::string("objective: ") + e.what());
  }
}

bas::Box ExperimentConfig::resolved_init_box() const {
  if (init_box) return *init_box;
  return objective_fn().default_init_box;
}

bas::BasConfig ExperimentConfig::bas_config(std::size_t index) const {
  bas::BasConfig c;
  c.dimension = dim;
  c.d0 = d0;
  c.delta0 = delta0;
  c.d_schedule = bas::ScheduleSpec::geometric_offset(eta_d, offset_d);
  c.delta_schedule = bas::ScheduleSpec::geometric(eta_delta);
  c.max_iters = iters;
  c.seed = bas::derive_seed(seed, index);
  const bas::Box box = resolved_init_box();
  c.init = box;
  if (clamp) c.clamp_box = box;
  c.target_value = target;
  c.stall_iters = stall;
  return c;
}

void add_experiment_options(CLI::App& app, ExperimentConfig& config) {
  app.set_config("--config", "", "Flat key = value file; keys are flag names without the leading --");
  app.add_option("--objective", config.objective, "michalewicz, goldstein_price or sphere")
      ->capture_default_str();
  app.add_option("--dim", config.dim, "Search-space dimension")->capture_default_str();
  app.add_option("--iters", config.iters, "Iterations per trial (T_max)")->capture_default_str();
  app.add_option("--d0", config.d0, "Initial antenna length")->capture_default_str();
  app.add_option("--delta0", config.delta0, "Initial step size")->capture_default_str();
  app.add_option("--eta-d", config.eta_d, "Antenna length decay rate")->capture_default_str();
  app.add_option("--offset-d", config.offset_d, "Antenna length offset")->capture_default_str();
  app.add_option("--eta-delta", config.eta_delta, "Step size decay rate")->capture_default_str();
  app.add_option("--trials", config.trials, "Independent trials")->capture_default_str();
  app.add_option("--seed", config.seed, "Master seed")->capture_default_str();
  app.add_option_function<std::string>(
      "--init-box",
      [&config](const std::string& text) {
        try {
          config.init_box = parse_box(text);
        } catch (const bas::UsageError& e) {
          throw CLI::ValidationError("--init-box", e.what());
        }
      },
      "lo:hi[,lo:hi...]; one interval applies to every axis");
  app.add_flag("--clamp", config.clamp, "Clamp moves into the init box");
  app.add_option("--target", config.target, "Stop once f_bst <= target");
  app.add_option("--stall", config.stall, "Stop after N iterations without improvement");
  app.add_option("--out-dir", config.out_dir, "Directory for trajectory and summary files")
      ->capture_default_str();
  app.add_option_function<std::string>(
         "--traj",
         [&config](const std::string& text) { config.traj = trajectory_mode_from_string(text); },
         "Trajectory files: all, first or none (default first)")
      ->check(CLI::IsMember({"all", "first", "none"}));
  app.add_option("--threads", config.threads, "Worker threads, 0 = hardware concurrency")
      ->capture_default_str();
}

void finalize_experiment_options(ExperimentConfig& config) {
  if (config.init_box && config.init_box->dimension() == 1 && config.dim > 1) {
    config.init_box = bas::Box::uniform(config.dim, config.init_box->axes.front());
  }
  config.validate();
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
  ExperimentConfig config;
  CLI::App app{"bas run"};
  add_experiment_options(app, config);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw bas::UsageError(e.what());
  }
  finalize_experiment_options(config);
  return config;
}

}  // namespace bascli
