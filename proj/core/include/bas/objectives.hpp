#ifndef BAS_OBJECTIVES_HPP_
#define BAS_OBJECTIVES_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bas/types.hpp"

namespace bas {

/// Negated Michalewicz function, -sum_i sin(x_i) * sin(i * x_i^2 / pi)^(2m)
/// with 1-based i. Minimum in 2-D is about -1.8013 at (2.20319, 1.57049).
[[nodiscard]] double michalewicz(std::span<const double> x, int m = 10);

/// Goldstein-Price function on R^2. Global minimum 3 at (0, -1).
/// Throws UsageError unless x has exactly two coordinates.
[[nodiscard]] double goldstein_price(std::span<const double> x);

[[nodiscard]] double sphere(std::span<const double> x) noexcept;

struct KnownOptimum {
  Position x;
  double value = 0.0;
};

/// A benchmark objective bound to a concrete dimension.
struct Objective {
  using Fn = std::function<double(std::span<const double>)>;

  std::string name;
  std::size_t dimension = 0;
  /// Set for objectives that only exist in one dimension.
  std::optional<std::size_t> fixed_dimension;
  Fn fn;
  Box default_init_box;
  std::optional<KnownOptimum> known_optimum;

  double operator()(std::span<const double> x) const { return fn(x); }
};

/// Names accepted by lookup_objective, in registry order.
[[nodiscard]] const std::vector<std::string>& objective_names();

/// Builds a registered objective for `dimension`. Throws UsageError for an
/// unknown name (the message lists valid names) or an unsupported dimension.
[[nodiscard]] Objective lookup_objective(std::string_view name, std::size_t dimension);

}  // namespace bas

#endif  // BAS_OBJECTIVES_HPP_
