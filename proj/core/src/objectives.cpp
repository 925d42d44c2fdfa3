#include "bas/objectives.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bas {

double michalewicz(std::span<const double> x, int m) {
  if (m < 1) throw UsageError("michalewicz: steepness m must be >= 1");
  const double exponent = 2.0 * m;
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double index = static_cast<double>(i + 1);
    sum += std::sin(xi) * std::pow(std::sin(index * xi * xi / std::numbers::pi), exponent);
  }
  return -sum;
}

double goldstein_price(std::span<const double> x) {
  if (x.size() != 2) {
    throw UsageError("goldstein_price: expected 2 coordinates, got " + std::to_string(x.size()));
  }
  const double x1 = x[0];
  const double x2 = x[1];
  const double a = x1 + x2 + 1.0;
  const double b = 2.0 * x1 - 3.0 * x2;
  const double first =
      1.0 + a * a * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
  const double second = 30.0 + b * b * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                                        36.0 * x1 * x2 + 27.0 * x2 * x2);
  return first * second;
}

double sphere(std::span<const double> x) noexcept {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

const std::vector<std::string>& objective_names() {
  static const std::vector<std::string> names{"michalewicz", "goldstein_price", "sphere"};
  return names;
}

namespace {

void require_dimension(std::string_view name, std::size_t dimension) {
  if (dimension == 0) {
    throw UsageError(std::string(name) + ": dimension must be >= 1");
  }
}

}  // namespace

Objective lookup_objective(std::string_view name, std::size_t dimension) {
  Objective obj;
  obj.name = std::string(name);
  obj.dimension = dimension;

  if (name == "michalewicz") {
    require_dimension(name, dimension);
    obj.fn = [](std::span<const double> x) { return michalewicz(x); };
    obj.default_init_box = Box::uniform(dimension, {0.0, std::numbers::pi});
    if (dimension == 2) obj.known_optimum = KnownOptimum{{2.20319, 1.57049}, -1.8013};
    return obj;
  }
  if (name == "goldstein_price") {
    if (dimension != 2) {
      throw UsageError("goldstein_price: fixed dimension 2, requested " +
                       std::to_string(dimension));
    }
    obj.fixed_dimension = 2;
    obj.fn = [](std::span<const double> x) { return goldstein_price(x); };
    obj.default_init_box = Box::uniform(2, {-2.0, 2.0});
    obj.known_optimum = KnownOptimum{{0.0, -1.0}, 3.0};
    return obj;
  }
  if (name == "sphere") {
    require_dimension(name, dimension);
    obj.fn = [](std::span<const double> x) { return sphere(x); };
    obj.default_init_box = Box::uniform(dimension, {-1.0, 1.0});
    obj.known_optimum = KnownOptimum{Position(dimension, 0.0), 0.0};
    return obj;
  }

  std::string valid;
  for (const auto& n : objective_names()) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw UsageError("unknown objective '" + std::string(name) + "' (valid: " + valid + ")");
}

}  // namespace bas
