#include "bas/types.hpp"

#include <cmath>
#include <string>

namespace bas {

bool Box::contains(std::span<const double> x) const noexcept {
  if (x.size() != axes.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= axes[i].lo && x[i] <= axes[i].hi)) return false;
  }
  return true;
}

void Box::validate(std::size_t expected, const char* what) const {
  if (axes.size() != expected) {
    throw UsageError(std::string(what) + ": box has " + std::to_string(axes.size()) +
                     " axes, expected " + std::to_string(expected));
  }
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const auto& a = axes[i];
    if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) {
      throw UsageError(std::string(what) + ": axis " + std::to_string(i) + " has a non-finite bound");
    }
    if (a.lo > a.hi) {
      throw UsageError(std::string(what) + ": axis " + std::to_string(i) + " has lo > hi");
    }
  }
}

double euclidean_norm(std::span<const double> v) noexcept {
  double sum = 0.0;
  for (double c : v) sum += c * c;
  return std::sqrt(sum);
}

bool all_finite(std::span<const double> v) noexcept {
  for (double c : v) {
    if (!std::isfinite(c)) return false;
  }
  return true;
}

Direction Direction::normalized(std::vector<double> raw) {
  const double norm = euclidean_norm(raw);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw UsageError("Direction: cannot normalize a zero or non-finite vector");
  }
  for (double& c : raw) c /= norm;
  return Direction(std::move(raw));
}

}  // namespace bas
