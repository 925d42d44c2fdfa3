#ifndef BAS_TYPES_HPP_
#define BAS_TYPES_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bas {

/// A point in the k-dimensional search space.
using Position = std::vector<double>;

/// Raised when an operation is called with arguments that break its contract
/// (dimension mismatch, non-positive parameters, malformed boxes, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an objective returns a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::size_t iteration)
      : std::runtime_error(what), iteration_(iteration) {}

  /// Iteration index (0 for the initial evaluation) at which the failure occurred.
  [[nodiscard]] std::size_t iteration() const noexcept { return iteration_; }

 private:
  std::size_t iteration_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] double width() const noexcept { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Axis-aligned box, one interval per axis.
struct Box {
  std::vector<Interval> axes;

  Box() = default;
  explicit Box(std::vector<Interval> a) : axes(std::move(a)) {}

  /// The same interval repeated on every axis.
  static Box uniform(std::size_t dimension, Interval interval) {
    return Box(std::vector<Interval>(dimension, interval));
  }

  [[nodiscard]] std::size_t dimension() const noexcept { return axes.size(); }
  [[nodiscard]] bool contains(std::span<const double> x) const noexcept;
  /// Throws UsageError if any axis has lo > hi, a non-finite bound, or the
  /// dimension differs from `expected`.
  void validate(std::size_t expected, const char* what) const;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Unit-norm bearing along which the two antennae are placed.
class Direction {
 public:
  /// Normalizes `raw`; throws UsageError if its norm is zero or not finite.
  static Direction normalized(std::vector<double> raw);

  [[nodiscard]] std::span<const double> components() const noexcept { return components_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return components_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return components_[i]; }

 private:
  explicit Direction(std::vector<double> c) : components_(std::move(c)) {}
  std::vector<double> components_;
};

[[nodiscard]] double euclidean_norm(std::span<const double> v) noexcept;
[[nodiscard]] bool all_finite(std::span<const double> v) noexcept;

}  // namespace bas

#endif  // BAS_TYPES_HPP_
