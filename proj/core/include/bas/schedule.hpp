#ifndef BAS_SCHEDULE_HPP_
#define BAS_SCHEDULE_HPP_

#include <string>
#include <string_view>

namespace bas {

/// Decay rule applied once per iteration to the antenna length or step size.
///
///   geometric_offset:  v <- rate * v + offset
///   geometric:         v <- rate * v
///   constant:          v <- v
///
/// The defaults used by the CLI are rate 0.95 with offset 0.01 for the
/// antenna length and rate 0.95 for the step size.
struct ScheduleSpec {
  enum class Kind { geometric_offset, geometric, constant };

  Kind kind = Kind::constant;
  double rate = 1.0;
  double offset = 0.0;

  static ScheduleSpec geometric_offset(double rate, double offset) {
    return {Kind::geometric_offset, rate, offset};
  }
  static ScheduleSpec geometric(double rate) { return {Kind::geometric, rate, 0.0}; }
  static ScheduleSpec constant() { return {Kind::constant, 1.0, 0.0}; }

  /// Throws UsageError naming `field` when rate is outside (0, 1], offset is
  /// negative, or a non-zero offset is paired with a kind that has none.
  void validate(std::string_view field) const;

  /// Limit of repeated application from any non-negative start (0 for
  /// geometric, offset / (1 - rate) for geometric_offset with rate < 1).
  /// Constant schedules, and geometric_offset with rate 1, have no finite
  /// attractor; the function returns infinity for the latter and NaN for the former.
  [[nodiscard]] double fixed_point() const noexcept;

  friend bool operator==(const ScheduleSpec&, const ScheduleSpec&) = default;
};

[[nodiscard]] std::string_view to_string(ScheduleSpec::Kind kind) noexcept;
/// Throws UsageError on an unknown name.
[[nodiscard]] ScheduleSpec::Kind schedule_kind_from_string(std::string_view name);

/// One application of the decay rule.
[[nodiscard]] double advance_schedule(double value, const ScheduleSpec& spec) noexcept;

}  // namespace bas

#endif  // BAS_SCHEDULE_HPP_
