#include "bas/schedule.hpp"

#include <cmath>
#include <limits>

#include "bas/types.hpp"

namespace bas {

void ScheduleSpec::validate(std::string_view field) const {
  const std::string name(field);
  if (!(rate > 0.0 && rate <= 1.0)) {
    throw UsageError(name + ": rate must lie in (0, 1]");
  }
  if (!(offset >= 0.0) || !std::isfinite(offset)) {
    throw UsageError(name + ": offset must be finite and >= 0");
  }
  if (kind != Kind::geometric_offset && offset != 0.0) {
    throw UsageError(name + ": offset is only allowed for geometric_offset schedules");
  }
}

double ScheduleSpec::fixed_point() const noexcept {
  switch (kind) {
    case Kind::geometric:
      return 0.0;
    case Kind::geometric_offset:
      if (rate < 1.0) return offset / (1.0 - rate);
      return offset == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                           : std::numeric_limits<double>::infinity();
    case Kind::constant:
      break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::string_view to_string(ScheduleSpec::Kind kind) noexcept {
  switch (kind) {
    case ScheduleSpec::Kind::geometric_offset:
      return "geometric_offset";
    case ScheduleSpec::Kind::geometric:
      return "geometric";
    case ScheduleSpec::Kind::constant:
      return "constant";
  }
  return "unknown";
}

ScheduleSpec::Kind schedule_kind_from_string(std::string_view name) {
  if (name == "geometric_offset") return ScheduleSpec::Kind::geometric_offset;
  if (name == "geometric") return ScheduleSpec::Kind::geometric;
  if (name == "constant") return ScheduleSpec::Kind::constant;
  throw UsageError("unknown schedule kind '" + std::string(name) +
                   "' (expected geometric_offset, geometric or constant)");
}

double advance_schedule(double value, const ScheduleSpec& spec) noexcept {
  switch (spec.kind) {
    case ScheduleSpec::Kind::geometric_offset:
      return spec.rate * value + spec.offset;
    case ScheduleSpec::Kind::geometric:
      return spec.rate * value;
    case ScheduleSpec::Kind::constant:
      break;
  }
  return value;
}

}  // namespace bas
