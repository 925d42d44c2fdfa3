#ifndef BAS_ORACLE_HPP_
#define BAS_ORACLE_HPP_

#include <cstddef>
#include <cstdint>

#include "bas/objectives.hpp"
#include "bas/rng.hpp"
#include "bas/types.hpp"

namespace bas {

struct GridSpec {
  Box box;
  /// Nodes per axis, including both endpoints.
  std::size_t resolution = 2;
  /// Upper bound on resolution^k.
  std::uint64_t max_nodes = 100'000'000;

  /// resolution^k, saturating at UINT64_MAX.
  [[nodiscard]] std::uint64_t node_count() const noexcept;
  [[nodiscard]] double coordinate(std::size_t axis, std::size_t index) const noexcept;
};

struct SearchPoint {
  Position x;
  double value = 0.0;
};

/// Exhaustive minimum over every grid node. Ties go to the lexicographically
/// smallest coordinates. `threads` == 0 picks std::thread::hardware_concurrency;
/// the result is identical for every thread count.
[[nodiscard]] SearchPoint grid_search(const Objective& objective, const GridSpec& grid,
                                      unsigned threads = 0);

/// Best of `n_evals` uniform samples from `box`.
[[nodiscard]] SearchPoint random_search_baseline(const Objective& objective, const Box& box,
                                                 std::size_t n_evals, Rng& rng);

}  // namespace bas

#endif  // BAS_ORACLE_HPP_
