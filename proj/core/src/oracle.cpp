#include "bas/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

namespace bas {

std::uint64_t GridSpec::node_count() const noexcept {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < box.dimension(); ++i) {
    if (resolution != 0 && total > std::numeric_limits<std::uint64_t>::max() / resolution) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= resolution;
  }
  return total;
}

double GridSpec::coordinate(std::size_t axis, std::size_t index) const noexcept {
  const auto& a = box.axes[axis];
  if (index + 1 >= resolution) return a.hi;
  // Multiply before dividing so nodes such as 0 and -1 on [-2, 2] are exact.
  return a.lo + (a.hi - a.lo) * static_cast<double>(index) / static_cast<double>(resolution - 1);
}

namespace {

struct Candidate {
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  double value = std::numeric_limits<double>::infinity();
};

// Flat index with axis 0 most significant, so ascending index order is
// lexicographic order of coordinates.
void decode(const GridSpec& grid, std::uint64_t flat, Position& x) {
  for (std::size_t axis = x.size(); axis-- > 0;) {
    x[axis] = grid.coordinate(axis, static_cast<std::size_t>(flat % grid.resolution));
    flat /= grid.resolution;
  }
}

Candidate better(const Candidate& a, const Candidate& b) noexcept {
  if (a.value < b.value) return a;
  if (b.value < a.value) return b;
  return a.index <= b.index ? a : b;
}

Candidate scan(const Objective& objective, const GridSpec& grid, std::uint64_t begin,
               std::uint64_t end, std::uint64_t& bad_index) {
  Candidate best;
  Position x(grid.box.dimension());
  for (std::uint64_t i = begin; i < end; ++i) {
    decode(grid, i, x);
    const double v = objective(x);
    if (!std::isfinite(v)) {
      bad_index = i;
      return best;
    }
    if (v < best.value) best = {i, v};
  }
  return best;
}

}  // namespace

SearchPoint grid_search(const Objective& objective, const GridSpec& grid, unsigned threads) {
  const std::size_t k = grid.box.dimension();
  if (k == 0) throw UsageError("grid_search: empty box");
  grid.box.validate(k, "grid_search");
  if (objective.dimension != 0 && objective.dimension != k) {
    throw UsageError("grid_search: objective dimension " + std::to_string(objective.dimension) +
                     " does not match grid dimension " + std::to_string(k));
  }
  if (grid.resolution < 2) throw UsageError("grid_search: resolution must be >= 2");
  const std::uint64_t total = grid.node_count();
  if (total > grid.max_nodes) {
    throw UsageError("grid_search: " + std::to_string(grid.resolution) + "^" + std::to_string(k) +
                     " nodes exceeds the cap of " + std::to_string(grid.max_nodes));
  }

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::vector<Candidate> partial(threads);
  std::vector<std::uint64_t> bad(threads, kNone);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(total, t * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      workers.emplace_back([&, t, begin, end] {
        partial[t] = scan(objective, grid, begin, end, bad[t]);
      });
    }
  }

  const auto first_bad = std::min_element(bad.begin(), bad.end());
  if (*first_bad != kNone) {
    throw EvaluationError("grid_search: objective '" + objective.name +
                              "' returned a non-finite value at grid node " +
                              std::to_string(*first_bad),
                          0);
  }

  Candidate best;
  for (const auto& c : partial) best = better(best, c);

  SearchPoint out;
  out.x.resize(k);
  decode(grid, best.index, out.x);
  out.value = best.value;
  return out;
}

SearchPoint random_search_baseline(const Objective& objective, const Box& box,
                                   std::size_t n_evals, Rng& rng) {
  if (n_evals < 1) throw UsageError("random_search_baseline: n_evals must be >= 1");
  const std::size_t k = box.dimension();
  if (k == 0) throw UsageError("random_search_baseline: empty box");
  box.validate(k, "random_search_baseline");
  if (objective.dimension != 0 && objective.dimension != k) {
    throw UsageError("random_search_baseline: objective/box dimension mismatch");
  }

  SearchPoint best{Position(k), std::numeric_limits<double>::infinity()};
  Position x(k);
  for (std::size_t n = 0; n < n_evals; ++n) {
    for (std::size_t i = 0; i < k; ++i) x[i] = rng.uniform(box.axes[i].lo, box.axes[i].hi);
    const double v = objective(x);
    if (!std::isfinite(v)) {
      throw EvaluationError("random_search_baseline: non-finite objective value at sample " +
                                std::to_string(n),
                            n);
    }
    if (v < best.value) {
      best.value = v;
      best.x = x;
    }
  }
  return best;
}

}  // namespace bas
