#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ugsb::dynamics {

/// Seeded Gaussian draws where sample i depends only on (seed, stream, i).
struct GaussianSampler {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  /// `attempt` selects an independent redraw for the same index (rejection loops).
  double draw(std::size_t index, std::uint32_t attempt = 0) const;
  std::vector<double> sample(unsigned workers = 1) const;
};

/// Runs fn(i) for i in [0, count) on `workers` threads (0 = hardware
/// concurrency). The first exception thrown by any task is rethrown.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

/// Default worker count: UGSB_WORKERS if set, otherwise hardware concurrency.
unsigned default_workers();

}  // namespace ugsb::dynamics
