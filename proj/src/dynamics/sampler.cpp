#include "ugsb/dynamics/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "ugsb/errors.hpp"

namespace ugsb::dynamics {

double GaussianSampler::draw(std::size_t index, std::uint32_t attempt) const {
  if (stddev < 0.0) throw DomainError("standard deviation must be >= 0");
  if (stddev == 0.0) return mean;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), attempt};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> dist(mean, stddev);
  return dist(rng);
}

std::vector<double> GaussianSampler::sample(unsigned workers) const {
  std::vector<double> out(count);
  parallel_for(count, workers, [&](std::size_t i) { out[i] = draw(i); });
  return out;
}

unsigned default_workers() {
  if (const char* env = std::getenv("UGSB_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return static_cast<unsigned>(w);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ugsb::dynamics
