#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace antwalk::experiment {

template <typename T>
struct ReplicaOutcome {
  std::uint32_t replica = 0;
  std::optional<T> value;  // empty when the replica failed
  std::string error;
};

inline unsigned resolve_threads(unsigned requested, std::uint32_t replicas) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return std::max(1u, std::min<unsigned>(n, replicas));
}

/// Runs job(replica) for replica = 0 .. count-1 on a bounded pool. Every
/// replica owns its state, results land in their own slot, so the returned
/// vector is ordered by replica index whatever the scheduling.
template <typename Job>
auto run_replicas(std::uint32_t count, unsigned threads, Job job)
    -> std::vector<ReplicaOutcome<decltype(job(std::uint32_t{}))>> {
  using T = decltype(job(std::uint32_t{}));
  std::vector<ReplicaOutcome<T>> outcomes(count);
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (std::uint32_t r = next++; r < count; r = next++) {
      outcomes[r].replica = r;
      try {
        outcomes[r].value.emplace(job(r));
      } catch (const std::exception& e) {
        outcomes[r].error = e.what();
      }
    }
  };
  const unsigned n = resolve_threads(threads, count);
  if (n == 1) {
    worker();
    return outcomes;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  return outcomes;
}

}  // namespace antwalk::experiment
