#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace antwalk {

// Philox4x32-10 counter-based block function (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3"). Maps a 128-bit counter and a 64-bit key to
// 128 pseudo-random bits.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key) noexcept;
};

/// Reproducible random stream for one replica.
///
/// The key is the 64-bit master seed; counter words 2..3 hold the stream
/// (replica) index and words 0..1 the block index, so streams with different
/// indices never overlap and every draw is a pure function of
/// (master_seed, stream_index, position). Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using result_type = std::uint32_t;

  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;
  std::uint64_t next_u64() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform on (0, 1].
  double uniform_positive() noexcept;
  /// Mean-one exponential by inversion of the CDF.
  double exponential() noexcept;
  bool bernoulli(double p) noexcept { return uniform() < p; }
  /// Unbiased integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  std::uint64_t master_seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_; }

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  unsigned position_ = 4;
};

}  // namespace antwalk
