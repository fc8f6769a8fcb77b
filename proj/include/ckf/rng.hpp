#pragma once

#include <cstdint>
#include <random>

namespace ckf {

/// Engine for the sample with index `counter` in the stream `seed`. Every sample
/// owns its engine, so batches give the same draws whatever the thread layout.
inline std::mt19937_64 counter_engine(std::uint64_t seed, std::uint64_t counter) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32),
                    0x636b66u};
  return std::mt19937_64(seq);
}

/// Standard normal draw. std::normal_distribution caches a second variate, so a
/// fresh distribution object per call keeps the stream position well-defined.
inline double gaussian(std::mt19937_64& eng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  return nd(eng);
}

}  // namespace ckf
