#pragma once

#include <cstdint>
#include <random>

namespace coeffbounds {

/// Engine for position `index` of the stream identified by `seed`. Streams are
/// independent of how a batch is split, so concurrent generation is reproducible.
inline std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform on [0, 1) with 53 random bits. Spelled out rather than using
/// std::uniform_real_distribution, whose output differs between standard libraries.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace coeffbounds
