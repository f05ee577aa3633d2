#pragma once

#include <cstdint>
#include <random>

namespace sensnet {

// splitmix64 step, used as a seed mixer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for an independent substream. Trials, tiles and experiment stages each
// draw from their own substream so results do not depend on execution order
// or thread scheduling.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace sensnet
