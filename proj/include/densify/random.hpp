#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace densify {

using Rng = std::mt19937_64;

// SplitMix64 finalizer; a bijective 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based stream key: the seed of stream (master, c0, c1, ...) depends on
// nothing but its coordinates, so trials can be partitioned across any number
// of workers without changing what each trial draws.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> counters) noexcept {
  std::uint64_t h = mix64(master);
  for (std::uint64_t c : counters) h = mix64(h ^ mix64(c + 0x632be59bd9b4e019ULL));
  return h;
}

inline Rng make_stream(std::uint64_t master, std::initializer_list<std::uint64_t> counters) {
  return Rng(derive_seed(master, counters));
}

}  // namespace densify
