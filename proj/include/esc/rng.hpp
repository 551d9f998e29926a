#pragma once

#include <cstdint>

namespace esc {

// Counter-based pseudo-random generator (splitmix64). Every output is a pure
// function of (seed, draw index), so streams are reproducible across
// platforms, compilers and library versions; that reproducibility is part of
// the library's contract. `substream(i)` derives a disjoint stream for
// worker i without sharing state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 random bits; consumes exactly one next_u64().
  double next_uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). Multiply-shift reduction; the residual
  // bias is O(bound / 2^64) and irrelevant at the bounds used here.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  // Derived generator for parallel worker `index`; independent of draws made
  // on this generator and stable for any thread count.
  CounterRng substream(std::uint64_t index) const noexcept {
    CounterRng mixer(state_ ^ (0xd1342543de82ef95ull + index * 0x9e3779b97f4a7c15ull));
    return CounterRng(mixer.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace esc
