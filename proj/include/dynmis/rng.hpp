#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dynmis {

// Seeded random source with platform-independent bounded draws.
// std::mt19937_64 output is pinned by the standard; the reductions here
// avoid std::uniform_int_distribution, whose mapping is
// implementation-defined, so replays are byte-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  void reseed(std::uint64_t seed) { engine_.seed(seed); }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection with a power-of-two mask keeps the draw unbiased.
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      std::uint64_t x = engine_() & mask;
      if (x < bound) return x;
    }
  }

  // True with exact probability num/den (clamped to 1 when num >= den).
  bool chance(std::uint64_t num, std::uint64_t den) {
    if (num >= den) return true;
    if (num == 0) return false;
    return below(den) < num;
  }

  // True with probability p for p in [0, 1). Threshold comparison on the
  // raw 64-bit draw keeps the coin deterministic.
  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0);
    return engine_() < threshold;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dynmis
