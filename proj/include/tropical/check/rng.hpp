#pragma once

// Deterministic randomness for the property harness.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are not (their algorithms are left to
// the library), so every draw below is built directly from raw 64-bit
// outputs. Trial t of a run with seed s uses the engine seeded with
// splitmix64(s ^ splitmix64(t)), which makes trials independent of each other
// and of the order they run in.

#include <cstdint>
#include <random>

namespace tropical::check {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  return splitmix64(seed ^ splitmix64(trial));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, n) by rejection; n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
  }

  /// Uniform on [lo, hi].
  long between(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <class Seq>
  auto& pick(Seq& seq) {
    return seq[below(seq.size())];
  }

  template <class Seq>
  void shuffle(Seq& seq) {
    for (std::size_t i = seq.size(); i > 1; --i) std::swap(seq[i - 1], seq[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tropical::check
