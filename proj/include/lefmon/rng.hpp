#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace lefmon {

// mt19937_64 plus rejection sampling: the standard pins the engine's output
// sequence, and rejection avoids the implementation-defined distributions,
// so seeded runs are byte-identical across platforms.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("DetRng::below: zero bound");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = g_();
    } while (x >= limit);
    return x % bound;
  }

  long long in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 g_;
};

// Stable per-task seed derivation (splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace lefmon
