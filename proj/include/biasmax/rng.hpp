#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace biasmax {

// Counter-based 64-bit generator (splitmix64). Output i is a pure function of
// (seed, i), so any stream can be regenerated independently of execution
// order. Portable across platforms: no std:: distributions are used anywhere,
// all sampling goes through next_below/next_double below.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased uniform in [0, n) via rejection.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

  // Derives an independent stream. split(a) and split(b) are decorrelated for
  // a != b, and neither disturbs this generator's state.
  Rng split(std::uint64_t stream) const {
    Rng mixer(state_ ^ 0xA0761D6478BD642FULL);
    mixer.state_ += stream * 0xE7037ED1A0B428DBULL;
    return Rng(mixer.next_u64());
  }

  // Fisher-Yates.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Hash-chains a base seed with a path of indices, e.g.
// derive_seed(base, {kSweep, cell, trial}). Used everywhere a reproducible
// per-cell / per-trial seed is needed.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
  Rng r(base);
  std::uint64_t s = r.next_u64();
  for (std::uint64_t component : path) {
    Rng step(s ^ (component * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL));
    s = step.next_u64();
  }
  return s;
}

}  // namespace biasmax
