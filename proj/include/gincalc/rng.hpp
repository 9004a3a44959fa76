#ifndef GINCALC_RNG_HPP
#define GINCALC_RNG_HPP

#include <cstdint>

namespace gincalc {

/// Deterministic splitmix64 stream. Used for every random choice in the
/// project so that a single root seed reproduces a run bit-for-bit across
/// platforms (the standard <random> distributions are not portable).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); n must be positive.
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  /// Independent child stream, e.g. one per trial or per trace.
  Rng split() { return Rng(next() ^ 0xD1B54A32D192ED03ULL); }

private:
  std::uint64_t state_;
};

}  // namespace gincalc

#endif
