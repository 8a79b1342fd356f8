#pragma once

#include <cstdint>

namespace hca {

/// splitmix64. Deterministic across platforms and standard-library
/// implementations, which std:: distributions are not; all randomized
/// suites and seeded scenario draws go through this.
struct Rng {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], inclusive.
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

/// Stream-indexed derivation so independent trials draw independent,
/// order-insensitive sequences from one seed.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  Rng r{seed + 0x9e3779b97f4a7c15ULL * (stream + 1)};
  r.next();
  r.next();
  return r;
}

}  // namespace hca
