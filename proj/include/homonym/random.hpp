#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace homonym {

// SplitMix64 finalizer. Used for seed derivation and for hashing keys.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic random stream with a 64-bit seed.
///
/// Streams are split by key path rather than by advancing a parent, so the
/// sub-stream for (seed, i, j) is the same no matter which worker creates it
/// or in what order.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

  Stream derive(std::initializer_list<std::uint64_t> keys) const {
    std::uint64_t s = mix64(seed_ ^ 0x5851f42d4c957f2dULL);
    for (std::uint64_t k : keys) s = mix64(s ^ mix64(k));
    return Stream(s);
  }

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace homonym
