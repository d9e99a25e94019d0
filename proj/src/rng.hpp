/**
 * @file rng.hpp
 * @brief Deterministic seeded random source.  A thin splitmix64 keeps every
 *        sampled value reproducible from the request seed alone, independent
 *        of platform library details (std::uniform_int_distribution is not
 *        specified bit-for-bit across implementations).
 */
#pragma once

#include <cstdint>

namespace sing {

class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-enough value in [0, bound); bound must be nonzero.  The modulo
  /// bias is irrelevant for test sampling and keeps the stream deterministic.
  uint64_t below(uint64_t bound) { return next() % bound; }

  /// Signed value in [-mag, +mag].
  long centered(long mag) { return static_cast<long>(below(2 * static_cast<uint64_t>(mag) + 1)) - mag; }

private:
  uint64_t state_;
};

}  // namespace sing
