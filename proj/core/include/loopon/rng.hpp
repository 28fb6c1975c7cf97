#pragma once

#include <cstdint>

namespace loopon {

// xoshiro256** with splitmix64 seeding; fixed across platforms so that seeded
// runs are bit-reproducible everywhere.
class Xoshiro256ss {
 public:
  static constexpr const char* kName = "xoshiro256**";

  explicit Xoshiro256ss(std::uint64_t seed) {
    std::uint64_t z = seed;
    for (auto& w : s_) {
      z += 0x9e3779b97f4a7c15ULL;
      std::uint64_t x = z;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      w = x ^ (x >> 31);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53 bits.
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform in {0, ..., bound-1}; bound > 0. Modulo is biased by less than
  // bound/2^64, negligible at the bounds used here, and keeps the stream
  // consumption deterministic.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

}  // namespace loopon
