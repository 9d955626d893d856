#ifndef ESQ_RNG_HPP
#define ESQ_RNG_HPP

#include <array>
#include <cstdint>

namespace esq::rng {

/// SplitMix64; used only to expand seeds.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

/// xoshiro256** 1.0 (Blackman/Vigna). Platform-independent sequence.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
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

  /// Uniform draw from [0, bound); Lemire's multiply-shift with rejection,
  /// no modulo bias. bound must be >= 1.
  std::uint64_t bounded(std::uint64_t bound) {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    std::uint64_t l = static_cast<std::uint64_t>(m);
    if (l < bound) {
      std::uint64_t threshold = -bound % bound;
      while (l < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        l = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_;
};

/// Stream-splitting rule: stream k of a master seed is a Xoshiro256 seeded
/// with master_seed XOR (k+1)*phi64, expanded through SplitMix64.
inline Xoshiro256 make_stream(std::uint64_t master_seed, std::uint64_t k) {
  return Xoshiro256(master_seed ^ ((k + 1) * 0x9e3779b97f4a7c15ULL));
}

}  // namespace esq::rng

#endif
