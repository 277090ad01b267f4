#include "core/rng.hpp"

namespace zetafn {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rng::Rng(uint64_t seed) : master_(seed) {
  uint64_t sm = seed;
  for (auto& w : s_) w = splitmix64(sm);
}

static inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

uint64_t Rng::next() {
  uint64_t result = rotl(s_[1] * 5, 7) * 9;
  uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

uint64_t Rng::below(uint64_t bound) {
  // Lemire multiply-shift with rejection on the low product.
  uint64_t x = next();
  __uint128_t m = (__uint128_t)x * bound;
  uint64_t l = (uint64_t)m;
  if (l < bound) {
    uint64_t t = (0 - bound) % bound;
    while (l < t) {
      x = next();
      m = (__uint128_t)x * bound;
      l = (uint64_t)m;
    }
  }
  return (uint64_t)(m >> 64);
}

int64_t Rng::range(int64_t lo, int64_t hi) {
  return lo + (int64_t)below((uint64_t)(hi - lo) + 1);
}

bool Rng::coin() { return next() >> 63; }

double Rng::unit() { return (next() >> 11) * 0x1.0p-53; }

Rng Rng::fork(const std::string& label) const {
  return Rng(master_ ^ fnv1a64(label));
}

}  // namespace zetafn
