#pragma once
#include <cstdint>
#include <string>

namespace zetafn {

// Deterministic generator with named substreams.  xoshiro256** seeded through
// splitmix64; bounded draws use Lemire rejection so the byte stream is
// identical on every platform (std:: distributions are not pinned down).
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next();
  // Uniform in [0, bound), bound >= 1.
  uint64_t below(uint64_t bound);
  // Uniform in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi);
  bool coin();
  double unit();  // [0,1), 53-bit

  // Independent substream: reseeds from (master_seed, label).  Use one label
  // per algorithmic role so adding draws in one place never shifts another.
  Rng fork(const std::string& label) const;

  uint64_t master() const { return master_; }

 private:
  uint64_t s_[4];
  uint64_t master_;
};

uint64_t splitmix64(uint64_t& state);
uint64_t fnv1a64(const std::string& s);

}  // namespace zetafn
