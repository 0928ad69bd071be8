#pragma once
#include <cstdint>

namespace eo {

// splitmix64. Deterministic across platforms; every randomized routine in the
// library takes one of these (or a seed) so runs are reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform on [0, n), rejection sampled so there is no modulo bias
  uint64_t below(uint64_t n) {
    uint64_t limit = ~0ull - (~0ull % n);
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

 private:
  uint64_t state_;
};

}  // namespace eo
