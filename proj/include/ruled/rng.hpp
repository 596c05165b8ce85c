#pragma once

#include <cstdint>

namespace ruled {

// Splittable counter-based generator (splitmix64 core).  Every randomized
// construction takes an explicit Rng so that identical seeds reproduce
// byte-identical artifacts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Independent stream derived from this seed and a purpose tag.
  Rng fork(std::uint64_t tag) const {
    Rng r(state_ ^ (0x632be59bd9b4e019ULL * (tag + 1)));
    r.next();
    return r;
  }

  // Uniform residue in [0, m).
  std::int64_t below(std::int64_t m) { return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(m)); }

  // Nonzero residue in [1, m).
  std::int64_t nonzeroBelow(std::int64_t m) { return 1 + below(m - 1); }

 private:
  std::uint64_t state_;
};

}  // namespace ruled
