#pragma once

#include <cstdint>

namespace grasscodim {

// Small deterministic generator (splitmix64).  std::uniform_int_distribution
// is not pinned down by the standard, so bounded draws are done by hand to
// keep runs reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n); the modulo bias is irrelevant at the sizes
  // used here (n far below 2^32).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  bool coin() { return (next() & 1) != 0; }

  // Derives an independent child seed from a label, so subtasks can be
  // reordered without perturbing each other's streams.
  Rng child(std::uint64_t label) const {
    Rng r(state_ ^ (0x9e3779b97f4a7c15ULL * (label + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace grasscodim
