#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace phlab {

uint64_t splitmix64(uint64_t x);

// Seeded generator. Every random draw in the library goes through this type so
// that a single 64-bit seed reproduces all outputs bit for bit. Children are
// derived from the seed (not the running state) by a label or an index.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t seed() const { return seed_; }
  uint64_t next() { return eng_(); }
  // Uniform integer in [0, n), n > 0.
  uint64_t below(uint64_t n);
  // Uniform double in [0, 1).
  double uniform();
  bool coin() { return (next() >> 63) != 0; }

  Rng split(std::string_view label) const;
  Rng split(uint64_t index) const;

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace phlab
