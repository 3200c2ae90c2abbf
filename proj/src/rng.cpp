#include "phlab/rng.hpp"

namespace phlab {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

uint64_t Rng::below(uint64_t n) {
  // Rejection sampling keeps the draw exactly uniform and portable.
  uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
  for (;;) {
    uint64_t x = next();
    if (x <= limit) return x % n;
  }
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rng Rng::split(std::string_view label) const {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Rng(splitmix64(seed_ ^ splitmix64(h)));
}

Rng Rng::split(uint64_t index) const {
  return Rng(splitmix64(splitmix64(seed_) + 0x632be59bd9b4e019ULL * (index + 1)));
}

}  // namespace phlab
