#ifndef SEGREKIT_PRNG_HPP
#define SEGREKIT_PRNG_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "segrekit/rational.hpp"

namespace segrekit {

// Deterministic, platform-independent generator (splitmix64).  All
// randomness in the toolkit flows from one config seed through named
// streams, so independent checks draw from independent substreams and
// reports are reproducible byte for byte.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // in [0, 1)
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // in [lo, hi] inclusive
  int64_t next_int(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  // rational with numerator in [-num_range, num_range], denominator in [1, den_range]
  Rat next_rational(long num_range = 1024, long den_range = 64) {
    Rat r(next_int(-num_range, num_range), next_int(1, den_range));
    r.canonicalize();
    return r;
  }

  ComplexRational next_crat(long num_range = 1024, long den_range = 64) {
    Rat a = next_rational(num_range, den_range);
    return {a, next_rational(num_range, den_range)};
  }

  std::complex<double> next_unit_complex() {
    double t = next_double() * 6.283185307179586476925286766559;
    return {std::cos(t), std::sin(t)};
  }

  // Exact rational point on the unit circle (Pythagorean parametrization).
  ComplexRational next_rational_unit() {
    Rat t = next_rational(64, 16);
    Rat t2(t * t);
    Rat den(1 + t2);
    Rat re((1 - t2) / den), im(2 * t / den);
    return {re, im};
  }

  // Derives an independent substream identified by name.
  Rng derive(std::string_view name) const {
    uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (char c : name) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return Rng(state_ ^ h);
  }

 private:
  uint64_t state_;
};

}  // namespace segrekit

#endif
