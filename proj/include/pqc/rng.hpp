#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace pqc {

// SplitMix64 (Steele/Lea/Vigna reference constants). Small state, full
// 64-bit period, and cheap to construct, which is what the per-sample
// substream scheme needs.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 significant bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in [0, 2*pi).
  double uniform_angle() { return uniform() * (2.0 * std::numbers::pi); }

  // Standard normal via Box-Muller; used by the Haar sampling oracle.
  double normal();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline double SplitMix64::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based substream: the generator for (seed, counter) depends only on
// those two values, never on scheduling, so parallel and serial runs draw
// identical numbers.
constexpr SplitMix64 substream(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = mix64(seed + 0x9E3779B97F4A7C15ull * (counter + 1));
  return SplitMix64(mix64(z ^ seed));
}

}  // namespace pqc
