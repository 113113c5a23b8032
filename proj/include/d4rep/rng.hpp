#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "d4rep/mat2.hpp"

namespace d4rep {

// SplitMix64 (Steele, Lea & Flood; the generator behind Java's
// SplittableRandom). Chosen because the state transition and output mix are
// exact 64-bit integer arithmetic, so streams are bit-reproducible across
// platforms. Substreams are derived with derive(): substream k re-seeds the
// generator with the finalizer applied to seed xor (k+1)*golden, which keeps
// per-trial streams statistically independent of each other and of the base
// stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53-bit mantissa
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in (0, 1], safe as a log() argument
  double next_double_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // standard normal via Box-Muller
  std::array<double, 2> normal_pair() {
    const double u1 = next_double_open();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  // uniform on the unit 2-sphere
  std::array<double, 3> unit_sphere() {
    const double z = 1.0 - 2.0 * next_double();
    const double phi = 2.0 * M_PI * next_double();
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {rho * std::cos(phi), rho * std::sin(phi), z};
  }

  // Haar-ish random SU(2) element from a normalized quaternion
  Mat2 random_unitary() {
    auto [q0, q1] = normal_pair();
    auto [q2, q3] = normal_pair();
    const double n = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    q0 /= n;
    q1 /= n;
    q2 /= n;
    q3 /= n;
    // q0 I + i (q1 sx + q2 sy + q3 sz)
    return {Complex(q0, q3), Complex(q2, q1), Complex(-q2, q1), Complex(q0, -q3)};
  }

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t substream) {
    std::uint64_t z = seed ^ ((substream + 1) * 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace d4rep
