#pragma once

#include <array>
#include <cmath>
#include <string>

#include "d4rep/error.hpp"
#include "d4rep/tolerances.hpp"

namespace d4rep {

// Weight vector (alpha_1..alpha_4) of a regular representation, normalized so
// the center weight alpha_0 = 1. Valid characters satisfy
//   0 < alpha_1 <= alpha_2 <= alpha_3 <= alpha_4 < 1   and   sum = 2.
// Construct through validate_character; the fields are left public because
// the type is a plain value.
struct Character {
  std::array<double, 4> alpha{};
  static constexpr double alpha0 = 1.0;

  double operator[](int i) const { return alpha[static_cast<std::size_t>(i)]; }
};

// beta_i and gamma_i constants of the x, y, z generator substitution.
struct DerivedConstants {
  std::array<double, 3> beta{};
  std::array<double, 3> gamma{};
};

struct Interval {
  double lo{}, hi{};
  bool contains(double x) const { return lo <= x && x <= hi; }
};

inline Character validate_character(const std::array<double, 4>& a) {
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(a[static_cast<std::size_t>(i)])) {
      throw Error(Errc::OutOfRange, "alpha_" + std::to_string(i + 1) + " is not finite", i + 1);
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(i) + 1]) {
      throw Error(Errc::NotSorted, "alpha must be sorted ascending (violated at position " +
                                       std::to_string(i + 1) + ")");
    }
  }
  if (!(a[0] > 0.0)) throw Error(Errc::OutOfRange, "alpha_1 must be > 0", 1);
  if (!(a[3] < 1.0)) throw Error(Errc::OutOfRange, "alpha_4 must be < 1", 4);
  const double sum = a[0] + a[1] + a[2] + a[3];
  if (std::abs(sum - 2.0) > kTol.character_sum) {
    throw Error(Errc::SumNotTwo, "sum(alpha) = " + std::to_string(sum) + ", expected 2");
  }
  return Character{a};
}

// Accepts an unnormalized weight vector (alpha'_0; alpha'_1..alpha'_4) and
// divides through by alpha'_0.
inline Character character_from_raw(const std::array<double, 5>& raw) {
  if (!(raw[0] > 0.0) || !std::isfinite(raw[0])) {
    throw Error(Errc::OutOfRange, "alpha_0 must be finite and > 0", 0);
  }
  return validate_character({raw[1] / raw[0], raw[2] / raw[0], raw[3] / raw[0], raw[4] / raw[0]});
}

inline DerivedConstants derived_constants(const Character& c) {
  const double a1 = c[0], a2 = c[1], a3 = c[2], a4 = c[3];
  DerivedConstants d;
  d.beta = {(2.0 - a1 + a2 + a3 - a4) / 2.0,
            (2.0 + a1 - a2 + a3 - a4) / 2.0,
            (2.0 + a1 + a2 - a3 - a4) / 2.0};
  d.gamma = {(a1 * a1 - a2 * a2 - a3 * a3 + a4 * a4) / 4.0,
             (-a1 * a1 + a2 * a2 - a3 * a3 + a4 * a4) / 4.0,
             (-a1 * a1 - a2 * a2 + a3 * a3 + a4 * a4) / 4.0};
  return d;
}

// gamma_3 = 0 iff all alpha_i = 1/2; such characters use the equal branch.
inline bool is_equal_branch(const Character& c) {
  return derived_constants(c).gamma[2] < kTol.gamma_degenerate;
}

inline Character equal_character() { return Character{{0.5, 0.5, 0.5, 0.5}}; }

// Admissible lambda interval of the generic branch:
//   (alpha4 - alpha1)/2 <= lambda <= min((alpha2 + alpha3)/2, (alpha1 + alpha4)/2).
// The lower bound dominates (alpha3 - alpha2)/2 because of the alpha ordering,
// so both square-root arguments of the r-values are nonnegative exactly on
// this interval.
inline Interval lambda_range(const Character& c) {
  if (is_equal_branch(c)) {
    throw Error(Errc::DegenerateCharacter,
                "gamma_3 = 0 (all alpha = 1/2); use the equal branch");
  }
  const double lo = (c[3] - c[0]) / 2.0;
  const double hi = std::min((c[1] + c[2]) / 2.0, (c[0] + c[3]) / 2.0);
  return {lo, hi};
}

}  // namespace d4rep
