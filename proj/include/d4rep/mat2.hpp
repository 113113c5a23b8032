#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "d4rep/error.hpp"
#include "d4rep/tolerances.hpp"

namespace d4rep {

using Complex = std::complex<double>;

// 2x2 complex matrix, row major. Plain value type; entries are expected to
// stay finite, the operation preconditions reject NaN/Inf inputs.
struct Mat2 {
  Complex a11{}, a12{}, a21{}, a22{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
  static Mat2 diag(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }

  Mat2 adjoint() const {
    return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
  }
  Complex trace() const { return a11 + a22; }
  Complex det() const { return a11 * a22 - a12 * a21; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}
inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}
inline Mat2 operator-(const Mat2& a) { return {-a.a11, -a.a12, -a.a21, -a.a22}; }
inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}
inline Mat2 operator*(Complex s, const Mat2& m) {
  return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}
inline Mat2 operator*(double s, const Mat2& m) { return Complex(s) * m; }

inline Mat2 anticommutator(const Mat2& a, const Mat2& b) { return a * b + b * a; }
inline Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

// max |entry|
inline double norm_max(const Mat2& m) {
  return std::max(std::max(std::abs(m.a11), std::abs(m.a12)),
                  std::max(std::abs(m.a21), std::abs(m.a22)));
}

inline double hermiticity_residual(const Mat2& m) { return norm_max(m - m.adjoint()); }
inline double unitarity_residual(const Mat2& u) {
  return norm_max(u * u.adjoint() - Mat2::identity());
}

// column vector in C^2
struct Vec2 {
  Complex v1{}, v2{};

  double norm() const { return std::sqrt(std::norm(v1) + std::norm(v2)); }
};

inline Vec2 operator*(Complex s, const Vec2& v) { return {s * v.v1, s * v.v2}; }
inline Vec2 operator*(double s, const Vec2& v) { return Complex(s) * v; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.v1 - b.v1, a.v2 - b.v2}; }

// <a, b> = a* b, antilinear in the first argument
inline Complex inner(const Vec2& a, const Vec2& b) {
  return std::conj(a.v1) * b.v1 + std::conj(a.v2) * b.v2;
}
// v w*
inline Mat2 outer(const Vec2& v, const Vec2& w) {
  return {v.v1 * std::conj(w.v1), v.v1 * std::conj(w.v2), v.v2 * std::conj(w.v1),
          v.v2 * std::conj(w.v2)};
}
inline Vec2 operator*(const Mat2& m, const Vec2& v) {
  return {m.a11 * v.v1 + m.a12 * v.v2, m.a21 * v.v1 + m.a22 * v.v2};
}

// Multiplies v by the unit phase making its first component real >= 0.
// Components of magnitude below 1e-12 (relative to a unit vector) are treated
// as zero and the anchor moves to the next component; this is the
// deterministic gauge used everywhere phases are fixed.
inline Vec2 fix_phase(Vec2 v) {
  constexpr double anchor_floor = 1e-12;
  if (std::abs(v.v1) > anchor_floor) {
    const double mag = std::abs(v.v1);
    return {Complex(mag), (std::conj(v.v1) / mag) * v.v2};
  }
  const double mag = std::abs(v.v2);
  if (mag == 0.0) return v;
  return {(std::conj(v.v2) / mag) * v.v1, Complex(mag)};
}

struct Eigen2 {
  std::array<double, 2> eigenvalues{};  // ascending
  Mat2 u;                               // columns are the eigenvectors
};

// Closed-form eigendecomposition of a 2x2 Hermitian matrix.
// u* m u is diagonal with ascending real diagonal. Deterministic: eigenvector
// phases are fixed by fix_phase, and a spectrum gap below kTol.degenerate_gap
// returns u = I (callers treat near-scalar matrices separately).
inline Eigen2 eigen_h2(const Mat2& m, double tol = kTol.hermitian_input) {
  const double scale = std::max(1.0, norm_max(m));
  if (!(hermiticity_residual(m) <= tol * scale)) {
    throw Error(Errc::NotHermitian, "matrix is not Hermitian within tolerance");
  }
  const double a = m.a11.real();
  const double d = m.a22.real();
  const Complex b = m.a12;
  const double half_diff = 0.5 * (a - d);
  const double disc = std::sqrt(half_diff * half_diff + std::norm(b));
  const double mean = 0.5 * (a + d);
  Eigen2 out;
  out.eigenvalues = {mean - disc, mean + disc};
  if (2.0 * disc < kTol.degenerate_gap) {
    out.u = Mat2::identity();
    return out;
  }
  // Two algebraically equivalent eigenvector candidates for the smaller
  // eigenvalue; pick the larger one to avoid cancellation.
  const double mu = out.eigenvalues[0];
  const double n_first = std::norm(b) + (mu - a) * (mu - a);
  const double n_second = (mu - d) * (mu - d) + std::norm(b);
  Vec2 v = n_first >= n_second ? Vec2{b, Complex(mu - a)} : Vec2{Complex(mu - d), std::conj(b)};
  v = (1.0 / v.norm()) * v;
  v = fix_phase(v);
  Vec2 w = fix_phase(Vec2{-std::conj(v.v2), std::conj(v.v1)});
  out.u = {v.v1, w.v1, v.v2, w.v2};
  return out;
}

// u m u*. Throws NotUnitary when u fails |u u* - I| <= tol.
inline Mat2 conjugate(const Mat2& u, const Mat2& m, double tol = kTol.unitary_input) {
  if (!(unitarity_residual(u) <= tol)) {
    throw Error(Errc::NotUnitary, "conjugating matrix is not unitary within tolerance");
  }
  return u * m * u.adjoint();
}

}  // namespace d4rep
