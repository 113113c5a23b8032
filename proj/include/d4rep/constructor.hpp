#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "d4rep/character.hpp"
#include "d4rep/mat2.hpp"

namespace d4rep {

enum class Branch { generic, equal };

inline const char* branch_name(Branch b) { return b == Branch::generic ? "generic" : "equal"; }

// Hermitian generator triple of the anticommutation system
//   {y,z} = gamma1 e,  {z,x} = gamma2 e,  {x,y} = gamma3 e,  (x+y+z)^2 = alpha4^2 e
// (all gamma = 0 and alpha4 = 1/2 in the equal branch, where additionally
// x^2 + y^2 + z^2 = e/4).
struct XYZTriple {
  Mat2 x, y, z;
  Branch branch{Branch::generic};
};

// Four rank-1 Hermitian projectors with sum_i alpha_i P_i = I.
struct ProjectorQuadruple {
  std::array<Mat2, 4> p{};
  Character character;
};

struct RPair {
  double r1{}, r2{};
};

// Wraps an angle to (-pi, pi]. Exact for inputs already in the interval.
inline double wrap_angle(double chi) {
  double w = std::remainder(chi, 2.0 * M_PI);
  if (w <= -M_PI) w += 2.0 * M_PI;
  return w;
}

// distance on the circle, in [0, pi]
inline double circle_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

namespace detail {

inline double clamped_sqrt(double radicand, const char* which) {
  if (radicand < -kTol.radicand_clamp) {
    throw Error(Errc::LambdaOutOfRange,
                std::string(which) + " radicand = " + std::to_string(radicand) +
                    " is negative; lambda outside the admissible interval");
  }
  return std::sqrt(std::max(0.0, radicand));
}

}  // namespace detail

// Off-diagonal moduli of Y and Z in canonical position:
//   r1^2 = -4 l^4 + 2 (a1^2 + a4^2) l^2 - (a4^2 - a1^2)^2 / 4
//   r2^2 = -4 l^4 + 2 (a2^2 + a3^2) l^2 - (a3^2 - a2^2)^2 / 4
// Radicands within kTol.radicand_clamp of zero are clamped (closed-interval
// boundary roundoff); genuinely negative radicands throw LambdaOutOfRange.
inline RPair r_values(const Character& c, double lambda) {
  const double a1 = c[0], a2 = c[1], a3 = c[2], a4 = c[3];
  const double l2 = lambda * lambda;
  const double rad1 =
      -4.0 * l2 * l2 + 2.0 * (a1 * a1 + a4 * a4) * l2 - 0.25 * (a4 * a4 - a1 * a1) * (a4 * a4 - a1 * a1);
  const double rad2 =
      -4.0 * l2 * l2 + 2.0 * (a2 * a2 + a3 * a3) * l2 - 0.25 * (a3 * a3 - a2 * a2) * (a3 * a3 - a2 * a2);
  return {detail::clamped_sqrt(rad1, "r1"), detail::clamped_sqrt(rad2, "r2")};
}

// Generic-branch triple in canonical position:
//   X = lambda diag(-1, 1)
//   Y = (1/2 lambda) [[-gamma3, y12], [conj(y12), gamma3]]
//   Z = (1/2 lambda) [[-gamma2, z12], [conj(z12), gamma2]]
// with y12 = (r1 - r2 e^{i chi})/2 and z12 = (r1 + r2 e^{i chi})/2, the gauge
// in which y12 + z12 = r1 is real nonnegative.
inline XYZTriple build_xyz_generic(const Character& c, double lambda, double chi) {
  const DerivedConstants d = derived_constants(c);
  if (d.gamma[2] < kTol.gamma_degenerate) {
    throw Error(Errc::DegenerateCharacter, "gamma_3 = 0; use build_xyz_equal");
  }
  if (!(lambda > 0.0)) {
    throw Error(Errc::LambdaOutOfRange, "lambda must be positive in the generic branch");
  }
  const RPair r = r_values(c, lambda);
  chi = wrap_angle(chi);
  const Complex phase = std::polar(1.0, chi);
  const Complex y12 = 0.5 * (r.r1 - r.r2 * phase);
  const Complex z12 = 0.5 * (r.r1 + r.r2 * phase);
  const double inv = 1.0 / (2.0 * lambda);
  XYZTriple t;
  t.branch = Branch::generic;
  t.x = Mat2::diag(-lambda, lambda);
  t.y = {Complex(-d.gamma[2] * inv), inv * y12, inv * std::conj(y12), Complex(d.gamma[2] * inv)};
  t.z = {Complex(-d.gamma[1] * inv), inv * z12, inv * std::conj(z12), Complex(d.gamma[1] * inv)};
  return t;
}

// Equal-branch triple:
//   X = lambda diag(-1, 1),  Y = mu [[0,1],[1,0]],  Z = nu [[0,i],[-i,0]]
// subject to lambda^2 + mu^2 + nu^2 = 1/4 and one of the indecomposable sign
// patterns: (lambda>0, mu>0, nu real), (lambda=0, mu>0, nu>0), or
// (lambda>0, mu=0, nu>0). Anything else is a decomposable configuration.
inline XYZTriple build_xyz_equal(double lambda, double mu, double nu) {
  const double s = lambda * lambda + mu * mu + nu * nu;
  if (std::abs(s - 0.25) > kTol.character_sum) {
    throw Error(Errc::ConstraintViolated,
                "lambda^2 + mu^2 + nu^2 = " + std::to_string(s) + ", expected 1/4");
  }
  const bool pattern_a = lambda > 0.0 && mu > 0.0;                 // nu any real
  const bool pattern_b = lambda == 0.0 && mu > 0.0 && nu > 0.0;
  const bool pattern_c = lambda > 0.0 && mu == 0.0 && nu > 0.0;
  if (!(pattern_a || pattern_b || pattern_c)) {
    throw Error(Errc::SignPatternInvalid, "sign pattern gives a decomposable triple");
  }
  XYZTriple t;
  t.branch = Branch::equal;
  t.x = Mat2::diag(-lambda, lambda);
  t.y = {0.0, Complex(mu), Complex(mu), 0.0};
  t.z = {0.0, Complex(0.0, nu), Complex(0.0, -nu), 0.0};
  return t;
}

// Largest deviation of the triple from the anticommutation system of the
// given character (gamma = 0, alpha4 = 1/2 covers the equal branch).
inline double relation_residual(const XYZTriple& t, const Character& c) {
  const DerivedConstants d = derived_constants(c);
  const Mat2 I = Mat2::identity();
  const Mat2 s = t.x + t.y + t.z;
  double res = norm_max(anticommutator(t.y, t.z) - d.gamma[0] * I);
  res = std::max(res, norm_max(anticommutator(t.z, t.x) - d.gamma[1] * I));
  res = std::max(res, norm_max(anticommutator(t.x, t.y) - d.gamma[2] * I));
  res = std::max(res, norm_max(s * s - (c[3] * c[3]) * I));
  return res;
}

// Inverts the generator substitution:
//   P1 = (-x+y+z)/(2 a1) + I/2,  P2 = (x-y+z)/(2 a2) + I/2,
//   P3 = (x+y-z)/(2 a3) + I/2,  P4 = (-x-y-z)/(2 a4) + I/2.
// The triple must satisfy the anticommutation system within
// kTol.relation_residual, otherwise the output would not be projectors.
inline ProjectorQuadruple projectors_from_xyz(const XYZTriple& t, const Character& c) {
  const double res = relation_residual(t, c);
  if (!(res <= kTol.relation_residual)) {
    throw Error(Errc::RelationResidualTooLarge,
                "triple fails the anticommutation relations (residual " + std::to_string(res) + ")");
  }
  const Mat2 half = Mat2::diag(0.5, 0.5);
  ProjectorQuadruple q;
  q.character = c;
  q.p[0] = (1.0 / (2.0 * c[0])) * (-t.x + t.y + t.z) + half;
  q.p[1] = (1.0 / (2.0 * c[1])) * (t.x - t.y + t.z) + half;
  q.p[2] = (1.0 / (2.0 * c[2])) * (t.x + t.y - t.z) + half;
  q.p[3] = (1.0 / (2.0 * c[3])) * (-(t.x + t.y + t.z)) + half;
  return q;
}

// Recovers the generator triple from a quadruple:
//   x = a2 P2 + a3 P3 - (beta1/2) I,  y = a1 P1 + a3 P3 - (beta2/2) I,
//   z = a1 P1 + a2 P2 - (beta3/2) I.
inline XYZTriple xyz_from_projectors(const ProjectorQuadruple& q) {
  const Character& c = q.character;
  const DerivedConstants d = derived_constants(c);
  XYZTriple t;
  t.branch = is_equal_branch(c) ? Branch::equal : Branch::generic;
  t.x = c[1] * q.p[1] + c[2] * q.p[2] - Mat2::diag(d.beta[0] / 2.0, d.beta[0] / 2.0);
  t.y = c[0] * q.p[0] + c[2] * q.p[2] - Mat2::diag(d.beta[1] / 2.0, d.beta[1] / 2.0);
  t.z = c[0] * q.p[0] + c[1] * q.p[1] - Mat2::diag(d.beta[2] / 2.0, d.beta[2] / 2.0);
  return t;
}

// Equal-branch projector family over the all-1/2 character, m = sqrt(1/4 - l^2):
//   P1 = [[1/2-l, m],[m, 1/2+l]]        P2 = [[1/2+l,  e^{i chi} m],[ e^{-i chi} m, 1/2-l]]
//   P3 = [[1/2+l, -e^{i chi} m],[-e^{-i chi} m, 1/2-l]]   P4 = [[1/2-l, -m],[-m, 1/2+l]]
// The P3 off-diagonal uses the Hermiticity-consistent phase (see
// closed_form_p3_literal for the alternative reading). No domain check; use
// build_projectors_equal for the fundamental-domain gate.
inline ProjectorQuadruple equal_family(double lambda, double chi) {
  const double m = std::sqrt(std::max(0.0, 0.25 - lambda * lambda));
  const Complex e = std::polar(1.0, chi);
  ProjectorQuadruple q;
  q.character = equal_character();
  q.p[0] = {Complex(0.5 - lambda), Complex(m), Complex(m), Complex(0.5 + lambda)};
  q.p[1] = {Complex(0.5 + lambda), e * m, std::conj(e) * m, Complex(0.5 - lambda)};
  q.p[2] = {Complex(0.5 + lambda), -e * m, -std::conj(e) * m, Complex(0.5 - lambda)};
  q.p[3] = {Complex(0.5 - lambda), Complex(-m), Complex(-m), Complex(0.5 + lambda)};
  return q;
}

// Fundamental domain of the equal-branch family:
//   lambda = 0 and 0 < chi < pi/2, or 0 < lambda < 1/2 and -pi/2 < chi <= pi/2.
inline bool equal_domain_contains(double lambda, double chi) {
  if (lambda == 0.0) return 0.0 < chi && chi < M_PI / 2.0;
  if (0.0 < lambda && lambda < 0.5) return -M_PI / 2.0 < chi && chi <= M_PI / 2.0;
  return false;
}

inline ProjectorQuadruple build_projectors_equal(double lambda, double chi) {
  if (!equal_domain_contains(lambda, chi)) {
    throw Error(Errc::DomainViolation,
                "(lambda, chi) outside the equal-branch fundamental domain");
  }
  return equal_family(lambda, chi);
}

// Generic-branch closed-form projector displays (second computation path,
// asserted against projectors_from_xyz . build_xyz_generic by the tests).
// P3's off-diagonal phase is the Hermiticity-consistent e^{i chi} in the
// (1,2) slot; the cancellation of the off-diagonals in sum_i alpha_i P_i
// forces this reading.
inline std::array<Mat2, 4> closed_form_projectors(const Character& c, double lambda,
                                                  double chi) {
  const double a1 = c[0], a2 = c[1], a3 = c[2], a4 = c[3];
  const RPair r = r_values(c, lambda);
  const Complex e = std::polar(1.0, wrap_angle(chi));
  const double l2 = lambda * lambda;
  const double d14 = 0.5 * (a4 * a4 - a1 * a1);
  const double d23 = 0.5 * (a3 * a3 - a2 * a2);
  std::array<Mat2, 4> p;
  {
    const double s = 1.0 / (4.0 * a1 * lambda);
    p[0] = {Complex(s * (2.0 * l2 + 2.0 * a1 * lambda - d14)), Complex(s * r.r1),
            Complex(s * r.r1), Complex(s * (-2.0 * l2 + 2.0 * a1 * lambda + d14))};
  }
  {
    const double s = 1.0 / (4.0 * a2 * lambda);
    p[1] = {Complex(s * (-2.0 * l2 + 2.0 * a2 * lambda + d23)), s * r.r2 * e,
            s * r.r2 * std::conj(e), Complex(s * (2.0 * l2 + 2.0 * a2 * lambda - d23))};
  }
  {
    const double s = 1.0 / (4.0 * a3 * lambda);
    p[2] = {Complex(s * (-2.0 * l2 + 2.0 * a3 * lambda - d23)), -s * r.r2 * e,
            -s * r.r2 * std::conj(e), Complex(s * (2.0 * l2 + 2.0 * a3 * lambda + d23))};
  }
  {
    const double s = 1.0 / (4.0 * a4 * lambda);
    p[3] = {Complex(s * (2.0 * l2 + 2.0 * a4 * lambda + d14)), Complex(-s * r.r1),
            Complex(-s * r.r1), Complex(s * (-2.0 * l2 + 2.0 * a4 * lambda - d14))};
  }
  return p;
}

// The literal printed P3 reading, with -e^{-i chi} in BOTH off-diagonal
// slots. Not Hermitian for chi outside {0, pi}; kept so the verify command
// can report which reading satisfies the invariants.
inline Mat2 closed_form_p3_literal(const Character& c, double lambda, double chi) {
  const double a2 = c[1], a3 = c[2];
  const RPair r = r_values(c, lambda);
  const Complex e = std::polar(1.0, -wrap_angle(chi));
  const double l2 = lambda * lambda;
  const double d23 = 0.5 * (a3 * a3 - a2 * a2);
  const double s = 1.0 / (4.0 * a3 * lambda);
  return {Complex(s * (-2.0 * l2 + 2.0 * a3 * lambda - d23)), -s * r.r2 * e,
          -s * r.r2 * e, Complex(s * (2.0 * l2 + 2.0 * a3 * lambda + d23))};
}

// equal-branch literal P3 reading (same typo pattern as the generic display)
inline Mat2 equal_family_p3_literal(double lambda, double chi) {
  const double m = std::sqrt(std::max(0.0, 0.25 - lambda * lambda));
  const Complex e = std::polar(1.0, -chi);
  return {Complex(0.5 + lambda), -e * m, -e * m, Complex(0.5 - lambda)};
}

// Worst-case deviations of a quadruple from its defining relations.
struct QuadrupleResiduals {
  double hermiticity{};  // max_i |P_i - P_i*|
  double idempotence{};  // max_i |P_i^2 - P_i|
  double trace{};        // max_i |tr P_i - 1|
  double sum{};          // |sum_i alpha_i P_i - I|

  double max() const {
    return std::max(std::max(hermiticity, idempotence), std::max(trace, sum));
  }
};

inline QuadrupleResiduals quadruple_residuals(const ProjectorQuadruple& q) {
  QuadrupleResiduals r;
  Mat2 weighted = Mat2::zero();
  for (int i = 0; i < 4; ++i) {
    const Mat2& p = q.p[static_cast<std::size_t>(i)];
    r.hermiticity = std::max(r.hermiticity, hermiticity_residual(p));
    r.idempotence = std::max(r.idempotence, norm_max(p * p - p));
    r.trace = std::max(r.trace, std::abs(p.trace() - 1.0));
    weighted = weighted + q.character[i] * p;
  }
  r.sum = norm_max(weighted - Mat2::identity());
  return r;
}

inline bool is_valid_quadruple(const ProjectorQuadruple& q, double tol = kTol.quadruple) {
  return quadruple_residuals(q).max() <= tol;
}

}  // namespace d4rep
