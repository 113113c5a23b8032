#pragma once

#include <array>
#include <cmath>

#include "d4rep/constructor.hpp"
#include "d4rep/graphrep.hpp"

namespace d4rep {

// Unitary-equivalence class datum: rebuilding the family member at
// (character, branch, lambda, chi) and conjugating by gauge reproduces the
// input quadruple within kTol.rebuild.
struct CanonicalForm {
  Character character;
  Branch branch{Branch::generic};
  double lambda{};
  double chi{};
  Mat2 gauge = Mat2::identity();
  // Whether chi lies in the finer printed fundamental domain (advisory only;
  // raw chi in (-pi, pi] is what the library reports and compares).
  bool chi_in_advisory_domain{true};
};

struct InvariantVector {
  std::array<double, 6> pairwise{};  // tr(P_i P_j) for (i,j) = 12,13,14,23,24,34
  double triple_im{};                // Im tr(P_1 P_2 P_3)
};

namespace detail {

// Eigenvalues of a symmetric 4x4 matrix by cyclic Jacobi rotations. Only the
// spectrum is needed (singular values of the commutant system).
inline std::array<double, 4> eigenvalues_sym4(std::array<std::array<double, 4>, 4> m) {
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) off += m[i][j] * m[i][j];
    if (off < 1e-300) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        const double theta = 0.5 * std::atan2(2.0 * m[p][q], m[q][q] - m[p][p]);
        const double c = std::cos(theta), s = std::sin(theta);
        for (int k = 0; k < 4; ++k) {
          const double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < 4; ++k) {
          const double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
    }
  }
  return {m[0][0], m[1][1], m[2][2], m[3][3]};
}

// swap columns so u* m u is descending (equal-branch convention: X = diag(l, -l))
inline Mat2 swap_columns(const Mat2& u) { return {u.a12, u.a11, u.a22, u.a21}; }

}  // namespace detail

// Real dimension of the space of Hermitian 2x2 matrices commuting with all
// four projectors. Hermitian C = c0 E11 + c1 E22 + c2 (E12+E21) +
// c3 (i E12 - i E21); each commutator [C, P_i] is anti-Hermitian, giving four
// real equations per projector. The joint constraint is a 16x4 real linear
// map whose rank (singular values above kTol.commutant_sv) is subtracted
// from 4. The identity always commutes, so the result is >= 1; dimension 1
// means indecomposable. Restricting to Hermitian C loses nothing: for
// *-representations C and C* intertwine together.
inline int commutant_dimension(const ProjectorQuadruple& q) {
  const std::array<Mat2, 4> basis = {Mat2{1.0, 0.0, 0.0, 0.0}, Mat2{0.0, 0.0, 0.0, 1.0},
                                     Mat2{0.0, 1.0, 1.0, 0.0},
                                     Mat2{0.0, Complex(0.0, 1.0), Complex(0.0, -1.0), 0.0}};
  // rows: 4 real components of [B_j, P_i] per projector; columns: basis index
  double sys[16][4];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Mat2 d = commutator(basis[static_cast<std::size_t>(j)],
                                q.p[static_cast<std::size_t>(i)]);
      sys[4 * i + 0][j] = d.a11.imag();
      sys[4 * i + 1][j] = d.a22.imag();
      sys[4 * i + 2][j] = d.a12.real();
      sys[4 * i + 3][j] = d.a12.imag();
    }
  }
  std::array<std::array<double, 4>, 4> gram{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int r = 0; r < 16; ++r) s += sys[r][a] * sys[r][b];
      gram[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = s;
    }
  int rank = 0;
  for (double ev : detail::eigenvalues_sym4(gram)) {
    if (std::sqrt(std::max(0.0, ev)) > kTol.commutant_sv) ++rank;
  }
  return 4 - rank;
}

// Conjugation invariants: the six pairwise overlaps tr(P_i P_j) and the
// orientation-sensitive Im tr(P_1 P_2 P_3) (which separates chi from -chi).
inline InvariantVector trace_invariants(const ProjectorQuadruple& q) {
  InvariantVector v;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      v.pairwise[static_cast<std::size_t>(k++)] =
          (q.p[static_cast<std::size_t>(i)] * q.p[static_cast<std::size_t>(j)]).trace().real();
  v.triple_im = (q.p[0] * q.p[1] * q.p[2]).trace().imag();
  return v;
}

// Rebuilds the canonical family member (no gauge applied).
inline ProjectorQuadruple rebuild(const CanonicalForm& f) {
  if (f.branch == Branch::equal) return equal_family(f.lambda, f.chi);
  return projectors_from_xyz(build_xyz_generic(f.character, f.lambda, f.chi), f.character);
}

// Recovers the canonical parameters (lambda, chi) and the gauge unitary from
// an arbitrary valid indecomposable quadruple.
//
// Generic branch: diagonalize x = a2 P2 + a3 P3 - (beta1/2) I ascending
// (X -> diag(-lambda, lambda)), then apply diag(e^{i phi}, 1) making P1's
// (1,2) entry real nonnegative; chi is the argument of P2's (1,2) entry.
// When P1's off-diagonal vanishes (boundary r1 = 0) the phase anchor falls
// back to P2, collapsing the then-gauge-equivalent chi orbit to 0.
//
// Equal branch: same procedure with X diagonalized descending
// (X -> diag(lambda, -lambda), the convention of the printed family). The
// lambda = 0 stratum has X = 0 and is handled by a Bloch-frame gauge: P1's
// range is sent to (1,1)/sqrt(2), then a rotation about the x axis places
// P2's Bloch vector in the xy-plane with y <= 0, so chi becomes the angle
// between the Bloch vectors of P1 and P2.
inline CanonicalForm canonicalize(const ProjectorQuadruple& q) {
  if (!is_valid_quadruple(q, kTol.canon_input)) {
    throw Error(Errc::NotAQuadruple, "input fails the projector quadruple invariants");
  }
  if (commutant_dimension(q) > 1) {
    throw Error(Errc::Decomposable, "commutant dimension exceeds 1");
  }
  CanonicalForm f;
  f.character = q.character;
  const DerivedConstants d = derived_constants(q.character);
  const bool equal = d.gamma[2] < kTol.gamma_degenerate;
  f.branch = equal ? Branch::equal : Branch::generic;

  const Mat2 x = q.character[1] * q.p[1] + q.character[2] * q.p[2] -
                 Mat2::diag(d.beta[0] / 2.0, d.beta[0] / 2.0);
  const Eigen2 eig = eigen_h2(x);
  const double lambda = std::max(0.0, eig.eigenvalues[1]);

  if (equal && lambda < kTol.lambda_zero) {
    f.lambda = 0.0;
    const Vec2 v = range_unit_vector(q.p[0], kTol.canon_input);
    const Mat2 basis{v.v1, -std::conj(v.v2), v.v2, std::conj(v.v1)};
    const double h = 1.0 / std::sqrt(2.0);
    const Mat2 hadamard{Complex(h), Complex(h), Complex(h), Complex(-h)};
    const Mat2 w1 = basis * hadamard;
    const Mat2 q2 = w1.adjoint() * q.p[1] * w1;
    const double mx = 2.0 * q2.a12.real();
    const double my = -2.0 * q2.a12.imag();
    const double mz = (q2.a11 - q2.a22).real();
    const double s = std::sqrt(my * my + mz * mz);
    f.chi = std::atan2(s, mx);
    const double theta = 0.5 * (std::atan2(mz, my) - M_PI);
    const Mat2 rot{Complex(std::cos(theta)), Complex(0.0, std::sin(theta)),
                   Complex(0.0, std::sin(theta)), Complex(std::cos(theta))};
    f.gauge = w1 * rot.adjoint();
    f.chi_in_advisory_domain = 0.0 < f.chi && f.chi < M_PI / 2.0;
    return f;
  }

  f.lambda = lambda;
  const Mat2 u = equal ? detail::swap_columns(eig.u) : eig.u;
  std::array<Mat2, 4> t;
  for (int i = 0; i < 4; ++i)
    t[static_cast<std::size_t>(i)] = u.adjoint() * q.p[static_cast<std::size_t>(i)] * u;
  Complex anchor = t[0].a12;
  if (std::abs(anchor) < kTol.phase_zero) anchor = t[1].a12;
  const double phi = std::abs(anchor) < kTol.phase_zero ? 0.0 : -std::arg(anchor);
  const Mat2 vphase = Mat2::diag(std::polar(1.0, phi), 1.0);
  const Complex p2_off = (vphase * t[1] * vphase.adjoint()).a12;
  f.chi = std::abs(p2_off) < kTol.phase_zero ? 0.0 : std::arg(p2_off);
  f.gauge = u * vphase.adjoint();
  f.chi_in_advisory_domain = equal ? (-M_PI / 2.0 < f.chi && f.chi <= M_PI / 2.0) : true;
  return f;
}

// true iff a and b are unitarily equivalent within tol: characters must
// match entrywise, then the canonical forms are compared in (branch, lambda,
// chi) with chi measured on the circle. If either side is decomposable the
// comparison falls back to the trace-invariant vectors.
inline bool unitary_equivalent(const ProjectorQuadruple& a, const ProjectorQuadruple& b,
                               double tol) {
  for (int i = 0; i < 4; ++i) {
    if (std::abs(a.character[i] - b.character[i]) > tol) {
      throw Error(Errc::CharacterMismatch, "characters differ beyond tolerance");
    }
  }
  bool fell_back = false;
  CanonicalForm fa, fb;
  try {
    fa = canonicalize(a);
    fb = canonicalize(b);
  } catch (const Error& e) {
    if (e.code() != Errc::Decomposable) throw;
    fell_back = true;
  }
  if (fell_back) {
    const InvariantVector ia = trace_invariants(a);
    const InvariantVector ib = trace_invariants(b);
    for (int k = 0; k < 6; ++k) {
      if (std::abs(ia.pairwise[static_cast<std::size_t>(k)] -
                   ib.pairwise[static_cast<std::size_t>(k)]) > tol)
        return false;
    }
    return std::abs(ia.triple_im - ib.triple_im) <= tol;
  }
  if (fa.branch != fb.branch) return false;
  return std::abs(fa.lambda - fb.lambda) <= tol && circle_distance(fa.chi, fb.chi) <= tol;
}

}  // namespace d4rep
