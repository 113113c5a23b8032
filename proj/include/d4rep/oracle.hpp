#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "d4rep/analysis.hpp"
#include "d4rep/rng.hpp"

namespace d4rep {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm3(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Geometric encoding of a quadruple: rank-1 P_i = (I + n_i . sigma)/2 with
// unit Bloch vectors n_i, under which sum_i alpha_i P_i = I becomes the
// closed-linkage condition sum_i alpha_i n_i = 0. This module never touches
// the constructor formulas, so its agreement with them is independent
// evidence.
struct BlochQuadruple {
  std::array<Vec3, 4> n{};
  Character character;
};

inline Vec3 bloch_vector(const Mat2& p, double tol = kTol.rank_one) {
  if (std::abs(p.trace() - 1.0) > tol || norm_max(p * p - p) > tol) {
    throw Error(Errc::NotRankOne, "matrix is not a rank-1 projector within tolerance");
  }
  return {2.0 * p.a12.real(), -2.0 * p.a12.imag(), (p.a11 - p.a22).real()};
}

inline Mat2 projector_from_bloch_vector(const Vec3& n) {
  return {Complex(0.5 * (1.0 + n[2])), 0.5 * Complex(n[0], -n[1]),
          0.5 * Complex(n[0], n[1]), Complex(0.5 * (1.0 - n[2]))};
}

inline double closure_residual(const BlochQuadruple& b) {
  Vec3 s{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 3; ++k)
      s[static_cast<std::size_t>(k)] +=
          b.character[i] * b.n[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  return norm3(s);
}

inline BlochQuadruple bloch_from_projectors(const ProjectorQuadruple& q) {
  BlochQuadruple b;
  b.character = q.character;
  for (int i = 0; i < 4; ++i)
    b.n[static_cast<std::size_t>(i)] = bloch_vector(q.p[static_cast<std::size_t>(i)]);
  return b;
}

inline ProjectorQuadruple projectors_from_bloch(const BlochQuadruple& b) {
  for (const Vec3& n : b.n) {
    if (std::abs(norm3(n) - 1.0) > kTol.bloch_unit) {
      throw Error(Errc::ClosureViolated, "Bloch vector is not unit length");
    }
  }
  if (closure_residual(b) > kTol.bloch_closure) {
    throw Error(Errc::ClosureViolated, "sum_i alpha_i n_i does not vanish");
  }
  ProjectorQuadruple q;
  q.character = b.character;
  for (int i = 0; i < 4; ++i)
    q.p[static_cast<std::size_t>(i)] = projector_from_bloch_vector(b.n[static_cast<std::size_t>(i)]);
  return q;
}

// Samples a solution of sum_i alpha_i n_i = 0 directly on the sphere:
// n1 uniform; n4 by rejection until w = -a1 n1 - a4 n4 has |w| within the
// triangle window [a3 - a2, a2 + a3]; then w is split as a2 n2 + a3 n3 by
// closing the two-bar linkage with a uniform dihedral phase psi around w.
// Deterministic in the seed (SplitMix64 stream).
inline BlochQuadruple sample_linkage(const Character& c, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const double a1 = c[0], a2 = c[1], a3 = c[2], a4 = c[3];
  BlochQuadruple b;
  b.character = c;
  const Vec3 n1 = rng.unit_sphere();
  Vec3 n4{};
  Vec3 w{};
  double d = 0.0;
  bool found = false;
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    n4 = rng.unit_sphere();
    w = {-a1 * n1[0] - a4 * n4[0], -a1 * n1[1] - a4 * n4[1], -a1 * n1[2] - a4 * n4[2]};
    d = norm3(w);
    if (a3 - a2 <= d && d <= a2 + a3) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw Error(Errc::SamplingExhausted, "rejection cap reached; character window unreachable");
  }
  const Vec3 wh = {w[0] / d, w[1] / d, w[2] / d};
  const Vec3 ref = std::abs(wh[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  Vec3 e1 = cross(wh, ref);
  const double e1n = norm3(e1);
  e1 = {e1[0] / e1n, e1[1] / e1n, e1[2] / e1n};
  const Vec3 e2 = cross(wh, e1);
  // law of cosines: angle of n2 against w
  const double ct = std::min(1.0, std::max(-1.0, (d * d + a2 * a2 - a3 * a3) / (2.0 * d * a2)));
  const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
  const double psi = 2.0 * M_PI * rng.next_double();
  Vec3 n2{}, n3{};
  for (int k = 0; k < 3; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    n2[ks] = ct * wh[ks] + st * (std::cos(psi) * e1[ks] + std::sin(psi) * e2[ks]);
    n3[ks] = (w[ks] - a2 * n2[ks]) / a3;
  }
  b.n = {n1, n2, n3, n4};
  return b;
}

struct CrossCheckReport {
  int trials{};
  int passes{};
  int failures{};
  int decomposable_skipped{};
  double max_equiv_residual{};
};

// For each sampled linkage: build the projectors, skip decomposables,
// canonicalize to (lambda, chi), rebuild the closed-form family member at
// those parameters, and test unitary equivalence at tol. The recorded
// residual is the entrywise gap between gauge * rebuilt * gauge^* and the
// sampled quadruple, i.e. the canonical-form rebuild contract. Trial t draws
// from the derived substream SplitMix64::derive(seed, t).
inline CrossCheckReport cross_check(const Character& c, int trials, std::uint64_t seed,
                                    double tol = 1e-8) {
  CrossCheckReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const BlochQuadruple b =
        sample_linkage(c, SplitMix64::derive(seed, static_cast<std::uint64_t>(t)));
    const ProjectorQuadruple q = projectors_from_bloch(b);
    if (commutant_dimension(q) > 1) {
      ++rep.decomposable_skipped;
      continue;
    }
    const CanonicalForm f = canonicalize(q);
    const ProjectorQuadruple r = rebuild(f);
    double resid = 0.0;
    for (int i = 0; i < 4; ++i) {
      const auto is = static_cast<std::size_t>(i);
      resid = std::max(resid, norm_max(f.gauge * r.p[is] * f.gauge.adjoint() - q.p[is]));
    }
    rep.max_equiv_residual = std::max(rep.max_equiv_residual, resid);
    if (resid <= tol && unitary_equivalent(q, r, tol)) {
      ++rep.passes;
    } else {
      ++rep.failures;
    }
  }
  return rep;
}

}  // namespace d4rep
