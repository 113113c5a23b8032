#pragma once

#include <array>
#include <cmath>

#include "d4rep/constructor.hpp"

namespace d4rep {

// Star-graph representation with dimension vector (2; 1,1,1,1): a 2-dim
// center space H_0, four 1-dim leaf spaces, and edge maps
// Gamma_i : H_i -> H_0 stored as columns. The locally scalar conditions are
//   Gamma_i* Gamma_i = alpha_i   (leaf operators scalar)
//   sum_i Gamma_i Gamma_i* = I   (center operator scalar, alpha_0 = 1).
// Columns are scaled by sqrt(alpha_i), the unique scaling under which both
// conditions hold at once with P_i = Gamma_i Gamma_i* / alpha_i.
struct GraphRepresentation {
  static constexpr std::array<int, 5> dim{2, 1, 1, 1, 1};
  std::array<Vec2, 4> gamma{};
  Character character;
};

struct ScalarityReport {
  double a0_residual{};                    // |sum_i Gamma_i Gamma_i* - I|
  std::array<double, 4> leaf_residuals{};  // |Gamma_i* Gamma_i - alpha_i|

  double max() const {
    double m = a0_residual;
    for (double r : leaf_residuals) m = std::max(m, r);
    return m;
  }
  bool passes(double tol = kTol.scalarity_pass) const { return max() <= tol; }
};

// Unit vector spanning the range of a rank-1 projector, with the phase fixed
// so its first nonzero component is real positive. Reads the larger column of
// P = v v* (column j is v times conj(v_j)), which avoids the degenerate
// eigensolver path entirely.
inline Vec2 range_unit_vector(const Mat2& p, double tol = kTol.rank_one) {
  if (std::abs(p.trace() - 1.0) > tol || norm_max(p * p - p) > tol) {
    throw Error(Errc::NotRankOne, "matrix is not a rank-1 projector within tolerance");
  }
  const Vec2 col1{p.a11, p.a21};
  const Vec2 col2{p.a12, p.a22};
  Vec2 v = col1.norm() >= col2.norm() ? col1 : col2;
  v = (1.0 / v.norm()) * v;
  return fix_phase(v);
}

inline GraphRepresentation to_graph_rep(const ProjectorQuadruple& q) {
  GraphRepresentation g;
  g.character = q.character;
  for (int i = 0; i < 4; ++i) {
    g.gamma[static_cast<std::size_t>(i)] =
        std::sqrt(q.character[i]) * range_unit_vector(q.p[static_cast<std::size_t>(i)]);
  }
  return g;
}

inline ScalarityReport verify_locally_scalar(const GraphRepresentation& g) {
  ScalarityReport rep;
  Mat2 a0 = Mat2::zero();
  for (int i = 0; i < 4; ++i) {
    const Vec2& col = g.gamma[static_cast<std::size_t>(i)];
    a0 = a0 + outer(col, col);
    rep.leaf_residuals[static_cast<std::size_t>(i)] =
        std::abs(inner(col, col).real() - g.character[i]);
  }
  rep.a0_residual = norm_max(a0 - Mat2::identity());
  return rep;
}

// P_i = Gamma_i Gamma_i* / alpha_i. The input must already be locally scalar
// within kTol.graph; otherwise the output would not satisfy the projector
// relations.
inline ProjectorQuadruple from_graph_rep(const GraphRepresentation& g) {
  const ScalarityReport rep = verify_locally_scalar(g);
  if (!(rep.max() <= kTol.graph)) {
    throw Error(Errc::ScalarityViolated,
                "graph representation violates the locally scalar conditions (residual " +
                    std::to_string(rep.max()) + ")");
  }
  ProjectorQuadruple q;
  q.character = g.character;
  for (int i = 0; i < 4; ++i) {
    const Vec2& col = g.gamma[static_cast<std::size_t>(i)];
    q.p[static_cast<std::size_t>(i)] = (1.0 / g.character[i]) * outer(col, col);
  }
  return q;
}

// Printed column formulas of the generic-branch isometries (unit vectors
// spanning Im P_i in canonical position). Second computation path; the tests
// assert these, scaled by sqrt(alpha_i), against to_graph_rep. Radicands are
// clamped at the same window as the r-values.
inline std::array<Vec2, 4> isometry_columns(const Character& c, double lambda, double chi) {
  const double a1 = c[0], a2 = c[1], a3 = c[2], a4 = c[3];
  const double l2 = lambda * lambda;
  const double q14 = 0.25 * (a4 * a4 - a1 * a1);
  const double q23 = 0.25 * (a3 * a3 - a2 * a2);
  const Complex e = std::polar(1.0, -wrap_angle(chi));
  const auto root = [](double num, double den) {
    if (num < -kTol.radicand_clamp) {
      throw Error(Errc::LambdaOutOfRange, "isometry column radicand is negative");
    }
    return std::sqrt(std::max(0.0, num) / den);
  };
  std::array<Vec2, 4> cols;
  cols[0] = {Complex(root(l2 + a1 * lambda - q14, 2.0 * a1 * lambda)),
             Complex(root(-l2 + a1 * lambda + q14, 2.0 * a1 * lambda))};
  cols[1] = {Complex(root(-l2 + a2 * lambda + q23, 2.0 * a2 * lambda)),
             e * root(l2 + a2 * lambda - q23, 2.0 * a2 * lambda)};
  cols[2] = {Complex(root(-l2 + a3 * lambda - q23, 2.0 * a3 * lambda)),
             -e * root(l2 + a3 * lambda + q23, 2.0 * a3 * lambda)};
  cols[3] = {Complex(root(l2 + a4 * lambda + q14, 2.0 * a4 * lambda)),
             Complex(-root(-l2 + a4 * lambda - q14, 2.0 * a4 * lambda))};
  return cols;
}

}  // namespace d4rep
