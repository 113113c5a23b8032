#include <catch2/catch_amalgamated.hpp>

#include "d4rep/graphrep.hpp"
#include "test_support.hpp"

using namespace d4rep;
using Catch::Approx;
using testsupport::random_character;
using testsupport::random_chi;
using testsupport::random_interior_lambda;

namespace {

const Character kExample = validate_character({0.3, 0.4, 0.6, 0.7});

ProjectorQuadruple example_quadruple(double lam, double chi) {
  return projectors_from_xyz(build_xyz_generic(kExample, lam, chi), kExample);
}

// Diagonal decomposable family over the worked character (alpha1 + alpha4 = 1
// and alpha2 + alpha3 = 1 make the weighted sum close).
GraphRepresentation diagonal_graph() {
  GraphRepresentation g;
  g.character = kExample;
  g.gamma[0] = {Complex(std::sqrt(0.3)), 0.0};
  g.gamma[1] = {0.0, Complex(std::sqrt(0.4))};
  g.gamma[2] = {0.0, Complex(std::sqrt(0.6))};
  g.gamma[3] = {Complex(std::sqrt(0.7)), 0.0};
  return g;
}

}  // namespace

TEST_CASE("equal-family columns at lambda = 0 are (1/2, 1/2) scaled") {
  const GraphRepresentation g = to_graph_rep(build_projectors_equal(0.0, M_PI / 4.0));
  CHECK(std::abs(g.gamma[0].v1 - Complex(0.5)) <= 1e-15);
  CHECK(std::abs(g.gamma[0].v2 - Complex(0.5)) <= 1e-15);
}

TEST_CASE("generic column matches the frozen square roots") {
  const GraphRepresentation g = to_graph_rep(example_quadruple(0.35, M_PI / 3.0));
  CHECK(g.gamma[0].v1.real() == Approx(0.42678197846541877).margin(1e-12));
  CHECK(g.gamma[0].v2.real() == Approx(0.34330328116279757).margin(1e-12));
  CHECK(g.gamma[0].v1.imag() == 0.0);
}

TEST_CASE("graph representation is locally scalar by construction") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Character c = random_character(rng);
    const ProjectorQuadruple q =
        projectors_from_xyz(build_xyz_generic(c, random_interior_lambda(c, rng), random_chi(rng)), c);
    const GraphRepresentation g = to_graph_rep(q);
    const ScalarityReport rep = verify_locally_scalar(g);
    CHECK(rep.max() <= 1e-11);
    // columns reproduce the weighted projectors: Gamma_i Gamma_i* = alpha_i P_i
    for (int i = 0; i < 4; ++i) {
      const auto is = static_cast<std::size_t>(i);
      CHECK(norm_max(outer(g.gamma[is], g.gamma[is]) - c[i] * q.p[is]) <= 1e-11);
    }
  }
}

TEST_CASE("round trip from_graph_rep after to_graph_rep recovers the quadruple") {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const Character c = random_character(rng);
    const ProjectorQuadruple q =
        projectors_from_xyz(build_xyz_generic(c, random_interior_lambda(c, rng), random_chi(rng)), c);
    const ProjectorQuadruple back = from_graph_rep(to_graph_rep(q));
    for (int i = 0; i < 4; ++i) {
      const auto is = static_cast<std::size_t>(i);
      CHECK(norm_max(back.p[is] - q.p[is]) <= 1e-11);
    }
  }
}

TEST_CASE("to_graph_rep is inverse to from_graph_rep up to leaf phases") {
  SplitMix64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const Character c = random_character(rng);
    const GraphRepresentation g = to_graph_rep(
        projectors_from_xyz(build_xyz_generic(c, random_interior_lambda(c, rng), random_chi(rng)), c));
    // multiply each column by an arbitrary unit phase: still a valid
    // representation, and the round trip restores the canonical phases
    GraphRepresentation phased = g;
    for (int i = 0; i < 4; ++i) {
      const auto is = static_cast<std::size_t>(i);
      phased.gamma[is] = std::polar(1.0, rng.uniform(-M_PI, M_PI)) * phased.gamma[is];
    }
    const GraphRepresentation back = to_graph_rep(from_graph_rep(phased));
    for (int i = 0; i < 4; ++i) {
      const auto is = static_cast<std::size_t>(i);
      CHECK(std::abs(back.gamma[is].v1 - g.gamma[is].v1) <= 1e-11);
      CHECK(std::abs(back.gamma[is].v2 - g.gamma[is].v2) <= 1e-11);
    }
  }
}

TEST_CASE("hand-built diagonal columns produce diagonal projectors") {
  const ProjectorQuadruple q = from_graph_rep(diagonal_graph());
  CHECK(norm_max(q.p[0] - Mat2::diag(1.0, 0.0)) <= 1e-15);
  CHECK(norm_max(q.p[1] - Mat2::diag(0.0, 1.0)) <= 1e-15);
  CHECK(norm_max(q.p[2] - Mat2::diag(0.0, 1.0)) <= 1e-15);
  CHECK(norm_max(q.p[3] - Mat2::diag(1.0, 0.0)) <= 1e-15);
}

TEST_CASE("a center-condition violation is rejected") {
  GraphRepresentation g = diagonal_graph();
  g.gamma[0] = 1.5 * g.gamma[0];
  try {
    from_graph_rep(g);
    FAIL("expected ScalarityViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ScalarityViolated);
  }
}

TEST_CASE("scalarity report reacts linearly to a column perturbation") {
  GraphRepresentation g = to_graph_rep(example_quadruple(0.35, 1.0));
  g.gamma[0].v1 += 1e-3;
  const ScalarityReport rep = verify_locally_scalar(g);
  CHECK(rep.a0_residual >= 1e-4);
  CHECK_FALSE(rep.passes());
}

TEST_CASE("zero columns report the full leaf weights") {
  GraphRepresentation g;
  g.character = kExample;
  const ScalarityReport rep = verify_locally_scalar(g);
  for (int i = 0; i < 4; ++i) {
    CHECK(rep.leaf_residuals[static_cast<std::size_t>(i)] == Approx(kExample[i]).margin(1e-15));
  }
  CHECK(rep.a0_residual == Approx(1.0).margin(1e-15));
}

TEST_CASE("to_graph_rep rejects non-rank-1 input") {
  ProjectorQuadruple q = example_quadruple(0.35, 1.0);
  q.p[1] = Mat2::diag(1.0, 1.0);  // rank 2
  try {
    to_graph_rep(q);
    FAIL("expected NotRankOne");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRankOne);
  }
}

TEST_CASE("printed isometry columns match the range extraction") {
  SplitMix64 rng(34);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Character c = random_character(rng);
    const double lam = random_interior_lambda(c, rng);
    const double chi = random_chi(rng);
    const GraphRepresentation g =
        to_graph_rep(projectors_from_xyz(build_xyz_generic(c, lam, chi), c));
    const std::array<Vec2, 4> cols = isometry_columns(c, lam, chi);
    for (int i = 0; i < 4; ++i) {
      const auto is = static_cast<std::size_t>(i);
      const Vec2 scaled = std::sqrt(c[i]) * cols[is];
      worst = std::max(worst, std::abs(scaled.v1 - g.gamma[is].v1));
      worst = std::max(worst, std::abs(scaled.v2 - g.gamma[is].v2));
    }
  }
  CHECK(worst <= 1e-11);
}
