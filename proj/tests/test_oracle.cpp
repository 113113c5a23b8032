#include <catch2/catch_amalgamated.hpp>

#include <cstring>

#include "d4rep/oracle.hpp"
#include "test_support.hpp"

using namespace d4rep;
using Catch::Approx;
using testsupport::random_character;
using testsupport::random_chi;
using testsupport::random_interior_lambda;

namespace {
const Character kExample = validate_character({0.3, 0.4, 0.6, 0.7});
}

TEST_CASE("axis projectors map to the expected Bloch vectors") {
  const Vec3 nz = bloch_vector(Mat2::diag(1.0, 0.0));
  CHECK(nz[0] == 0.0);
  CHECK(nz[1] == 0.0);
  CHECK(nz[2] == 1.0);
  // the flat projector of the equal family at lambda = 0
  const Vec3 nx = bloch_vector(Mat2{0.5, 0.5, 0.5, 0.5});
  CHECK(nx[0] == 1.0);
  CHECK(nx[1] == 0.0);
  CHECK(nx[2] == 0.0);
}

TEST_CASE("bloch_vector rejects non-projectors") {
  CHECK_THROWS_AS(bloch_vector(Mat2::diag(1.0, 1.0)), Error);
  try {
    bloch_vector(Mat2::diag(0.6, 0.6));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRankOne);
  }
}

TEST_CASE("constructed quadruples close on the sphere") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const Character c = random_character(rng);
    const ProjectorQuadruple q =
        projectors_from_xyz(build_xyz_generic(c, random_interior_lambda(c, rng), random_chi(rng)), c);
    const BlochQuadruple b = bloch_from_projectors(q);
    CHECK(closure_residual(b) <= 1e-11);
    for (const Vec3& n : b.n) CHECK(std::abs(norm3(n) - 1.0) <= 1e-12);
  }
}

TEST_CASE("bloch round trips are exact at working precision") {
  SplitMix64 rng(62);
  for (int trial = 0; trial < 50; ++trial) {
    const Character c = random_character(rng);
    const ProjectorQuadruple q =
        projectors_from_xyz(build_xyz_generic(c, random_interior_lambda(c, rng), random_chi(rng)), c);
    const ProjectorQuadruple back = projectors_from_bloch(bloch_from_projectors(q));
    for (int i = 0; i < 4; ++i) {
      const auto is = static_cast<std::size_t>(i);
      CHECK(norm_max(back.p[is] - q.p[is]) <= 1e-13);
    }
    const BlochQuadruple b = bloch_from_projectors(q);
    const BlochQuadruple b2 = bloch_from_projectors(projectors_from_bloch(b));
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 3; ++k)
        CHECK(std::abs(b.n[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
                       b2.n[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) <= 1e-13);
  }
}

TEST_CASE("projectors_from_bloch validates its input") {
  BlochQuadruple b;
  b.character = kExample;
  b.n = {Vec3{0.0, 0.0, 2.0}, Vec3{0.0, 0.0, -1.0}, Vec3{0.0, 0.0, -1.0}, Vec3{0.0, 0.0, 1.0}};
  CHECK_THROWS_AS(projectors_from_bloch(b), Error);
  b.n[0] = {0.0, 0.0, 1.0};
  b.n[1] = {0.0, 0.0, 1.0};  // 0.3 + 0.4 - 0.6 + 0.7 = 0.8: closure fails
  b.n[3] = {0.0, 0.0, 1.0};
  CHECK(closure_residual(b) > 0.1);
  try {
    projectors_from_bloch(b);
    FAIL("expected ClosureViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ClosureViolated);
  }
}

TEST_CASE("sampled linkages close to machine precision") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 101ull}) {
    const BlochQuadruple b = sample_linkage(equal_character(), seed);
    CHECK(closure_residual(b) <= 1e-12);
    for (const Vec3& n : b.n) CHECK(std::abs(norm3(n) - 1.0) <= 1e-12);
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  const BlochQuadruple a = sample_linkage(kExample, 7);
  const BlochQuadruple b = sample_linkage(kExample, 7);
  CHECK(std::memcmp(&a.n, &b.n, sizeof(a.n)) == 0);
  const BlochQuadruple c = sample_linkage(kExample, 8);
  CHECK(std::memcmp(&a.n, &c.n, sizeof(a.n)) != 0);
}

TEST_CASE("the resultant length halves to the spectral parameter") {
  for (std::uint64_t seed : {7ull, 8ull, 9ull, 10ull, 11ull}) {
    const BlochQuadruple b = sample_linkage(kExample, seed);
    Vec3 w{};
    for (int k = 0; k < 3; ++k) {
      const auto ks = static_cast<std::size_t>(k);
      w[ks] = kExample[1] * b.n[1][ks] + kExample[2] * b.n[2][ks];
    }
    const double lam_direct = norm3(w) / 2.0;
    CHECK(lam_direct >= 0.2 - 1e-12);
    CHECK(lam_direct <= 0.5 + 1e-12);
    const ProjectorQuadruple q = projectors_from_bloch(b);
    // same number through the spectral route
    const DerivedConstants d = derived_constants(kExample);
    const Mat2 x = kExample[1] * q.p[1] + kExample[2] * q.p[2] -
                   Mat2::diag(d.beta[0] / 2.0, d.beta[0] / 2.0);
    const Eigen2 e = eigen_h2(x);
    CHECK(e.eigenvalues[1] == Approx(lam_direct).margin(1e-12));
    if (commutant_dimension(q) == 1) {
      CHECK(canonicalize(q).lambda == Approx(lam_direct).margin(1e-10));
    }
  }
}

TEST_CASE("a collinear configuration is decomposable downstream") {
  BlochQuadruple b;
  b.character = kExample;
  // signs (+,-,-,+) against e_z: 0.3 - 0.4 - 0.6 + 0.7 = 0
  b.n = {Vec3{0.0, 0.0, 1.0}, Vec3{0.0, 0.0, -1.0}, Vec3{0.0, 0.0, -1.0}, Vec3{0.0, 0.0, 1.0}};
  const ProjectorQuadruple q = projectors_from_bloch(b);
  CHECK(commutant_dimension(q) == 2);
}

TEST_CASE("pairwise traces match the Bloch overlap formula") {
  SplitMix64 rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    const Character c = random_character(rng);
    const ProjectorQuadruple q =
        projectors_from_xyz(build_xyz_generic(c, random_interior_lambda(c, rng), random_chi(rng)), c);
    const BlochQuadruple b = bloch_from_projectors(q);
    const InvariantVector iv = trace_invariants(q);
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const double expected =
            0.5 * (1.0 + dot(b.n[static_cast<std::size_t>(i)], b.n[static_cast<std::size_t>(j)]));
        CHECK(iv.pairwise[static_cast<std::size_t>(k++)] == Approx(expected).margin(1e-12));
      }
    }
  }
}

TEST_CASE("cross_check passes on the worked characters") {
  const CrossCheckReport a = cross_check(kExample, 100, 20240601);
  CHECK(a.trials == 100);
  CHECK(a.failures == 0);
  CHECK(a.passes + a.decomposable_skipped == 100);
  CHECK(a.max_equiv_residual <= 1e-8);

  const CrossCheckReport b = cross_check(equal_character(), 100, 20240601);
  CHECK(b.failures == 0);
  CHECK(b.passes + b.decomposable_skipped == 100);
  CHECK(b.max_equiv_residual <= 1e-8);
}

TEST_CASE("zero trials yield an empty report") {
  const CrossCheckReport rep = cross_check(kExample, 0, 5);
  CHECK(rep.trials == 0);
  CHECK(rep.passes == 0);
  CHECK(rep.failures == 0);
  CHECK(rep.max_equiv_residual == 0.0);
}

TEST_CASE("cross_check is reproducible for a fixed seed") {
  const CrossCheckReport a = cross_check(kExample, 25, 99);
  const CrossCheckReport b = cross_check(kExample, 25, 99);
  CHECK(a.passes == b.passes);
  CHECK(a.max_equiv_residual == b.max_equiv_residual);
}
