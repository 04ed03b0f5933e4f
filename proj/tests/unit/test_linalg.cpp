#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qudit/error.hpp"
#include "qudit/linalg.hpp"

using namespace qudit;
using testing_support::rng_for;

TEST(Linalg, KronMatchesLoopDefinition) {
  auto rng = rng_for(1);
  const CMatrix a = haar_unitary(2, rng);
  const CMatrix b = haar_unitary(3, rng);
  EXPECT_LT(max_abs(CMatrix(kron(a, b) - oracle::kron(a, b))), 1e-15);
}

TEST(Linalg, PartialTracesMatchLoops) {
  auto rng = rng_for(2);
  for (int n : {2, 3, 4}) {
    const CMatrix rho = random_mixed_density(n * n, 3, rng);
    EXPECT_LT(max_abs(CMatrix(trace_out_right(rho, n, n) - oracle::trace_second(rho, n))), 1e-14);
    EXPECT_LT(max_abs(CMatrix(trace_out_left(rho, n, n) - oracle::trace_first(rho, n))), 1e-14);
  }
}

TEST(Linalg, PartialTraceOfProductState) {
  auto rng = rng_for(3);
  const CMatrix a = random_mixed_density(2, 2, rng);
  const CMatrix b = random_mixed_density(3, 3, rng);
  const CMatrix ab = kron(a, b);
  EXPECT_LT(max_abs(CMatrix(trace_out_right(ab, 2, 3) - a)), 1e-14);
  EXPECT_LT(max_abs(CMatrix(trace_out_left(ab, 2, 3) - b)), 1e-14);
}

TEST(Linalg, Det3AndAdjugateMatchCofactors) {
  auto rng = rng_for(4);
  for (int t = 0; t < 50; ++t) {
    const RMatrix m = random_gaussian_matrix(3, 3, rng);
    EXPECT_NEAR(det3(m), m.determinant(), 1e-12);
    EXPECT_LT(max_abs(RMatrix(adjugate3(m) - oracle::adjugate(m))), 1e-13);
  }
}

TEST(Linalg, RequireChecksThrowTypedErrors) {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 1) = 0.5;
  try {
    require_hermitian(m, 1e-9, "m");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_hermitian);
  }
  try {
    require_unit_trace(CMatrix::Identity(2, 2), 1e-9, "m");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::trace_not_one);
  }
  try {
    require_unitary(2.0 * CMatrix::Identity(2, 2), 1e-9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_unitary);
  }
}

TEST(Linalg, HermitianEigenvaluesAscending) {
  const RVector ev = hermitian_eigenvalues(testing_support::diag({0.2, 0.5, 0.3}));
  EXPECT_NEAR(ev[0], 0.2, 1e-15);
  EXPECT_NEAR(ev[1], 0.3, 1e-15);
  EXPECT_NEAR(ev[2], 0.5, 1e-15);
}

TEST(Random, HaarUnitaryIsUnitary) {
  auto rng = rng_for(5);
  for (int n = 2; n <= 6; ++n) EXPECT_LT(unitarity_residual(haar_unitary(n, rng)), 1e-13);
}

TEST(Random, SameSeedSameSamples) {
  Rng a(42), b(42);
  EXPECT_EQ(random_mixed_density(3, 2, a), random_mixed_density(3, 2, b));
}

TEST(Random, MixedDensityIsPhysical) {
  auto rng = rng_for(6);
  for (int k = 1; k <= 4; ++k) {
    const CMatrix rho = random_mixed_density(4, k, rng);
    EXPECT_LT(hermiticity_residual(rho), 1e-14);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-13);
    EXPECT_GT(oracle::eigenvalues(rho).minCoeff(), -1e-13);
  }
}

TEST(Random, PureDensityIsProjector) {
  auto rng = rng_for(7);
  const CMatrix rho = random_pure_density(5, rng);
  EXPECT_LT(max_abs(CMatrix(rho * rho - rho)), 1e-14);
}
