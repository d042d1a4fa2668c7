#include <gtest/gtest.h>

#include "oracles/trace_adjoint.hpp"
#include "spinc/exterior_model.hpp"
#include "spinc/random.hpp"

using namespace spinc;
using cd = std::complex<double>;
using Eigen::MatrixXcd;

TEST(ExteriorModel, GammasSatisfyRelations) {
  for (int m = 1; m <= 5; ++m) {
    const auto g = exterior_gammas(m);
    ASSERT_EQ(g.size(), static_cast<std::size_t>(2 * m));
    EXPECT_EQ(g.front().rows(), 1 << m);
    EXPECT_LT(relation_error(g), 1e-14);
    EXPECT_EQ(commutant_dim(g), 1);
  }
}

TEST(ExteriorModel, PowerIsMultiplicativeAndGraded) {
  Rng rng(12, "power");
  for (int m = 1; m <= 4; ++m) {
    const MatrixXcd a = rng.unitary(m), b = rng.unitary(m);
    EXPECT_LT((exterior_power(a * b) - exterior_power(a) * exterior_power(b)).norm(), 1e-12);
    const MatrixXcd la = exterior_power(a);
    EXPECT_NEAR(std::abs(la(0, 0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(la((1 << m) - 1, (1 << m) - 1) - a.determinant()), 0.0, 1e-12);
  }
}

TEST(ExteriorModel, DiagonalUnitaryActsByProductsOfPhases) {
  const cd p0 = std::polar(1.0, 0.3), p1 = std::polar(1.0, -1.1);
  MatrixXcd u = MatrixXcd::Zero(2, 2);
  u(0, 0) = p0;
  u(1, 1) = p1;
  const MatrixXcd l = exterior_power(u);
  EXPECT_NEAR(std::abs(l(1, 1) - p0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(l(2, 2) - p1), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(l(3, 3) - p0 * p1), 0.0, 1e-15);
}

TEST(ExteriorModel, RealifyIsRotation) {
  Rng rng(13, "realify");
  const MatrixXcd u = rng.unitary(3);
  const Eigen::MatrixXd r = realify(u);
  EXPECT_LT((r.transpose() * r - Eigen::MatrixXd::Identity(6, 6)).norm(), 1e-12);
  EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(r(0, 3), -u(0, 0).imag());
}

TEST(ExteriorModel, EquivarianceAndTraceOracle) {
  Rng rng(14, "equiv");
  for (int m = 1; m <= 4; ++m) {
    const MatrixXcd u = rng.unitary(m);
    EXPECT_LT(exterior_equivariance_residual(u), 1e-10);
    EXPECT_LT((oracle::trace_adjoint(exterior_gammas(m), exterior_power(u)) - realify(u)).norm(), 1e-10);
  }
}

TEST(ExteriorModel, InstanceFactorsWithUnitScalar) {
  Rng rng(15, "instance");
  for (int m = 1; m <= 4; ++m) {
    std::vector<MatrixXcd> us;
    for (int i = 0; i < 5; ++i) us.push_back(rng.unitary(m));
    us.push_back(us[0] * us[1]);
    const std::vector<ClosureHint> hints{{0, 1, 5}};
    const SolutionInstance inst = unitary_exterior_instance(m, us, hints);
    const GammaRepd rep = build_gamma(2 * m);
    for (std::size_t i = 0; i < us.size(); ++i) {
      const FactorizationResult f = factorize(rep, inst.samples[i].pPrime, inst.samples[i].epsPrime);
      EXPECT_LT((p_map(f.element) - realify(us[i])).norm(), 1e-9);
      EXPECT_NEAR(std::abs(f.element.c), 1.0, 1e-9);
    }
    EXPECT_TRUE(homomorphism_check(rep, inst).pass);
    EXPECT_TRUE(bijection_roundtrip(rep, inst).pass);
  }
}

TEST(ExteriorModel, RejectsNonUnitary) {
  const std::vector<MatrixXcd> us{2.0 * MatrixXcd::Identity(2, 2)};
  try {
    unitary_exterior_instance(2, us);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotUnitary);
  }
}
