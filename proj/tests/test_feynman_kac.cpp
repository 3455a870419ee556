#include "spinfock/feynman_kac.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace spinfock;

TEST(FeynmanKac, ExactLeftSide) {
  const HamiltonianSpec one(1, {1.0});
  const FockVector e1 = FockVector::wedge(1, {1}), vac = FockVector::vacuum(1);
  EXPECT_NEAR(fk_lhs_exact(e1, e1, one, 0.0).real(), 0.5, 1e-15);
  EXPECT_NEAR(fk_lhs_exact(e1, e1, one, 0.5).real(), 0.5 * std::exp(-0.5), 1e-15);
  EXPECT_NEAR(fk_lhs_exact(e1, e1, one, 0.5).real(), 0.30327, 1e-5);
  EXPECT_NEAR(fk_lhs_exact(vac, vac, one, 3.0).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(fk_lhs_exact(vac, e1, one, 1.0)), 0.0, 1e-15);
  const FockVector top = FockVector::wedge(2, {1, 2});
  EXPECT_NEAR(fk_lhs_exact(top, top, HamiltonianSpec(2, {1.0, 2.0}), 0.3).real(), 0.25 * std::exp(-0.9), 1e-15);
  EXPECT_THROW(fk_lhs_exact(top, top, one, 0.3), SizeError);
}

TEST(FeynmanKac, PhaseGeneratorIsShiftedNumberOperator) {
  const HamiltonianSpec spec(2, {1.0, 2.0});
  const Matrix s = phase_generator(spec);
  EXPECT_TRUE(is_hermitian(s, 1e-15));
  Matrix expected = free_hamiltonian(spec.energies);
  expected.diagonal().array() -= 0.5 * spec.total_energy();
  EXPECT_LT(max_abs(s - expected), 1e-14);
}

TEST(FeynmanKac, MonteCarloMatchesExactOneMode) {
  const HamiltonianSpec spec(1, {1.0});
  const FockVector e1 = FockVector::wedge(1, {1});
  FKParams params;
  params.n_paths = 4000;
  params.dt = 1e-2;
  params.seed = 2024;
  const FKEstimate est = fk_rhs_mc(e1, e1, spec, 0.5, params);
  EXPECT_EQ(est.n_paths, 4000u);
  EXPECT_NEAR(est.lhs_exact.real(), 0.5 * std::exp(-0.5), 1e-15);
  EXPECT_LE(est.z_score, 3.0) << est.mean << " +- " << est.std_error;
}

TEST(FeynmanKac, MonteCarloMatchesExactTwoModes) {
  const HamiltonianSpec spec(2, {1.0, 2.0});
  const FockVector top = FockVector::wedge(2, {1, 2});
  FKParams params;
  params.n_paths = 4000;
  params.dt = 1e-2;
  params.seed = 99;
  const FKEstimate est = fk_rhs_mc(top, top, spec, 0.3, params);
  EXPECT_LE(est.z_score, 3.0) << est.mean << " +- " << est.std_error;
}

TEST(FeynmanKac, ReportShapes) {
  const HamiltonianSpec spec(1, {1.0});
  const FockVector e1 = FockVector::wedge(1, {1});
  FKParams params;
  params.n_paths = 2000;
  params.dt = 1e-2;
  params.seed = 5;
  EXPECT_TRUE(fk_report(e1, e1, spec, {}, params).empty());

  const auto zero = fk_report(e1, e1, spec, {0.0}, params);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_LE(zero[0].estimate.z_score, 3.0);

  const auto rows = fk_report(e1, e1, spec, {0.25, 0.5, 1.0}, params);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i].estimate.lhs_exact.real(), rows[i - 1].estimate.lhs_exact.real());
    EXPECT_LT(rows[i].estimate.mean.real(), rows[i - 1].estimate.mean.real());
  }
}

TEST(FeynmanKac, SameSeedSameEstimate) {
  const HamiltonianSpec spec(1, {1.0});
  const FockVector e1 = FockVector::wedge(1, {1});
  FKParams params;
  params.n_paths = 500;
  params.dt = 1e-2;
  params.seed = 3;
  const FKEstimate a = fk_rhs_mc(e1, e1, spec, 0.2, params);
  params.threads = 2;
  const FKEstimate b = fk_rhs_mc(e1, e1, spec, 0.2, params);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
}

TEST(FeynmanKac, InputValidation) {
  const HamiltonianSpec spec(1, {1.0});
  const FockVector e1 = FockVector::wedge(1, {1});
  FKParams params;
  params.n_paths = 50;
  EXPECT_THROW(fk_rhs_mc(e1, e1, spec, 0.5, params), DomainError);
  params.n_paths = 1000;
  EXPECT_THROW(fk_rhs_mc(e1, e1, spec, -0.5, params), DomainError);
  EXPECT_THROW(fk_rhs_mc(FockVector::vacuum(2), e1, spec, 0.5, params), SizeError);
}
