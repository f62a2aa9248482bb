// Copyright 2026 The Bergman Kernels Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdlib>
#include <string>

#include <gtest/gtest.h>

#include "bergman/geometry.hpp"
#include "bergman/kernel_series.hpp"
#include "bergman/kernels.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"

namespace bergman {
namespace {

constexpr double kPi = 3.14159265358979323846;
const double kPi3 = kPi * kPi * kPi;

TEST(MonomialNorm, MatchesMpmathReference) {
  for (const auto& r : ref::kNorms) {
    const DomainId d = parse_domain(r.domain);
    EXPECT_NEAR(monomial_norm(d, r.alpha) / r.value, 1.0, 1e-13) << r.domain;
    EXPECT_NEAR(monomial_norm_quadrature(d, r.alpha) / r.value, 1.0, 1e-10) << r.domain;
    EXPECT_NEAR(std::exp(log_monomial_norm(d, r.alpha)) / r.value, 1.0, 1e-13) << r.domain;
  }
}

TEST(Volume, ClosedValues) {
  EXPECT_NEAR(volume(DomainId::d1(), VolumeMethod::formula()), kPi3 / 3.0, 1e-13);
  EXPECT_NEAR(volume(DomainId::d3(), VolumeMethod::formula()), kPi3 / 12.0, 1e-13);
  EXPECT_NEAR(volume(DomainId::d4(), VolumeMethod::formula()), std::pow(kPi, 4) / 30.0, 1e-13);
  EXPECT_NEAR(volume(DomainId::d2(), VolumeMethod::formula()), 9.0 * kPi3 / 14.0, 1e-13);
  EXPECT_NEAR(volume(DomainId::ball(2), VolumeMethod::formula()), kPi * kPi / 2.0, 1e-13);
  for (DomainId d : {DomainId::d1(), DomainId::d2(), DomainId::d3(), DomainId::d4()}) {
    const double f = volume(d, VolumeMethod::formula());
    EXPECT_NEAR(volume(d, VolumeMethod::quadrature()) / f, 1.0, 1e-10) << to_string(d);
  }
}

TEST(MonomialNorm, D2AlternativeFormIsTwiceTheIntegral) {
  for (const MultiIndex& a : {MultiIndex{0, 0, 0}, MultiIndex{1, 2, 0}, MultiIndex{3, 1, 4}})
    EXPECT_NEAR(monomial_norm_alternative(DomainId::d2(), a) / monomial_norm(DomainId::d2(), a), 2.0,
                1e-13);
  EXPECT_EQ(monomial_norm_alternative(DomainId::d1(), {1, 2, 3}), monomial_norm(DomainId::d1(), {1, 2, 3}));
}

TEST(MonomialNorm, D3NegativeFirstIndex) {
  EXPECT_NEAR(monomial_norm(DomainId::d3(), {-1, 0, 0}), kPi3 / 3.0, 1e-13);
  EXPECT_NO_THROW(validate_index(DomainId::d3(), {-3, 0, 2}));
  EXPECT_THROW_CODE(validate_index(DomainId::d3(), {-2, 0, 0}), ErrorCode::kInvalidIndex);
  EXPECT_THROW_CODE(monomial_norm(DomainId::d1(), {-1, 0, 0}), ErrorCode::kInvalidIndex);
  EXPECT_THROW_CODE(monomial_norm(DomainId::d4(), {0, 0, 0}), ErrorCode::kDimensionMismatch);
}

// With nu = 0 only the constant term survives: 1 / ||1||^2.
TEST(KernelSeries, ConstantTerm) {
  const ComplexPoint o{0.0, 0.0, 0.0};
  EXPECT_NEAR(kernel_series(DomainId::d1(), KernelPoint(o, o)).value.real(), 3.0 / kPi3, 1e-15);
  const KernelPoint p({0.5, 0.0, 0.0, 0.0}, {0.0, 0.5, 0.0, 0.0});
  EXPECT_NEAR(kernel_series(DomainId::d4(), p).value.real(), 30.0 / std::pow(kPi, 4), 1e-15);
}

TEST(KernelSeries, ReportsNonConvergence) {
  TruncationConfig cfg = kernel_series_config();
  cfg.max_total_degree = 5;
  const KernelPoint p({0.7, 0.2, 0.3}, {0.7, 0.2, 0.3});
  EXPECT_THROW_CODE(kernel_series(DomainId::d1(), p, cfg), ErrorCode::kNonConvergence);
  cfg.require_convergence = false;
  const SeriesResult r = kernel_series(DomainId::d1(), p, cfg);
  EXPECT_FALSE(r.converged);
  EXPECT_GT(r.tail_estimate, 0.0);
}

TEST(KernelSeries, DecayRateBelowOneInside) {
  for (DomainId d : {DomainId::d1(), DomainId::d2(), DomainId::d3(), DomainId::d4()}) {
    for (const auto& z : sample_interior(domain_spec(d), 50, 17, 0.01)) {
      const double rho = series_decay_rate(d, KernelPoint(z, z));
      EXPECT_GE(rho, 0.0);
      EXPECT_LT(rho, 1.0) << to_string(d);
    }
  }
}

// Reproducing property at the origin: <z^alpha, z^beta> vanishes off the
// diagonal. Monte-Carlo, so the bound is a few standard errors.
TEST(MonteCarlo, OrthogonalityOfMonomials) {
  for (DomainId d : {DomainId::d1(), DomainId::d2(), DomainId::d3(), DomainId::d4()}) {
    MultiIndex a(static_cast<std::size_t>(d.dim()), 0), b = a;
    a[0] = 1;
    b[1] = 1;
    const ComplexMonteCarloEstimate off = monte_carlo_inner_product(d, a, b, 200000, 3);
    EXPECT_LT(std::abs(off.value), 4.0 * off.std_error + 1e-12) << to_string(d);
    const ComplexMonteCarloEstimate on = monte_carlo_inner_product(d, a, a, 200000, 3);
    EXPECT_NEAR(on.value.real(), monomial_norm(d, a), 4.0 * on.std_error) << to_string(d);
  }
}

TEST(MonteCarlo, VolumeWithinStatisticalError) {
  for (DomainId d : {DomainId::d1(), DomainId::d2(), DomainId::d3(), DomainId::d4()}) {
    const MonteCarloEstimate e = volume_monte_carlo(d, 1'000'000, 5);
    const double exact = volume(d, VolumeMethod::formula());
    EXPECT_EQ(e.samples, 1'000'000u);
    EXPECT_LT(std::abs(e.value - exact), 4.0 * e.std_error) << to_string(d);
    EXPECT_LT(std::abs(e.value - exact) / exact, 5e-3);
  }
}

TEST(MonteCarlo, IndependentOfThreadCount) {
  const char* old = std::getenv("BK_THREADS");
  const std::string saved = old ? old : "";
  setenv("BK_THREADS", "1", 1);
  const MonteCarloEstimate a = volume_monte_carlo(DomainId::d4(), 300000, 11);
  setenv("BK_THREADS", "7", 1);
  const MonteCarloEstimate b = volume_monte_carlo(DomainId::d4(), 300000, 11);
  if (old) setenv("BK_THREADS", saved.c_str(), 1);
  else unsetenv("BK_THREADS");
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.accepted, b.accepted);
  EXPECT_EQ(a.std_error, b.std_error);
}

}  // namespace
}  // namespace bergman
