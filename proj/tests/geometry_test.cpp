// Copyright 2026 The Bergman Kernels Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "bergman/geometry.hpp"
#include "test_util.hpp"

namespace bergman {
namespace {

const DomainId kAll[] = {DomainId::d1(), DomainId::d2(), DomainId::d3(), DomainId::d4(),
                         DomainId::ball(2)};

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(DomainId::d1(), {0.0, 0.0, 0.0}));
  EXPECT_FALSE(contains(DomainId::d3(), {0.0, 0.5, 0.0}));
  EXPECT_TRUE(contains(DomainId::d4(), {0.5, 0.5, 0.5, 0.1}));
  EXPECT_FALSE(contains(DomainId::d4(), {0.5, 0.5, 0.5, 0.6}));
  EXPECT_FALSE(contains(DomainId::ball(2), {0.8, cplx(0.0, 0.6)}));  // on the sphere
  EXPECT_TRUE(contains(DomainId::ball(2), {0.8, cplx(0.0, 0.59)}));
}

TEST(Contains, DimensionMismatch) {
  EXPECT_THROW_CODE(contains(DomainId::d1(), {0.0, 0.0}), ErrorCode::kDimensionMismatch);
  EXPECT_THROW_CODE(contains(DomainId::d4(), {0.0, 0.0, 0.0}), ErrorCode::kDimensionMismatch);
}

// Membership of a Reinhardt domain depends on the moduli only.
TEST(Contains, RotationInvariant) {
  for (DomainId d : kAll) {
    const DomainSpec spec = domain_spec(d);
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
      ComplexPoint p = sample_box_point(spec, rng);
      const bool in = contains(spec, p);
      for (auto& c : p) c *= std::polar(1.0, 6.283185307179586 * rng.uniform());
      EXPECT_EQ(contains(spec, p), in) << to_string(d);
    }
  }
}

TEST(Contains, CompleteDomainsAreScalingMonotone) {
  for (DomainId d : {DomainId::d1(), DomainId::d2()}) {
    const DomainSpec spec = domain_spec(d);
    for (const auto& p : sample_interior(spec, 300, 5, 0.0)) {
      for (double t : {0.1, 0.5, 0.9, 0.999}) {
        ComplexPoint q = p;
        for (auto& c : q) c *= t;
        EXPECT_TRUE(contains(spec, q)) << to_string(d);
      }
    }
  }
}

TEST(SampleInterior, Empty) {
  for (DomainId d : kAll) EXPECT_TRUE(sample_interior(domain_spec(d), 0, 1).empty());
}

TEST(SampleInterior, AllInsideAndDeterministic) {
  const DomainSpec d1 = domain_spec(DomainId::d1());
  const auto a = sample_interior(d1, 1000, 42, 0.1);
  ASSERT_EQ(a.size(), 1000u);
  for (const auto& p : a) {
    EXPECT_TRUE(contains(d1, p));
    EXPECT_TRUE(contains_with_margin(d1, p, 0.1));
  }
  EXPECT_EQ(a, sample_interior(d1, 1000, 42, 0.1));
  EXPECT_NE(a, sample_interior(d1, 1000, 43, 0.1));
}

TEST(SampleInterior, D3PointsSatisfyTheModulusChain) {
  for (const auto& p : sample_interior(domain_spec(DomainId::d3()), 2000, 11, 0.0)) {
    ASSERT_NE(p[0], cplx(0.0));
    EXPECT_LT(std::abs(p[2]), std::abs(p[0]));
  }
}

TEST(SampleInterior, BadMargin) {
  EXPECT_THROW_CODE(sample_interior(domain_spec(DomainId::d1()), 1, 1, 1.0),
                    ErrorCode::kPreconditionViolation);
}

// A margin this close to one leaves a sliver whose acceptance rate is far
// below the stall threshold.
TEST(SampleInterior, Stall) {
  EXPECT_THROW_CODE(sample_interior(domain_spec(DomainId::ball(6)), 1, 1, 0.999999),
                    ErrorCode::kSamplerStall);
}

TEST(Rng, StreamIsFixed) {
  // First output of mt19937_64 with the default seed is fixed by the standard.
  Rng r(5489u);
  EXPECT_EQ(r.next(), 14514284786278117030ull);
  Rng u(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
}

}  // namespace
}  // namespace bergman
