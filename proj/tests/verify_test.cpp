// Copyright 2026 The Bergman Kernels Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "bergman/report_json.hpp"
#include "bergman/verify.hpp"
#include "test_util.hpp"

namespace bergman {
namespace {

TEST(Suites, Names) {
  for (Suite s : {Suite::kGauss, Suite::kF8Closed, Suite::kQuadSum, Suite::kRecursion, Suite::kNorms,
                  Suite::kKernels, Suite::kJets, Suite::kTransform})
    EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_EQ(parse_suite("lem2"), Suite::kQuadSum);
  EXPECT_THROW_CODE(parse_suite("f8"), ErrorCode::kParseError);
}

// Small runs of every suite pass at their default tolerances.
class SmallSuite : public ::testing::TestWithParam<Suite> {};

TEST_P(SmallSuite, Passes) {
  VerifyOptions o;
  o.samples = 5;
  o.seed = 3;
  const SuiteReport r = run_suite(GetParam(), o);
  EXPECT_TRUE(r.ok()) << dump_json(to_json(r));
  EXPECT_EQ(r.passed + r.failed, r.details.size());
  for (const auto& d : r.details) EXPECT_LE(d.error, r.worst_error);
}

INSTANTIATE_TEST_SUITE_P(All, SmallSuite,
                         ::testing::Values(Suite::kGauss, Suite::kF8Closed, Suite::kQuadSum,
                                           Suite::kRecursion, Suite::kNorms, Suite::kKernels,
                                           Suite::kJets, Suite::kTransform),
                         [](const auto& info) { return to_string(info.param); });

TEST(Suites, Deterministic) {
  VerifyOptions o;
  o.samples = 10;
  o.seed = 9;
  EXPECT_EQ(dump_json(to_json(run_suite(Suite::kF8Closed, o))),
            dump_json(to_json(run_suite(Suite::kF8Closed, o))));
}

// An impossible tolerance makes the suite fail instead of passing vacuously.
TEST(Suites, ToleranceIsApplied) {
  VerifyOptions o;
  o.samples = 5;
  o.tol = 1e-300;
  EXPECT_FALSE(run_suite(Suite::kF8Closed, o).ok());
}

TEST(Suites, NormsReportD2Ratio) {
  VerifyOptions o;
  o.domain = DomainId::d2();
  const SuiteReport r = run_suite(Suite::kNorms, o);
  EXPECT_TRUE(r.ok());
  ASSERT_TRUE(r.metrics.count("d2_ratio_quadrature_over_alternative"));
  EXPECT_NEAR(r.metrics.at("d2_ratio_quadrature_over_alternative"), 0.5, 1e-12);
  EXPECT_LT(r.metrics.at("d2_ratio_spread"), 1e-12);
}

}  // namespace
}  // namespace bergman
