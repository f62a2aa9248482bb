// Copyright 2026 The Bergman Kernels Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C header only.

#include <cmath>
#include <cstring>
#include <string>
#include <thread>

#include <gtest/gtest.h>

#include "bergman/bergman_c.h"
#include "json.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

TEST(CApi, VersionAndNames) {
  EXPECT_STREQ(bk_version(), "0.1.0");
  EXPECT_STREQ(bk_status_name(BK_OK), "Ok");
  EXPECT_STREQ(bk_status_name(BK_PRECONDITION_VIOLATION), "PreconditionViolation");
  EXPECT_STREQ(bk_status_name(BK_PARSE_ERROR), "ParseError");
  EXPECT_STREQ(bk_status_name(BK_INVALID_ARGUMENT), "InvalidArgument");
  EXPECT_STREQ(bk_status_name(static_cast<bk_status>(99)), "Unknown");
}

TEST(CApi, KernelAtOrigin) {
  const bk_complex o[3] = {};
  bk_complex k{};
  int used = -1;
  ASSERT_EQ(bk_kernel("d1", o, o, 3, 1, &k, &used), BK_OK);
  EXPECT_NEAR(k.re, 3.0 / (kPi * kPi * kPi), 1e-15);
  EXPECT_EQ(k.im, 0.0);
  EXPECT_EQ(used, 0);
  EXPECT_STREQ(bk_last_error(), "");
}

TEST(CApi, ClosedAgreesWithSeries) {
  const bk_complex z[3] = {{0.7, 0}, {0.3, 0}, {0.2, 0}};
  bk_complex c{}, s{};
  double tail = -1;
  int terms = 0;
  ASSERT_EQ(bk_kernel("d3", z, z, 3, 0, &c, nullptr), BK_OK);
  ASSERT_EQ(bk_kernel_series("d3", z, z, 3, 600, 1e-16, &s, &tail, &terms), BK_OK);
  EXPECT_LT(std::hypot(c.re - s.re, c.im - s.im), 1e-7);
  EXPECT_GT(terms, 0);
  EXPECT_GE(tail, 0.0);
}

TEST(CApi, ErrorsMapToStatus) {
  const bk_complex in[3] = {{0.1, 0}, {0.1, 0}, {0.1, 0}};
  const bk_complex out[3] = {{0.9, 0}, {0.9, 0}, {0.0, 0}};
  bk_complex k{};
  EXPECT_EQ(bk_kernel("d1", in, out, 3, 1, &k, nullptr), BK_PRECONDITION_VIOLATION);
  EXPECT_NE(std::strlen(bk_last_error()), 0u);
  EXPECT_EQ(bk_kernel("d1", in, in, 2, 1, &k, nullptr), BK_DIMENSION_MISMATCH);
  EXPECT_EQ(bk_kernel("d9", in, in, 3, 1, &k, nullptr), BK_PARSE_ERROR);
  EXPECT_EQ(bk_kernel("d1", in, in, 3, 1, nullptr, nullptr), BK_INVALID_ARGUMENT);
  EXPECT_EQ(bk_kernel(nullptr, in, in, 3, 1, &k, nullptr), BK_INVALID_ARGUMENT);

  // Degenerate D2 point: closed form refuses, fallback succeeds.
  const bk_complex diag[3] = {{0.5, 0}, {0.3, 0}, {0.3, 0}};
  EXPECT_EQ(bk_kernel("d2", diag, diag, 3, 0, &k, nullptr), BK_DEGENERATE_INPUT);
  int used = 0;
  EXPECT_EQ(bk_kernel("d2", diag, diag, 3, 1, &k, &used), BK_OK);
  EXPECT_EQ(used, 1);

  int alpha[3] = {-1, 0, 0};
  double v = 0;
  EXPECT_EQ(bk_monomial_norm("d1", alpha, 3, &v), BK_INVALID_INDEX);
  ASSERT_EQ(bk_monomial_norm("d3", alpha, 3, &v), BK_OK);
  EXPECT_NEAR(v, kPi * kPi * kPi / 3.0, 1e-13);
}

TEST(CApi, LastErrorIsPerThread) {
  bk_complex k{};
  const bk_complex z[3] = {};
  ASSERT_EQ(bk_kernel("nope", z, z, 3, 1, &k, nullptr), BK_PARSE_ERROR);
  std::string other = "unset";
  std::thread([&] { other = bk_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(bk_last_error()), "");
}

TEST(CApi, Parsing) {
  bk_complex p[4];
  size_t n = 0;
  ASSERT_EQ(bk_parse_point("0.5,0.1-0.2i,3i", p, 4, &n), BK_OK);
  ASSERT_EQ(n, 3u);
  EXPECT_EQ(p[1].im, -0.2);
  EXPECT_EQ(bk_parse_point("0,0,0,0,0", p, 4, &n), BK_INVALID_ARGUMENT);
  EXPECT_EQ(n, 5u);  // required capacity is reported
  EXPECT_EQ(bk_parse_point("0 ,1", p, 4, &n), BK_PARSE_ERROR);
  int a[3];
  ASSERT_EQ(bk_parse_index("-1,0,2", a, 3, &n), BK_OK);
  EXPECT_EQ(a[0], -1);
  size_t dim = 0;
  ASSERT_EQ(bk_domain_dim("d4", &dim), BK_OK);
  EXPECT_EQ(dim, 4u);
  int inside = -1;
  const bk_complex q[4] = {{0.5, 0}, {0.5, 0}, {0.5, 0}, {0.1, 0}};
  ASSERT_EQ(bk_contains("d4", q, 4, &inside), BK_OK);
  EXPECT_EQ(inside, 1);
}

TEST(CApi, VolumeMethods) {
  double v = 0, se = -1;
  ASSERT_EQ(bk_volume("d1", BK_VOLUME_QUADRATURE, 0, 0, &v, &se), BK_OK);
  EXPECT_NEAR(v, kPi * kPi * kPi / 3.0, 1e-10);
  EXPECT_EQ(se, 0.0);
  ASSERT_EQ(bk_volume("d2", BK_VOLUME_MONTE_CARLO, 200000, 1, &v, &se), BK_OK);
  EXPECT_NEAR(v, 9.0 * kPi * kPi * kPi / 14.0, 4.0 * se);
  EXPECT_EQ(bk_volume("d2", static_cast<bk_volume_method>(7), 0, 0, &v, &se), BK_INVALID_ARGUMENT);
}

TEST(CApi, ReportsAreJson) {
  bk_report_t* r = nullptr;
  ASSERT_EQ(bk_zero_scan("d1", 500, 7, 1e-12, &r), BK_OK);
  const auto j = nlohmann::json::parse(bk_report_json(r));
  EXPECT_EQ(j["pairs_tested"], 500);
  EXPECT_TRUE(j["zero_hits"].empty());
  EXPECT_EQ(bk_report_passed(r), 1);
  bk_report_free(r);

  bk_verify_options o{5, 1, 0.0, nullptr};
  ASSERT_EQ(bk_verify("gauss", &o, &r), BK_OK);
  const auto v = nlohmann::json::parse(bk_report_json(r));
  EXPECT_EQ(v["suite"], "gauss");
  EXPECT_EQ(v["failed"], 0);
  EXPECT_EQ(bk_report_passed(r), 1);
  bk_report_free(r);

  EXPECT_EQ(bk_verify("bogus", &o, &r), BK_PARSE_ERROR);
  EXPECT_EQ(r, nullptr);
  bk_report_free(nullptr);
  EXPECT_EQ(bk_report_json(nullptr), nullptr);
}

TEST(CApi, TransformChecks) {
  const bk_complex z[3] = {{0.7, 0}, {0.2, 0}, {0.3, 0}};
  double res = -1;
  ASSERT_EQ(bk_biholomorphism_check(z, z, &res), BK_OK);
  EXPECT_LT(res, 1e-9);
  int holds = 0;
  ASSERT_EQ(bk_proof_inequality_check(z, z, &holds), BK_OK);
  EXPECT_EQ(holds, 1);
  const bk_complex zero1[3] = {{0, 0}, {0.2, 0}, {0.3, 0}};
  EXPECT_EQ(bk_biholomorphism_check(zero1, z, &res), BK_PRECONDITION_VIOLATION);
}

}  // namespace
