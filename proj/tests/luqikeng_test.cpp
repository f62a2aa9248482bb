// Copyright 2026 The Bergman Kernels Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string>

#include <gtest/gtest.h>

#include "bergman/geometry.hpp"
#include "bergman/kernels.hpp"
#include "bergman/luqikeng.hpp"
#include "bergman/report_json.hpp"
#include "test_util.hpp"

namespace bergman {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Sets BK_THREADS for the lifetime of the object.
class ScopedThreads {
 public:
  explicit ScopedThreads(int n) {
    if (const char* old = std::getenv("BK_THREADS")) old_ = old, had_ = true;
    setenv("BK_THREADS", std::to_string(n).c_str(), 1);
  }
  ~ScopedThreads() {
    if (had_) setenv("BK_THREADS", old_.c_str(), 1);
    else unsetenv("BK_THREADS");
  }

 private:
  std::string old_;
  bool had_ = false;
};

TEST(ScanPairs, Origin) {
  const ComplexPoint o{0.0, 0.0, 0.0};
  const ScanReport r = scan_pairs(DomainId::d1(), {{o, o}}, 1e-12);
  EXPECT_EQ(r.pairs_tested, 1u);
  EXPECT_NEAR(r.min_modulus, 3.0 / (kPi * kPi * kPi), 1e-15);
  EXPECT_TRUE(r.zero_hits.empty());
}

TEST(ScanPairs, MinimumIsAttained) {
  const auto pts = sample_interior(domain_spec(DomainId::d3()), 40, 2);
  std::vector<PointPair> pairs;
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) pairs.emplace_back(pts[i], pts[i + 1]);
  const ScanReport r = scan_pairs(DomainId::d3(), pairs, 1e-12);
  double lowest = 1e300;
  for (const auto& [z, w] : pairs) lowest = std::min(lowest, std::abs(kernel_d3(KernelPoint(z, w))));
  EXPECT_EQ(r.min_modulus, lowest);
  EXPECT_EQ(std::abs(kernel_d3(KernelPoint(r.argmin_pair.first, r.argmin_pair.second))), lowest);
}

// With a huge threshold every pair counts as a hit; the report must list them.
TEST(ScanPairs, HitsSatisfyThreshold) {
  const auto pts = sample_interior(domain_spec(DomainId::d1()), 20, 4);
  std::vector<PointPair> pairs;
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) pairs.emplace_back(pts[i], pts[i + 1]);
  EXPECT_EQ(scan_pairs(DomainId::d1(), pairs, 1e6).zero_hits.size(), pairs.size());
}

TEST(ZeroScan, NoZerosOnSmallScans) {
  for (DomainId d : {DomainId::d1(), DomainId::d2(), DomainId::d3(), DomainId::d4()}) {
    const ScanReport r = zero_scan(d, 2000, 7);
    EXPECT_EQ(r.pairs_tested, 2000u);
    EXPECT_TRUE(r.zero_hits.empty()) << to_string(d);
    EXPECT_GT(r.min_modulus, 0.0);
  }
}

TEST(ZeroScan, IndependentOfThreadCount) {
  std::string one, many;
  {
    ScopedThreads t(1);
    one = dump_json(to_json(zero_scan(DomainId::d3(), 10000, 7)));
  }
  {
    ScopedThreads t(5);
    many = dump_json(to_json(zero_scan(DomainId::d3(), 10000, 7)));
  }
  EXPECT_EQ(one, many);
  EXPECT_NE(one, dump_json(to_json(zero_scan(DomainId::d3(), 10000, 8))));
}

TEST(ZeroScan, JsonShape) {
  const Json j = to_json(zero_scan(DomainId::d1(), 100, 3));
  for (const char* k : {"argmin_pair", "domain", "min_modulus", "pairs_tested", "seed", "zero_hits",
                        "zero_threshold"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["domain"], "d1");
  EXPECT_EQ(j["argmin_pair"].size(), 2u);
  EXPECT_EQ(j["argmin_pair"][0].size(), 3u);
  EXPECT_EQ(j["argmin_pair"][0][0].size(), 2u);  // [re, im]
}

TEST(Biholomorphism, Examples) {
  EXPECT_LT(biholomorphism_check({0.7, 0.2, 0.3}, {0.7, 0.2, 0.3}), 1e-9);
  EXPECT_LT(biholomorphism_check({0.6, 0.1, 0.2}, {0.5, 0.2, 0.1}), 1e-9);
  EXPECT_THROW_CODE(biholomorphism_check({0.0, 0.2, 0.3}, {0.5, 0.2, 0.1}),
                    ErrorCode::kPreconditionViolation);
  EXPECT_THROW_CODE(biholomorphism_check({0.9, 0.9, 0.3}, {0.5, 0.2, 0.1}),
                    ErrorCode::kPreconditionViolation);
}

TEST(Biholomorphism, SampledPairs) {
  const DomainSpec d1 = domain_spec(DomainId::d1());
  const auto pts = sample_interior(d1, 400, 21);
  int checked = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
    const auto& z = pts[i];
    const auto& w = pts[i + 1];
    if (std::abs(z[0]) < 1e-3 || std::abs(w[0]) < 1e-3) continue;
    if (!contains(DomainId::d3(), d1_to_d3(z)) || !contains(DomainId::d3(), d1_to_d3(w))) continue;
    EXPECT_LT(biholomorphism_check(z, w), 1e-9);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(ProofInequality, HoldsOnD3) {
  EXPECT_TRUE(contains(DomainId::d3(), {0.7, 0.2, 0.3}));
  EXPECT_TRUE(proof_inequality_check({0.7, 0.2, 0.3}, {0.7, 0.2, 0.3}));
  const auto pts = sample_interior(domain_spec(DomainId::d3()), 2000, 13, 0.0);
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
    EXPECT_TRUE(proof_inequality_check(pts[i], pts[i + 1]));
  EXPECT_THROW_CODE(proof_inequality_check({0.0, 0.2, 0.0}, {0.7, 0.2, 0.3}),
                    ErrorCode::kPreconditionViolation);
}

TEST(ProofInequality, Nu2VariantHasCounterexamples) {
  const ComplexPoint p{0.3, 0.9, 0.0};
  ASSERT_TRUE(contains(DomainId::d3(), p));
  EXPECT_TRUE(proof_inequality_check(p, p));
  EXPECT_FALSE(proof_inequality_check_nu2_variant(p, p));
}

}  // namespace
}  // namespace bergman
