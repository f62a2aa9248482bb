// Copyright 2026 The Bergman Kernels Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bergman/luqikeng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bergman/error.hpp"
#include "bergman/geometry.hpp"
#include "bergman/kernel_series.hpp"
#include "bergman/kernels.hpp"
#include "bergman/parallel.hpp"

namespace bergman {

namespace {

constexpr std::uint64_t kScanBlock = 4096;

struct PartialScan {
  std::uint64_t tested = 0;
  double min_modulus = std::numeric_limits<double>::infinity();
  double min_relative = std::numeric_limits<double>::infinity();
  PointPair argmin;
  std::vector<PointPair> hits;
  std::uint64_t fallbacks = 0;
  std::uint64_t hermitian = 0;
  std::uint64_t diagonal = 0;
};

void scan_one(DomainId domain, const PointPair& p, double threshold, PartialScan& out) {
  TruncationConfig cfg = kernel_series_config();
  cfg.max_total_degree = 600;
  const KernelValue k = kernel_eval(domain, KernelPoint(p.first, p.second), cfg);
  const KernelValue kz = kernel_eval(domain, KernelPoint(p.first, p.first), cfg);
  const KernelValue kw = kernel_eval(domain, KernelPoint(p.second, p.second), cfg);
  const cplx kt = kernel_eval(domain, KernelPoint(p.second, p.first), cfg).value;
  out.hermitian += kt == std::conj(k.value) ? 0 : 1;
  for (const KernelValue* d : {&kz, &kw})
    out.diagonal += d->value.real() > 0.0 && d->value.imag() == 0.0 ? 0 : 1;
  const double mod = std::abs(k.value);
  const double scale = std::max(1.0, std::sqrt(std::abs(kz.value) * std::abs(kw.value)));
  ++out.tested;
  out.fallbacks += k.from_series ? 1 : 0;
  if (mod < out.min_modulus) {
    out.min_modulus = mod;
    out.argmin = p;
  }
  out.min_relative = std::min(out.min_relative, mod / scale);
  if (mod < threshold * scale) out.hits.push_back(p);
}

ScanReport merge(DomainId domain, std::vector<PartialScan>& parts, double threshold) {
  ScanReport r;
  r.domain = domain;
  r.zero_threshold = threshold;
  r.min_modulus = std::numeric_limits<double>::infinity();
  r.min_relative = std::numeric_limits<double>::infinity();
  for (PartialScan& p : parts) {  // block order; ties keep the earliest pair
    r.pairs_tested += p.tested;
    r.series_fallbacks += p.fallbacks;
    r.hermitian_violations += p.hermitian;
    r.diagonal_violations += p.diagonal;
    if (p.min_modulus < r.min_modulus) {
      r.min_modulus = p.min_modulus;
      r.argmin_pair = p.argmin;
    }
    r.min_relative = std::min(r.min_relative, p.min_relative);
    for (PointPair& h : p.hits) r.zero_hits.push_back(std::move(h));
  }
  return r;
}

void check_scan_domain(DomainId domain) {
  require(domain.kind != DomainKind::kBall, ErrorCode::kPreconditionViolation,
          "zero scan is defined for d1..d4");
}

}  // namespace

ScanReport scan_pairs(DomainId domain, const std::vector<PointPair>& pairs, double threshold) {
  check_scan_domain(domain);
  require(threshold > 0.0, ErrorCode::kPreconditionViolation, "zero threshold must be > 0");
  const std::uint64_t blocks = (pairs.size() + kScanBlock - 1) / kScanBlock;
  std::vector<PartialScan> parts(blocks);
  parallel_blocks(blocks, [&](std::size_t b) {
    const std::size_t end = std::min<std::size_t>(pairs.size(), (b + 1) * kScanBlock);
    for (std::size_t i = b * kScanBlock; i < end; ++i) scan_one(domain, pairs[i], threshold, parts[b]);
  });
  return merge(domain, parts, threshold);
}

ScanReport zero_scan(DomainId domain, std::uint64_t pairs, std::uint64_t seed, double threshold) {
  check_scan_domain(domain);
  require(pairs >= 1, ErrorCode::kPreconditionViolation, "zero_scan: pairs must be >= 1");
  require(threshold > 0.0, ErrorCode::kPreconditionViolation, "zero threshold must be > 0");
  const DomainSpec spec = domain_spec(domain);
  // Keep a hair away from the boundary, where the kernels overflow.
  constexpr double kMargin = 1e-3;
  constexpr double kNeighbourhood = 0.05;
  const std::uint64_t blocks = (pairs + kScanBlock - 1) / kScanBlock;
  std::vector<PartialScan> parts(blocks);
  parallel_blocks(blocks, [&](std::size_t b) {
    Rng rng(splitmix64(splitmix64(seed) ^ (b + 1) * 0x9e3779b97f4a7c15ULL));
    auto draw = [&] {
      for (;;) {
        ComplexPoint p = sample_box_point(spec, rng);
        if (contains_with_margin(spec, p, kMargin)) return p;
      }
    };
    const std::uint64_t end = std::min<std::uint64_t>(pairs, (b + 1) * kScanBlock);
    for (std::uint64_t i = b * kScanBlock; i < end; ++i) {
      ComplexPoint z = draw();
      ComplexPoint w;
      if (i % 10 == 9) {
        for (;;) {
          w = z;
          for (cplx& c : w)
            c += std::polar(kNeighbourhood * std::sqrt(rng.uniform()), 2.0 * M_PI * rng.uniform());
          if (contains_with_margin(spec, w, kMargin)) break;
        }
      } else {
        w = draw();
      }
      scan_one(domain, {std::move(z), std::move(w)}, threshold, parts[b]);
    }
  });
  ScanReport r = merge(domain, parts, threshold);
  r.seed = seed;
  return r;
}

ComplexPoint d1_to_d3(const ComplexPoint& z) {
  require(z.size() == 3, ErrorCode::kDimensionMismatch, "d1_to_d3: need a point in C^3");
  return {z[0], z[1], z[0] * z[2]};
}

double biholomorphism_check(const ComplexPoint& z, const ComplexPoint& w) {
  require(z.size() == 3 && w.size() == 3, ErrorCode::kDimensionMismatch,
          "biholomorphism_check: need points in C^3");
  require(contains(DomainId::d1(), z) && contains(DomainId::d1(), w),
          ErrorCode::kPreconditionViolation, "biholomorphism_check: points must lie in D1");
  require(z[0] != 0.0 && w[0] != 0.0, ErrorCode::kPreconditionViolation,
          "biholomorphism_check: z1 and w1 must be nonzero");
  const ComplexPoint fz = d1_to_d3(z), fw = d1_to_d3(w);
  require(contains(DomainId::d3(), fz) && contains(DomainId::d3(), fw),
          ErrorCode::kPreconditionViolation, "biholomorphism_check: images must lie in D3");
  const cplx lhs = kernel_d1(KernelPoint(z, w));
  const cplx rhs = z[0] * std::conj(w[0]) * kernel_d3(KernelPoint(fz, fw));
  return std::abs(lhs - rhs);
}

namespace {

std::vector<cplx> d3_nu(const ComplexPoint& z, const ComplexPoint& w) {
  require(z.size() == 3 && w.size() == 3, ErrorCode::kDimensionMismatch,
          "proof_inequality_check: need points in C^3");
  require(contains(DomainId::d3(), z) && contains(DomainId::d3(), w),
          ErrorCode::kPreconditionViolation, "proof_inequality_check: points must lie in D3");
  return KernelPoint(z, w).nu();
}

}  // namespace

bool proof_inequality_check(const ComplexPoint& z, const ComplexPoint& w) {
  const std::vector<cplx> nu = d3_nu(z, w);
  const double a1 = std::abs(nu[0]), a3 = std::abs(nu[2]);
  return a3 < a1 && a1 * a1 + a3 < a1;
}

bool proof_inequality_check_nu2_variant(const ComplexPoint& z, const ComplexPoint& w) {
  const std::vector<cplx> nu = d3_nu(z, w);
  const double a1 = std::abs(nu[0]), a2 = std::abs(nu[1]), a3 = std::abs(nu[2]);
  return a3 < a1 && a1 * a1 + a2 < a1;
}

}  // namespace bergman
