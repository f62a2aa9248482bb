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

#include "bergman/kernel_series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "bergman/error.hpp"
#include "bergman/geometry.hpp"
#include "bergman/parallel.hpp"
#include "bergman/quadrature.hpp"
#include "detail/cmath.hpp"

namespace bergman {

using detail::kPi;

namespace {

const double kLogPi = std::log(kPi);

// lgamma at multiples of 1/3: lg3[j] = log Gamma(j / 3) for j >= 1. Integer
// arguments n live at j = 3n.
class LogGammaThirds {
 public:
  explicit LogGammaThirds(int max_j) : lg_(max_j + 1, 0.0) {
    for (int j = 1; j <= max_j; ++j) lg_[j] = std::lgamma(j / 3.0);
  }
  double thirds(int j) const { return lg_.at(j); }
  double integer(int n) const { return lg_.at(3 * n); }

 private:
  std::vector<double> lg_;
};

// log ||z^alpha||^2 for each domain, from the closed norm formulas. `half_d2`
// selects the quadrature-confirmed D2 constant.
double log_norm_d1(const LogGammaThirds& g, int a1, int a2, int a3) {
  return 3.0 * kLogPi + g.integer(a1 + 1) + g.integer(a2 + a3 + 3) -
         std::log((a2 + 1.0) * (a3 + 1.0)) - g.integer(a1 + a2 + a3 + 4);
}

double log_norm_d2(const LogGammaThirds& g, int a1, int a2, int a3, bool half_d2) {
  const int m = a2 + a3;
  const double c = half_d2 ? std::log(3.0) : std::log(1.5);
  return 3.0 * kLogPi + g.thirds(a1 + 1) + g.integer(m + 3) - c -
         std::log((a2 + 1.0) * (a3 + 1.0)) - g.thirds(a1 + 1 + 3 * m + 9);
}

double log_norm_d3(const LogGammaThirds& g, int a1, int a2, int a3) {
  return 3.0 * kLogPi + g.integer(a1 + a3 + 2) + g.integer(a2 + a3 + 3) -
         std::log((a2 + 1.0) * (a3 + 1.0)) - g.integer(a1 + a2 + 2 * a3 + 5);
}

double log_norm_d4(const LogGammaThirds& g, int a1, int a2, int a3, int a4) {
  const int t = a1 + a2;
  return 4.0 * kLogPi + g.integer(a1 + 1) + g.integer(a2 + 1) + g.integer(t + a4 + 3) +
         g.integer(a3 + a4 + 3) - std::log((a3 + 1.0) * (a4 + 1.0)) - g.integer(t + 2) -
         g.integer(t + a3 + 2 * a4 + 6);
}

double log_norm_ball(const LogGammaThirds& g, const MultiIndex& a) {
  const int n = static_cast<int>(a.size());
  double v = n * kLogPi;
  int total = 0;
  for (int ai : a) {
    v += g.integer(ai + 1);
    total += ai;
  }
  return v - g.integer(n + total + 1);
}

double log_norm(DomainId domain, const MultiIndex& a, bool half_d2) {
  validate_index(domain, a);
  int total = 0;
  for (int ai : a) total += std::abs(ai);
  const LogGammaThirds g(3 * (2 * total + 20) + 30);
  switch (domain.kind) {
    case DomainKind::kD1: return log_norm_d1(g, a[0], a[1], a[2]);
    case DomainKind::kD2: return log_norm_d2(g, a[0], a[1], a[2], half_d2);
    case DomainKind::kD3: return log_norm_d3(g, a[0], a[1], a[2]);
    case DomainKind::kD4: return log_norm_d4(g, a[0], a[1], a[2], a[3]);
    case DomainKind::kBall: return log_norm_ball(g, a);
  }
  raise(ErrorCode::kPreconditionViolation, "log_norm: unknown domain");
}

}  // namespace

void validate_index(DomainId domain, const MultiIndex& alpha) {
  require(static_cast<int>(alpha.size()) == domain.dim(), ErrorCode::kDimensionMismatch,
          "multi-index length does not match the domain dimension");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const bool ok = (domain.kind == DomainKind::kD3 && i == 0) ? alpha[0] >= -1 - alpha[2]
                                                                : alpha[i] >= 0;
    if (!ok)
      raise(ErrorCode::kInvalidIndex,
            "multi-index outside the orthogonal set of " + to_string(domain));
  }
}

double log_monomial_norm(DomainId domain, const MultiIndex& alpha) {
  return log_norm(domain, alpha, true);
}

double monomial_norm(DomainId domain, const MultiIndex& alpha) {
  return std::exp(log_monomial_norm(domain, alpha));
}

double monomial_norm_alternative(DomainId domain, const MultiIndex& alpha) {
  return std::exp(log_norm(domain, alpha, false));
}

double monomial_norm_quadrature(DomainId domain, const MultiIndex& a, int radial_nodes) {
  validate_index(domain, a);
  require(radial_nodes >= 1, ErrorCode::kPreconditionViolation, "radial_nodes must be >= 1");
  const int n = radial_nodes;
  // After integrating the phases, dV = pi^n dt_1 ... dt_n with t_i = |z_i|^2
  // and |z^alpha|^2 = prod t_i^alpha_i. The t_2, t_3 (and t_4) integrals are
  // elementary and done inline; the rest is quadrature.
  switch (domain.kind) {
    case DomainKind::kD1: {
      const double inner = integrate_legendre(
          [&](double t) { return std::pow(t, a[0]) * std::pow(1.0 - t, a[1] + a[2] + 2); }, 0.0,
          1.0, n);
      return std::pow(kPi, 3) * inner / ((a[1] + 1.0) * (a[2] + 1.0));
    }
    case DomainKind::kD2: {
      const double inner = integrate_legendre(
          [&](double t) { return std::pow(t, a[0]) * std::pow(1.0 - t * t * t, a[1] + a[2] + 2); },
          0.0, 1.0, n);
      return std::pow(kPi, 3) * inner / ((a[1] + 1.0) * (a[2] + 1.0));
    }
    case DomainKind::kD3: {
      // t_2 < 1 - t_1 and t_3 < t_1 - t_1^2.
      const double inner = integrate_legendre(
          [&](double t) {
            return std::pow(t, a[0]) * std::pow(1.0 - t, a[1] + 1) * std::pow(t - t * t, a[2] + 1);
          },
          0.0, 1.0, n);
      return std::pow(kPi, 3) * inner / ((a[1] + 1.0) * (a[2] + 1.0));
    }
    case DomainKind::kD4: {
      // sigma = t_1 + t_2, t_1 = sigma u; t_3 < 1 - sigma, t_4 < sigma - sigma^2.
      const double inner = integrate_legendre(
          [&](double sigma) {
            const double ang = integrate_legendre(
                [&](double u) { return std::pow(u, a[0]) * std::pow(1.0 - u, a[1]); }, 0.0, 1.0, n);
            return std::pow(sigma, a[0] + a[1] + 1) * ang * std::pow(1.0 - sigma, a[2] + 1) *
                   std::pow(sigma - sigma * sigma, a[3] + 1);
          },
          0.0, 1.0, n);
      return std::pow(kPi, 4) * inner / ((a[2] + 1.0) * (a[3] + 1.0));
    }
    case DomainKind::kBall: {
      // Peel one coordinate at a time off the simplex sum t_i < 1.
      double acc = 1.0;
      int rest = std::accumulate(a.begin(), a.end(), 0);
      const int dim = static_cast<int>(a.size());
      for (int i = 0; i < dim; ++i) {
        rest -= a[i];
        const int remaining = dim - i - 1;
        acc *= integrate_legendre(
            [&](double t) { return std::pow(t, a[i]) * std::pow(1.0 - t, rest + remaining); }, 0.0,
            1.0, n);
      }
      return std::pow(kPi, dim) * acc;
    }
  }
  raise(ErrorCode::kPreconditionViolation, "monomial_norm_quadrature: unknown domain");
}

TruncationConfig kernel_series_config() {
  TruncationConfig cfg;
  cfg.max_total_degree = 120;
  cfg.abs_tol = 1e-12;
  cfg.consecutive_small = 3;
  return cfg;
}

namespace {

std::vector<cplx> power_table(cplx x, int n) {
  std::vector<cplx> p(n + 1);
  p[0] = 1.0;
  for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * x;
  return p;
}

}  // namespace

SeriesResult kernel_series(DomainId domain, const KernelPoint& pt, const TruncationConfig& cfg) {
  cfg.validate();
  const auto dim = static_cast<std::size_t>(domain.dim());
  require(pt.z.size() == dim && pt.w.size() == dim, ErrorCode::kDimensionMismatch,
          "kernel_series: point length does not match the domain");
  const DomainSpec spec = domain_spec(domain);
  require(contains(spec, pt.z) && contains(spec, pt.w), ErrorCode::kPreconditionViolation,
          "kernel_series: point outside the domain");
  const std::vector<cplx> nu = pt.nu();
  const int cap = cfg.max_total_degree;
  const LogGammaThirds g(3 * (3 * cap + 20));
  ShellAccumulator acc(cfg);

  switch (domain.kind) {
    case DomainKind::kD1:
    case DomainKind::kD2: {
      const auto p1 = power_table(nu[0], cap);
      const auto p2 = power_table(nu[1], cap);
      const auto p3 = power_table(nu[2], cap);
      const bool d1 = domain.kind == DomainKind::kD1;
      for (int d = 0; d < cap; ++d) {
        cplx shell = 0.0;
        for (int a1 = 0; a1 <= d; ++a1)
          for (int a2 = 0; a1 + a2 <= d; ++a2) {
            const int a3 = d - a1 - a2;
            const double ln = d1 ? log_norm_d1(g, a1, a2, a3) : log_norm_d2(g, a1, a2, a3, true);
            shell += std::exp(-ln) * p1[a1] * p2[a2] * p3[a3];
          }
        if (acc.add(shell)) break;
      }
      break;
    }
    case DomainKind::kD3: {
      const cplx n1 = nu[0];
      const cplx om = 1.0 - n1;
      require(std::abs(nu[1] / om) < 1.0 && std::abs(nu[2] / (om * n1)) < 1.0,
              ErrorCode::kPreconditionViolation,
              "kernel_series(d3): need |nu2/(1-nu1)| < 1 and |nu3/((1-nu1) nu1)| < 1");
      // alpha_1 = beta - alpha_3 - 1 with beta >= 0: z^alpha conj(w^alpha) =
      // nu1^beta nu2^alpha_2 (nu3/nu1)^alpha_3 / nu1.
      const auto p1 = power_table(n1, cap);
      const auto p2 = power_table(nu[1], cap);
      const auto py = power_table(nu[2] / n1, cap);
      for (int d = 0; d < cap; ++d) {
        cplx shell = 0.0;
        for (int beta = 0; beta <= d; ++beta)
          for (int a2 = 0; beta + a2 <= d; ++a2) {
            const int a3 = d - beta - a2;
            const double ln = log_norm_d3(g, beta - a3 - 1, a2, a3);
            shell += std::exp(-ln) * p1[beta] * p2[a2] * py[a3];
          }
        if (acc.add(shell / n1)) break;
      }
      break;
    }
    case DomainKind::kD4: {
      // sum over alpha_1 + alpha_2 = t of nu1^a1 nu2^a2 / ||z^alpha||^2 equals
      // (nu1 + nu2)^t / ||z^(t,0,a3,a4)||^2 by the binomial theorem, since the
      // norm depends on (a1, a2) only through Gamma(a1+1) Gamma(a2+1) and t.
      const auto ps = power_table(nu[0] + nu[1], cap);
      const auto p3 = power_table(nu[2], cap);
      const auto p4 = power_table(nu[3], cap);
      for (int d = 0; d < cap; ++d) {
        cplx shell = 0.0;
        for (int t = 0; t <= d; ++t)
          for (int a3 = 0; t + a3 <= d; ++a3) {
            const int a4 = d - t - a3;
            shell += std::exp(-log_norm_d4(g, t, 0, a3, a4)) * ps[t] * p3[a3] * p4[a4];
          }
        if (acc.add(shell)) break;
      }
      break;
    }
    case DomainKind::kBall: {
      cplx inner = 0.0;
      for (const cplx& v : nu) inner += v;
      MultiIndex a(dim, 0);
      cplx p = 1.0;
      for (int d = 0; d < cap; ++d) {
        a[0] = d;
        if (d > 0) p *= inner;
        if (acc.add(std::exp(-log_norm_ball(g, a)) * p)) break;
      }
      break;
    }
  }
  return acc.finish(("kernel_series(" + to_string(domain) + ")").c_str());
}

namespace {

// Smallest rho in (0, inf) with inside(rho) true, for a predicate monotone in
// rho (false below the threshold, true above).
template <class Pred>
double bisect_rate(Pred inside) {
  double lo = 0.0, hi = 1.0;
  while (!inside(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) return hi;
  }
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

double series_decay_rate(DomainId domain, const KernelPoint& pt) {
  const std::vector<cplx> nu = pt.nu();
  std::vector<double> a(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) a[i] = std::abs(nu[i]);
  switch (domain.kind) {
    case DomainKind::kD1: return std::max(a[0] + a[1], a[0] + a[2]);
    case DomainKind::kD2: {
      // (a1/rho)^3 + b/rho = 1
      const double b = std::max(a[1], a[2]);
      if (a[0] == 0.0) return b;
      return bisect_rate([&](double r) { return r * r * r - b * r * r - a[0] * a[0] * a[0] > 0.0; });
    }
    case DomainKind::kD3:
      if (a[0] == 0.0) return INFINITY;
      return a[0] + std::max(a[1], a[2] / a[0]);
    case DomainKind::kD4: {
      const double s = std::abs(nu[0] + nu[1]);
      const double z = a[2], w = a[3];
      if (s == 0.0 && z == 0.0 && w == 0.0) return 0.0;
      return bisect_rate([&](double rho) {
        const double ss = s / rho, zz = z / rho, ww = w / rho;
        if (ss + zz >= 1.0 || 4.0 * ww >= 1.0) return false;
        const double q = std::sqrt(1.0 - 4.0 * ww);
        const double r = 4.0 * ww / ((1.0 + q) * (1.0 + q));
        return ss * (1.0 + r) < 1.0 && zz * (1.0 + r) < 1.0;
      });
    }
    case DomainKind::kBall: {
      cplx inner = 0.0;
      for (const cplx& v : nu) inner += v;
      return std::abs(inner);
    }
  }
  return INFINITY;
}

// ---------------------------------------------------------------------------
// Volumes and Monte Carlo.

namespace {

constexpr std::uint64_t kBlockSize = 1 << 16;

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  return splitmix64(splitmix64(seed) ^ (block * 0xd1342543de82ef95ULL));
}

double box_volume(const DomainSpec& spec) {
  double v = 1.0;
  for (double b : spec.box) v *= kPi * b;
  return v;
}

}  // namespace

MonteCarloEstimate volume_monte_carlo(DomainId domain, std::uint64_t samples, std::uint64_t seed) {
  require(samples >= 1, ErrorCode::kPreconditionViolation, "volume: samples must be >= 1");
  const DomainSpec spec = domain_spec(domain);
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<std::uint64_t> hits(blocks, 0);
  parallel_blocks(blocks, [&](std::size_t b) {
    Rng rng(block_seed(seed, b));
    const std::uint64_t begin = b * kBlockSize;
    const std::uint64_t end = std::min(samples, begin + kBlockSize);
    std::vector<double> t(spec.dim);
    std::uint64_t h = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      for (int k = 0; k < spec.dim; ++k) t[k] = spec.box[k] * rng.uniform();
      if (contains_moduli(spec, t)) ++h;
    }
    hits[b] = h;
  });
  MonteCarloEstimate est;
  est.samples = samples;
  est.accepted = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  const double p = static_cast<double>(est.accepted) / static_cast<double>(samples);
  const double box = box_volume(spec);
  est.value = box * p;
  est.std_error = box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return est;
}

double volume(DomainId domain, const VolumeMethod& method) {
  const MultiIndex zero(domain.dim(), 0);
  switch (method.kind) {
    case VolumeMethod::Kind::kFormula: return monomial_norm(domain, zero);
    case VolumeMethod::Kind::kQuadrature: return monomial_norm_quadrature(domain, zero, method.nodes);
    case VolumeMethod::Kind::kMonteCarlo:
      return volume_monte_carlo(domain, method.samples, method.seed).value;
  }
  raise(ErrorCode::kPreconditionViolation, "volume: unknown method");
}

ComplexMonteCarloEstimate monte_carlo_inner_product(DomainId domain, const MultiIndex& alpha,
                                                    const MultiIndex& beta, std::uint64_t samples,
                                                    std::uint64_t seed) {
  validate_index(domain, alpha);
  validate_index(domain, beta);
  require(samples >= 2, ErrorCode::kPreconditionViolation, "inner product: samples must be >= 2");
  const DomainSpec spec = domain_spec(domain);
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<cplx> sums(blocks);
  std::vector<double> sq(blocks);
  parallel_blocks(blocks, [&](std::size_t b) {
    Rng rng(block_seed(seed, b));
    const std::uint64_t begin = b * kBlockSize;
    const std::uint64_t end = std::min(samples, begin + kBlockSize);
    cplx s = 0.0;
    double q = 0.0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const ComplexPoint z = sample_box_point(spec, rng);
      if (!contains(spec, z)) continue;
      cplx f = 1.0;
      for (int k = 0; k < spec.dim; ++k)
        f *= detail::ipow(z[k], alpha[k]) * std::conj(detail::ipow(z[k], beta[k]));
      s += f;
      q += std::norm(f);
    }
    sums[b] = s;
    sq[b] = q;
  });
  cplx s = 0.0;
  double q = 0.0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    s += sums[b];
    q += sq[b];
  }
  const double n = static_cast<double>(samples);
  const cplx mean = s / n;
  const double var = std::max(0.0, q / n - std::norm(mean));
  const double box = box_volume(spec);
  return {box * mean, box * std::sqrt(var / (n - 1.0))};
}

}  // namespace bergman
