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

#pragma once

#include <cstdint>

#include "bergman/special_functions.hpp"
#include "bergman/types.hpp"

namespace bergman {

// Throws kDimensionMismatch on a wrong length and kInvalidIndex when alpha is
// outside the domain's complete orthogonal set (all entries >= 0; on D3 the
// first entry may go down to -1 - alpha_3).
void validate_index(DomainId domain, const MultiIndex& alpha);

// Squared L2 norm of z^alpha. On D2 this is the value confirmed by
// quadrature, which is half of monomial_norm_alternative.
double monomial_norm(DomainId domain, const MultiIndex& alpha);
double log_monomial_norm(DomainId domain, const MultiIndex& alpha);

// Closed form with twice the D2 value; equal to monomial_norm elsewhere.
double monomial_norm_alternative(DomainId domain, const MultiIndex& alpha);

// Polar-coordinate reduction to a 1-D integral in t_1 = |z_1|^2 (D1-D3, balls
// via iterated 1-D integrals) or a 2-D integral (D4), then Gauss-Legendre.
double monomial_norm_quadrature(DomainId domain, const MultiIndex& alpha,
                                int radial_nodes = 64);

// Defaults for the orthonormal-series oracle.
TruncationConfig kernel_series_config();

// sum_alpha z^alpha conj(w)^alpha / ||z^alpha||^2, summed by shells of total
// degree. D3 sums over (alpha_1 + alpha_3 + 1, alpha_2, alpha_3) >= 0; D4 and
// the balls sum the binomially collapsed leading coordinates in closed form.
SeriesResult kernel_series(DomainId domain, const KernelPoint& pt,
                           const TruncationConfig& cfg = kernel_series_config());

// Asymptotic shell ratio of the series at pt: the smallest rho such that
// (|nu| / rho) lies on the boundary of the absolute-convergence region.
// The series terms decay like rho^d.
double series_decay_rate(DomainId domain, const KernelPoint& pt);

struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
};

struct ComplexMonteCarloEstimate {
  cplx value{0.0, 0.0};
  double std_error = 0.0;
};

struct VolumeMethod {
  enum class Kind { kFormula, kMonteCarlo, kQuadrature };
  Kind kind = Kind::kFormula;
  std::uint64_t samples = 10'000'000;
  std::uint64_t seed = 1;
  int nodes = 64;

  static VolumeMethod formula() { return {}; }
  static VolumeMethod monte_carlo(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::kMonteCarlo, samples, seed, 64};
  }
  static VolumeMethod quadrature(int nodes = 64) { return {Kind::kQuadrature, 0, 0, nodes}; }
};

double volume(DomainId domain, const VolumeMethod& method);

// Hit-or-miss estimate over the bounding polydisc. Work is split into
// fixed-size blocks seeded from (seed, block index), so the result does not
// depend on the number of threads.
MonteCarloEstimate volume_monte_carlo(DomainId domain, std::uint64_t samples,
                                      std::uint64_t seed);

// Monte-Carlo estimate of <z^alpha, z^beta> over the domain.
ComplexMonteCarloEstimate monte_carlo_inner_product(DomainId domain, const MultiIndex& alpha,
                                                    const MultiIndex& beta,
                                                    std::uint64_t samples, std::uint64_t seed);

}  // namespace bergman
