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

#include <cstddef>
#include <vector>

#include "bergman/types.hpp"

namespace bergman {

// Truncation policy shared by every multivariate series in the library.
// Terms are grouped into shells of constant total degree; summation stops
// once `consecutive_small` shells in a row each contribute less than
// `abs_tol` in modulus.
struct TruncationConfig {
  int max_total_degree = 120;
  double abs_tol = 1e-15;
  int consecutive_small = 3;
  // When false, hitting the degree cap returns the partial sum (with its tail
  // estimate) instead of raising kNonConvergence.
  bool require_convergence = true;

  void validate() const;
};

struct SeriesResult {
  cplx value{0.0, 0.0};
  int terms_used = 0;         // number of shells summed
  double tail_estimate = 0.0; // >= 0
  double shell_ratio = 0.0;   // modulus ratio of the last two shells
  bool converged = false;
};

// Accumulates shells and applies the stopping rule of TruncationConfig.
class ShellAccumulator {
 public:
  explicit ShellAccumulator(const TruncationConfig& cfg);

  // Adds the contribution of the next shell; returns true when the stopping
  // rule is satisfied.
  bool add(cplx shell);
  // Finalises; raises kNonConvergence if the cap was hit and convergence is
  // required.
  SeriesResult finish(const char* what) const;

 private:
  const TruncationConfig& cfg_;
  cplx sum_{0.0, 0.0};
  int shells_ = 0;
  int small_run_ = 0;
  double last_ = 0.0;
  double prev_ = 0.0;
  bool done_ = false;
};

// Rising factorial prod_{j<k} (s + j).
cplx pochhammer(cplx s, int k);

// Log-gamma on the branch analytic off the negative real axis (Lanczos for
// Re z >= 1/2, upward recurrence below).
cplx log_gamma(cplx z);

// Gamma(c) / (Gamma(a) Gamma(c - a)) via log-gamma differences.
cplx beta_normaliser(cplx a, cplx c);

// ---------------------------------------------------------------------------
// Gauss 2F1.

SeriesResult gauss_2f1_series(cplx a, cplx b, cplx c, cplx x,
                              const TruncationConfig& cfg = {});

enum class Gauss2F1Closed {
  kOneThird_1_2,           // F(1/3, 1; 2; w)
  kFourThirds_1_2,         // F(4/3, 1; 2; w)
  kFourThirds_1_OneThird,  // F(4/3, 1; 1/3; w)
  kHalfShift,              // F(a, a + 1/2; 2a; w)
  kThreeHalvesShift,       // F((a + 2)/2, (a + 3)/2; a + 1; w)
};

// Elementary closed forms of the five Gauss functions above. `a` is used only
// by the two shifted families. Raises kBranchCut for real arg >= 1.
cplx gauss_2f1_closed(Gauss2F1Closed variant, cplx arg, cplx a = {0.0, 0.0});

// Parameters (a, b, c) of the series a given closed form represents.
struct Gauss2F1Params {
  cplx a, b, c;
};
Gauss2F1Params gauss_2f1_params(Gauss2F1Closed variant, cplx a = {0.0, 0.0});

// ---------------------------------------------------------------------------
// Appell, Horn and Lauricella series.

SeriesResult appell_f1_series(cplx a, cplx b1, cplx b2, cplx c, cplx x, cplx y,
                              const TruncationConfig& cfg = {});

// Picard's single-integral representation of F1, evaluated with Gauss-Jacobi
// quadrature on the endpoint weight u^(a-1) (1-u)^(c-a-1).
cplx appell_f1_picard(cplx a, cplx b1, cplx b2, cplx c, cplx x, cplx y,
                      int quad_nodes = 128);

SeriesResult appell_f2_series(cplx a, cplx b1, cplx b2, cplx c1, cplx c2,
                              cplx x, cplx y,
                              const TruncationConfig& cfg = {});

SeriesResult horn_h3_series(cplx a, cplx b, cplx c, cplx x, cplx y,
                            const TruncationConfig& cfg = {});

cplx horn_h3_integral(cplx a, cplx b, cplx c, cplx x, cplx y,
                      int quad_nodes = 128);

// True when (x, y) lies in the convergence region of the H3 double series:
// |x| < 1/4 for |y| <= 1/2, and |x| + (|y| - 1/2)^2 < 1/4 for 1/2 < |y| < 1.
bool horn_h3_in_region(cplx x, cplx y);

SeriesResult lauricella_f8_series(cplx a, cplx b1, cplx b2, cplx b3, cplx c1,
                                  cplx c2, cplx x, cplx y, cplx z,
                                  const TruncationConfig& cfg = {});

// Right-hand side of the contiguous relation lowering `a` by one in
// F8(a, 1, 1, 1; c1, c2; x, y, z). Requires real a > 1, 1 - x - z != 0 and
// c2 - 1 not in {0, -1, -2, ...}.
cplx f8_recursion_rhs(double a, cplx c1, cplx c2, cplx x, cplx y, cplx z,
                      const TruncationConfig& cfg = {});

// ---------------------------------------------------------------------------
// Closed forms of F8(a, 1, 1, 1; c1, 3; x^3, y, z).

enum class F8Case {
  kTenThirds,     // a = 10/3, c1 = 1/3
  kElevenThirds,  // a = 11/3, c1 = 2/3
  kFour,          // a = 4,    c1 = 1
};

struct F8CaseParams {
  double a, c1, c2;
};
F8CaseParams f8_case_params(F8Case which);

enum class F8Branch { kGeneral, kOneZero, kBothZero, kDiagonalSeries };

struct F8ClosedResult {
  cplx value;
  F8Branch branch;
};

// Thresholds selecting the degenerate branches.
inline constexpr double kF8ZeroThreshold = 1e-8;
inline constexpr double kF8DiagonalThreshold = 1e-6;

// Note that the argument is x, not x^3: the cube is formed internally.
F8ClosedResult f8_closed_dispatch(F8Case which, cplx x, cplx y, cplx z,
                                  const TruncationConfig& series_cfg = {});
inline cplx f8_closed(F8Case which, cplx x, cplx y, cplx z) {
  return f8_closed_dispatch(which, x, y, z).value;
}

// ---------------------------------------------------------------------------
// The quadruple sum
//   S(x,y,z,w) = sum Gamma(m+n+2) Gamma(m+n+k+2l+6)
//                    / (m! n! Gamma(m+n+l+3) Gamma(k+l+3)) x^m y^n z^k w^l.

SeriesResult quadruple_sum_series(cplx x, cplx y, cplx z, cplx w,
                                  const TruncationConfig& cfg = {});
// Closed form of the same sum, valid on the whole region of convergence
// (including w = 0 and w = z - z^2, where it is regular).
cplx quadruple_sum_closed(cplx x, cplx y, cplx z, cplx w);

enum class QuadSumMode { kSeries, kClosed };

// Distance to w = 0 and to w = z - z^2 below which kClosed raises
// kSingularInput and the caller is expected to use the series.
inline constexpr double kQuadSumSingularThreshold = 1e-8;

// Checked entry point. Both modes require |x| + |y| + |z| < 1 and |4w| < 1;
// kClosed additionally requires 2|x| + 2|y| - |sqrt(1 - 4w)| < 1.
cplx quadruple_sum_S(cplx x, cplx y, cplx z, cplx w, QuadSumMode mode,
                     const TruncationConfig& cfg = {});

// sum_{n,k>=0} (n+1)(k+1)(n+k+3) x^n y^k in closed form.
cplx double_sum_identity(cplx x, cplx y);

}  // namespace bergman
