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

#include "bergman/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bergman/error.hpp"
#include "bergman/quadrature.hpp"
#include "detail/cmath.hpp"
#include "detail/f8_closed.hpp"
#include "detail/quad_sum.hpp"
#include "detail/taylor3.hpp"

namespace bergman {

using detail::kPi;

void TruncationConfig::validate() const {
  require(max_total_degree >= 1, ErrorCode::kPreconditionViolation,
          "max_total_degree must be >= 1");
  require(abs_tol > 0.0, ErrorCode::kPreconditionViolation, "abs_tol must be > 0");
  require(consecutive_small >= 1, ErrorCode::kPreconditionViolation,
          "consecutive_small must be >= 1");
}

ShellAccumulator::ShellAccumulator(const TruncationConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
}

bool ShellAccumulator::add(cplx shell) {
  sum_ += shell;
  ++shells_;
  prev_ = last_;
  last_ = std::abs(shell);
  small_run_ = last_ < cfg_.abs_tol ? small_run_ + 1 : 0;
  done_ = small_run_ >= cfg_.consecutive_small;
  return done_;
}

SeriesResult ShellAccumulator::finish(const char* what) const {
  SeriesResult r;
  r.value = sum_;
  r.terms_used = shells_;
  r.converged = done_;
  double rho = (shells_ >= 2 && prev_ > 0.0) ? last_ / prev_ : 0.0;
  r.shell_ratio = rho;
  rho = std::clamp(rho, 0.0, 0.95);
  r.tail_estimate = last_ / (1.0 - rho);
  if (!done_ && cfg_.require_convergence) {
    raise(ErrorCode::kNonConvergence,
          std::string(what) + ": degree cap " + std::to_string(cfg_.max_total_degree) +
              " reached, last shell " + std::to_string(last_));
  }
  return r;
}

cplx pochhammer(cplx s, int k) {
  cplx r = 1.0;
  for (int j = 0; j < k; ++j) r *= s + static_cast<double>(j);
  return r;
}

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() > 0.0) return std::lgamma(z.real());
  if (z.real() < 0.5) {
    // Shift right with Gamma(z) = Gamma(z + n) / prod (z + k). Principal logs
    // keep the result on the branch that is analytic off the negative axis.
    const int n = static_cast<int>(std::ceil(0.5 - z.real()));
    cplx acc = log_gamma(z + static_cast<double>(n));
    for (int k = 0; k < n; ++k) acc -= std::log(z + static_cast<double>(k));
    return acc;
  }
  static const double g = 7.0;
  static const double coef[9] = {0.99999999999980993,  676.5203681218851,
                                 -1259.1392167224028,  771.32342877765313,
                                 -176.61502916214059,  12.507343278686905,
                                 -0.13857109526572012, 9.9843695780195716e-6,
                                 1.5056327351493116e-7};
  const cplx zm = z - 1.0;
  cplx x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (zm + static_cast<double>(i));
  const cplx t = zm + g + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(x);
}

cplx beta_normaliser(cplx a, cplx c) {
  return std::exp(log_gamma(c) - log_gamma(a) - log_gamma(c - a));
}

namespace {

bool is_nonpositive_integer(cplx c) {
  return c.imag() == 0.0 && c.real() <= 0.0 && std::nearbyint(c.real()) == c.real();
}

void check_denominator(cplx c, const char* what) {
  if (is_nonpositive_integer(c))
    raise(ErrorCode::kPreconditionViolation,
          std::string(what) + ": lower parameter is a non-positive integer");
}

// ∫_0^1 u^p (1 - u)^q f(u) du for complex p, q with Re p, Re q > -1. The real
// parts go into the Gauss-Jacobi weight; imaginary parts stay in the integrand.
template <class F>
cplx jacobi_unit_integral(cplx p, cplx q, int n, F&& f) {
  const QuadratureRule& rule = gauss_jacobi(n, q.real(), p.real());
  const cplx ip(0.0, p.imag());
  const cplx iq(0.0, q.imag());
  cplx acc = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double t = rule.nodes[i];
    const double u = 0.5 * (1.0 + t);
    cplx phase = 1.0;
    if (ip != 0.0) phase *= std::exp(ip * std::log(1.0 + t));
    if (iq != 0.0) phase *= std::exp(iq * std::log(1.0 - t));
    acc += rule.weights[i] * phase * f(u);
  }
  // u^p (1-u)^q du = 2^-(p+q+1) (1+t)^p (1-t)^q dt.
  return acc * std::pow(cplx(2.0), -(p + q + 1.0));
}

}  // namespace

// ---------------------------------------------------------------------------
// Gauss 2F1.

SeriesResult gauss_2f1_series(cplx a, cplx b, cplx c, cplx x, const TruncationConfig& cfg) {
  check_denominator(c, "gauss_2f1_series");
  if (std::abs(x) >= 1.0) raise(ErrorCode::kDivergentInput, "gauss_2f1_series: |x| >= 1");
  ShellAccumulator acc(cfg);
  cplx term = 1.0;
  for (int m = 0; m < cfg.max_total_degree; ++m) {
    if (m > 0) {
      const double k = m - 1;
      term *= (a + k) * (b + k) / ((c + k) * static_cast<double>(m)) * x;
    }
    if (acc.add(term)) break;
  }
  return acc.finish("gauss_2f1_series");
}

cplx gauss_2f1_closed(Gauss2F1Closed variant, cplx w, cplx a) {
  if (detail::on_real_cut_from_one(w))
    raise(ErrorCode::kBranchCut, "gauss_2f1_closed: argument on [1, inf)");
  switch (variant) {
    case Gauss2F1Closed::kOneThird_1_2:
      if (w == 0.0) return 1.0;
      return -3.0 * detail::pow1m_m1(w, 2.0 / 3.0) / (2.0 * w);
    case Gauss2F1Closed::kFourThirds_1_2:
      if (w == 0.0) return 1.0;
      return 3.0 * detail::pow1m_m1(w, -1.0 / 3.0) / w;
    case Gauss2F1Closed::kFourThirds_1_OneThird:
      return (2.0 * w + 1.0) / ((1.0 - w) * (1.0 - w));
    case Gauss2F1Closed::kHalfShift: {
      const cplx t = std::sqrt(1.0 - w);
      return std::pow(2.0 / (1.0 + t), 2.0 * a - 1.0) / t;
    }
    case Gauss2F1Closed::kThreeHalvesShift: {
      // Rearranged so that every factor is regular at w = 0.
      const cplx t = std::sqrt(1.0 - w);
      return std::pow(cplx(2.0), a) * (a - (a - 1.0) / (t + 1.0)) /
             ((a + 1.0) * t * t * t * std::pow(t + 1.0, a - 1.0));
    }
  }
  raise(ErrorCode::kPreconditionViolation, "gauss_2f1_closed: unknown variant");
}

Gauss2F1Params gauss_2f1_params(Gauss2F1Closed variant, cplx a) {
  switch (variant) {
    case Gauss2F1Closed::kOneThird_1_2: return {1.0 / 3.0, 1.0, 2.0};
    case Gauss2F1Closed::kFourThirds_1_2: return {4.0 / 3.0, 1.0, 2.0};
    case Gauss2F1Closed::kFourThirds_1_OneThird: return {4.0 / 3.0, 1.0, 1.0 / 3.0};
    case Gauss2F1Closed::kHalfShift: return {a, a + 0.5, 2.0 * a};
    case Gauss2F1Closed::kThreeHalvesShift: return {(a + 2.0) / 2.0, (a + 3.0) / 2.0, a + 1.0};
  }
  raise(ErrorCode::kPreconditionViolation, "gauss_2f1_params: unknown variant");
}

// ---------------------------------------------------------------------------
// Two- and three-variable series. Each is summed by shells of constant total
// degree d; the term tables are advanced by Pochhammer recurrences so that no
// factorial is ever formed explicitly.

SeriesResult appell_f1_series(cplx a, cplx b1, cplx b2, cplx c, cplx x, cplx y,
                              const TruncationConfig& cfg) {
  check_denominator(c, "appell_f1_series");
  if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0)
    raise(ErrorCode::kDivergentInput, "appell_f1_series: need |x| < 1 and |y| < 1");
  ShellAccumulator acc(cfg);
  std::vector<cplx> u{1.0}, v{1.0};
  cplx ratio = 1.0;  // (a)_d / (c)_d
  for (int d = 0; d < cfg.max_total_degree; ++d) {
    if (d > 0) {
      const double k = d - 1;
      ratio *= (a + k) / (c + k);
      u.push_back(u.back() * (b1 + k) / static_cast<double>(d) * x);
      v.push_back(v.back() * (b2 + k) / static_cast<double>(d) * y);
    }
    cplx shell = 0.0;
    for (int m = 0; m <= d; ++m) shell += u[m] * v[d - m];
    if (acc.add(ratio * shell)) break;
  }
  return acc.finish("appell_f1_series");
}

namespace {

// Table G(m, k) = (a)_{m+k} (b1)_m x^m / ((c1)_m m! (c2)_k), grown one
// anti-diagonal per call. Shared by F2 and F8.
class CoupledTable {
 public:
  CoupledTable(cplx a, cplx b1, cplx c1, cplx c2, cplx x)
      : a_(a), b1_(b1), c1_(c1), c2_(c2), x_(x) {}

  // Extends the table to cover every (m, k) with m + k = d.
  void grow(int d) {
    if (d == 0) {
      rows_.push_back({1.0});
      return;
    }
    for (int m = 0; m < d; ++m) {
      const int k = d - m;  // new entry (m, k) from (m, k - 1)
      const cplx prev = rows_[m].back();
      rows_[m].push_back(prev * (a_ + static_cast<double>(d - 1)) /
                         (c2_ + static_cast<double>(k - 1)));
    }
    const double mm = d - 1;
    const cplx head = rows_[d - 1].front();
    rows_.push_back({head * (a_ + mm) * (b1_ + mm) / ((c1_ + mm) * static_cast<double>(d)) * x_});
  }

  cplx at(int m, int k) const { return rows_[m][k]; }

 private:
  cplx a_, b1_, c1_, c2_, x_;
  std::vector<std::vector<cplx>> rows_;
};

}  // namespace

SeriesResult appell_f2_series(cplx a, cplx b1, cplx b2, cplx c1, cplx c2, cplx x, cplx y,
                              const TruncationConfig& cfg) {
  check_denominator(c1, "appell_f2_series");
  check_denominator(c2, "appell_f2_series");
  if (std::abs(x) + std::abs(y) >= 1.0)
    raise(ErrorCode::kDivergentInput, "appell_f2_series: need |x| + |y| < 1");
  ShellAccumulator acc(cfg);
  CoupledTable g(a, b1, c1, c2, x);
  std::vector<cplx> u{1.0};
  for (int d = 0; d < cfg.max_total_degree; ++d) {
    g.grow(d);
    if (d > 0) u.push_back(u.back() * (b2 + static_cast<double>(d - 1)) / static_cast<double>(d) * y);
    cplx shell = 0.0;
    for (int m = 0; m <= d; ++m) shell += g.at(m, d - m) * u[d - m];
    if (acc.add(shell)) break;
  }
  return acc.finish("appell_f2_series");
}

bool horn_h3_in_region(cplx x, cplx y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ay >= 1.0) return false;
  if (ay <= 0.5) return ax < 0.25;
  return ax + (ay - 0.5) * (ay - 0.5) < 0.25;
}

SeriesResult horn_h3_series(cplx a, cplx b, cplx c, cplx x, cplx y, const TruncationConfig& cfg) {
  check_denominator(c, "horn_h3_series");
  if (!horn_h3_in_region(x, y))
    raise(ErrorCode::kDivergentInput, "horn_h3_series: outside the convergence region");
  ShellAccumulator acc(cfg);
  // rows[m][n] = (a)_{2m+n} (b)_n / ((c)_{m+n} m! n!) x^m y^n
  std::vector<std::vector<cplx>> rows;
  for (int d = 0; d < cfg.max_total_degree; ++d) {
    if (d == 0) {
      rows.push_back({1.0});
    } else {
      for (int m = 0; m < d; ++m) {
        const int n = d - m;
        const double nn = n - 1;
        rows[m].push_back(rows[m].back() * (a + 2.0 * m + nn) * (b + nn) /
                          ((c + static_cast<double>(m) + nn) * static_cast<double>(n)) * y);
      }
      const double mm = d - 1;
      rows.push_back({rows[d - 1].front() * (a + 2.0 * mm) * (a + 2.0 * mm + 1.0) /
                      ((c + mm) * static_cast<double>(d)) * x});
    }
    cplx shell = 0.0;
    for (int m = 0; m <= d; ++m) shell += rows[m][d - m];
    if (acc.add(shell)) break;
  }
  return acc.finish("horn_h3_series");
}

SeriesResult lauricella_f8_series(cplx a, cplx b1, cplx b2, cplx b3, cplx c1, cplx c2, cplx x,
                                  cplx y, cplx z, const TruncationConfig& cfg) {
  check_denominator(c1, "lauricella_f8_series");
  check_denominator(c2, "lauricella_f8_series");
  const double ax = std::abs(x);
  if (ax + std::abs(y) >= 1.0 || ax + std::abs(z) >= 1.0)
    raise(ErrorCode::kDivergentInput, "lauricella_f8_series: need |x|+|y| < 1 and |x|+|z| < 1");
  ShellAccumulator acc(cfg);
  CoupledTable g(a, b1, c1, c2, x);
  std::vector<cplx> u{1.0}, v{1.0}, h{1.0};
  for (int d = 0; d < cfg.max_total_degree; ++d) {
    g.grow(d);
    if (d > 0) {
      const double k = d - 1;
      u.push_back(u.back() * (b2 + k) / static_cast<double>(d) * y);
      v.push_back(v.back() * (b3 + k) / static_cast<double>(d) * z);
      cplx hk = 0.0;
      for (int n = 0; n <= d; ++n) hk += u[n] * v[d - n];
      h.push_back(hk);
    }
    cplx shell = 0.0;
    for (int m = 0; m <= d; ++m) shell += g.at(m, d - m) * h[d - m];
    if (acc.add(shell)) break;
  }
  return acc.finish("lauricella_f8_series");
}

// ---------------------------------------------------------------------------
// Integral representations.

cplx appell_f1_picard(cplx a, cplx b1, cplx b2, cplx c, cplx x, cplx y, int quad_nodes) {
  require(a.real() > 0.0 && (c - a).real() > 0.0, ErrorCode::kPreconditionViolation,
          "appell_f1_picard: need Re(a) > 0 and Re(c - a) > 0");
  require(!detail::on_real_cut_from_one(x) && !detail::on_real_cut_from_one(y),
          ErrorCode::kPreconditionViolation, "appell_f1_picard: x or y on [1, inf)");
  const cplx integral = jacobi_unit_integral(a - 1.0, c - a - 1.0, quad_nodes, [&](double u) {
    return std::pow(1.0 - u * x, -b1) * std::pow(1.0 - u * y, -b2);
  });
  return beta_normaliser(a, c) * integral;
}

cplx horn_h3_integral(cplx a, cplx b, cplx c, cplx x, cplx y, int quad_nodes) {
  require(c.real() > b.real() && b.real() > 0.0, ErrorCode::kPreconditionViolation,
          "horn_h3_integral: need Re(c) > Re(b) > 0");
  TruncationConfig inner;
  inner.max_total_degree = 4000;
  inner.abs_tol = 1e-17;
  const cplx integral = jacobi_unit_integral(b - 1.0, c - b - 1.0, quad_nodes, [&](double u) {
    const cplx q = 1.0 - u * y;
    const cplx arg = 4.0 * x * (1.0 - u) / (q * q);
    return std::pow(q, -a) * gauss_2f1_series(a / 2.0, (a + 1.0) / 2.0, c - b, arg, inner).value;
  });
  return beta_normaliser(b, c) * integral;
}

cplx f8_recursion_rhs(double a, cplx c1, cplx c2, cplx x, cplx y, cplx z,
                      const TruncationConfig& cfg) {
  require(a > 1.0, ErrorCode::kPreconditionViolation, "f8_recursion_rhs: need a > 1");
  const cplx d = 1.0 - x - z;
  require(d != 0.0, ErrorCode::kPreconditionViolation, "f8_recursion_rhs: 1 - x - z = 0");
  // F2 below carries c2 - 1 as a lower parameter; at c2 = 1 the product
  // (c2 - 1) F2 has a nonzero limit that this relation does not cover.
  const cplx c2m = c2 - 1.0;
  require(!(c2m.imag() == 0.0 && c2m.real() <= 0.0 && c2m.real() == std::round(c2m.real())),
          ErrorCode::kPreconditionViolation, "f8_recursion_rhs: c2 - 1 must not be 0, -1, -2, ...");
  const double am = a - 1.0;
  const cplx f8 = lauricella_f8_series(am, 1.0, 1.0, 1.0, c1, c2, x, y, z, cfg).value;
  cplx rhs = (a - c1 - c2 + 1.0) / (am * d) * f8;
  if (c1 != 1.0) rhs += (c1 - 1.0) / am * appell_f1_series(am, 1.0, 1.0, c2, y, z, cfg).value / d;
  rhs += (c2 - 1.0) / am * appell_f2_series(am, 1.0, 1.0, c1, c2 - 1.0, x, y, cfg).value / d;
  return rhs;
}

// ---------------------------------------------------------------------------
// Closed forms of F8(a, 1, 1, 1; c1, 3; x^3, y, z).

F8CaseParams f8_case_params(F8Case which) {
  switch (which) {
    case F8Case::kTenThirds: return {10.0 / 3.0, 1.0 / 3.0, 3.0};
    case F8Case::kElevenThirds: return {11.0 / 3.0, 2.0 / 3.0, 3.0};
    case F8Case::kFour: return {4.0, 1.0, 3.0};
  }
  raise(ErrorCode::kPreconditionViolation, "f8_case_params: unknown case");
}

F8ClosedResult f8_closed_dispatch(F8Case which, cplx x, cplx y, cplx z,
                                  const TruncationConfig& series_cfg) {
  const cplx x3 = x * x * x;
  const double ax3 = std::abs(x3);
  require(ax3 + std::abs(y) < 1.0 && ax3 + std::abs(z) < 1.0, ErrorCode::kPreconditionViolation,
          "f8_closed: need |x^3| + |y| < 1 and |x^3| + |z| < 1");
  if (which == F8Case::kFour) return {detail::f8_four(x, y, z), F8Branch::kGeneral};

  const bool ten = which == F8Case::kTenThirds;
  const bool y_small = std::abs(y) < kF8ZeroThreshold;
  const bool z_small = std::abs(z) < kF8ZeroThreshold;
  if (y_small && z_small) {
    return {ten ? detail::f8_ten_thirds_yz0(x) : detail::f8_eleven_thirds_yz0(x),
            F8Branch::kBothZero};
  }
  if (std::abs(y - z) < kF8DiagonalThreshold * std::max(1.0, std::abs(z))) {
    const F8CaseParams p = f8_case_params(which);
    return {lauricella_f8_series(p.a, 1.0, 1.0, 1.0, p.c1, p.c2, x3, y, z, series_cfg).value,
            F8Branch::kDiagonalSeries};
  }
  if (y_small || z_small) {
    // The y and z slots are interchangeable; the reduced form needs the
    // vanishing one in the y slot.
    const cplx other = y_small ? z : y;
    return {ten ? detail::f8_ten_thirds_y0(x, other) : detail::f8_eleven_thirds_y0(x, other),
            F8Branch::kOneZero};
  }
  return {ten ? detail::f8_ten_thirds_general(x, y, z) : detail::f8_eleven_thirds_general(x, y, z),
          F8Branch::kGeneral};
}

// ---------------------------------------------------------------------------
// Quadruple sum.

namespace {

void check_quadsum_region(cplx x, cplx y, cplx z, cplx w) {
  require(std::abs(x) + std::abs(y) + std::abs(z) < 1.0 && 4.0 * std::abs(w) < 1.0,
          ErrorCode::kPreconditionViolation,
          "quadruple sum: need |x| + |y| + |z| < 1 and |4w| < 1");
}

}  // namespace

SeriesResult quadruple_sum_series(cplx x, cplx y, cplx z, cplx w, const TruncationConfig& cfg) {
  check_quadsum_region(x, y, z, w);
  cfg.validate();
  // Summing over m + n = t first collapses Gamma(t+2)/(m! n!) x^m y^n into
  // (t + 1)(x + y)^t, leaving a triple sum over (t, k, l).
  const cplx s = x + y;
  const int cap = cfg.max_total_degree;
  std::vector<double> lf(3 * cap + 8);
  lf[0] = 0.0;
  for (std::size_t i = 1; i < lf.size(); ++i) lf[i] = lf[i - 1] + std::log(static_cast<double>(i));
  std::vector<cplx> ps{1.0}, pz{1.0}, pw{1.0};

  ShellAccumulator acc(cfg);
  for (int d = 0; d < cap; ++d) {
    if (d > 0) {
      ps.push_back(ps.back() * s);
      pz.push_back(pz.back() * z);
      pw.push_back(pw.back() * w);
    }
    cplx shell = 0.0;
    for (int t = 0; t <= d; ++t) {
      for (int k = 0; t + k <= d; ++k) {
        const int l = d - t - k;
        // Gamma(t+k+2l+6) / (Gamma(t+l+3) Gamma(k+l+3))
        const double coef = std::exp(lf[t + k + 2 * l + 5] - lf[t + l + 2] - lf[k + l + 2]);
        shell += (t + 1.0) * coef * ps[t] * pz[k] * pw[l];
      }
    }
    if (acc.add(shell)) break;
  }
  return acc.finish("quadruple_sum_series");
}

namespace detail {

namespace {

using Coeffs = decltype(Taylor3::c);

// Base function Q(s, z, r) whose image under the first-order operators below
// is the quadruple sum. Here w = r / (1 + r)^2.
Taylor3 quad_sum_base(const Taylor3& s, const Taylor3& z, const Taylor3& r) {
  const Taylor3 r2 = r * r;
  const Taylor3 s2 = s * s;
  const Taylor3 z2 = z * z;
  const Taylor3 num =
      2.0 * r2 * s2 * z - r2 * s2 + 2.0 * r2 * s * z2 - 4.0 * r2 * s * z + r2 * s - r2 * z2 +
      r2 * z + 4.0 * r * s2 * z - 4.0 * r * s2 + 4.0 * r * s * z2 - 12.0 * r * s * z +
      7.0 * r * s - 4.0 * r * z2 + 7.0 * r * z - 2.0 * r + 2.0 * s2 * z - 3.0 * s2 +
      2.0 * s * z2 - 8.0 * s * z + 8.0 * s - 3.0 * z2 + 8.0 * z - 6.0;
  const Taylor3 rp1 = r + 1.0;
  const Taylor3 den = (r - 1.0) * (s - 1.0) * (z - 1.0) * (s + z - 1.0) * (r * s + s - 1.0) *
                      (r * z + z - 1.0);
  return -(rp1 * rp1 * num) / den;
}

// Partial derivative in variable v, in Taylor-coefficient form. The top order
// of that variable becomes invalid and is zeroed.
Coeffs derive(const Coeffs& f, int v) {
  Coeffs out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        int idx[3] = {i, j, k};
        if (idx[v] + 1 > 2) continue;
        int src[3] = {i, j, k};
        src[v] += 1;
        out[i][j][k] = static_cast<double>(src[v]) * f[src[0]][src[1]][src[2]];
      }
  return out;
}

// Multiplication by the coordinate v = v0 + dv.
Coeffs times_var(const Coeffs& f, int v, cplx v0) {
  Coeffs out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        out[i][j][k] = v0 * f[i][j][k];
        int src[3] = {i, j, k};
        if (src[v] > 0) {
          src[v] -= 1;
          out[i][j][k] += f[src[0]][src[1]][src[2]];
        }
      }
  return out;
}

}  // namespace

QuadSumJet quadruple_sum_jet(cplx s0, cplx z0, cplx w0) {
  const Taylor3 s = Taylor3::variable(0, s0);
  const Taylor3 z = Taylor3::variable(1, z0);
  const Taylor3 w = Taylor3::variable(2, w0);
  // r = (1 - q) / (1 + q) with q = sqrt(1 - 4w), written as 4w / (1 + q)^2 to
  // stay accurate as w -> 0.
  const Taylor3 q = (1.0 - 4.0 * w).sqrt();
  const Taylor3 qp1 = q + 1.0;
  const Taylor3 r = 4.0 * w / (qp1 * qp1);
  const Coeffs base = quad_sum_base(s, z, r).c;

  // S = (1 + s d/ds)(s d/ds + z d/dz + 2 w d/dw + 5) Q
  Coeffs lq = times_var(derive(base, 0), 0, s0);
  const Coeffs zq = times_var(derive(base, 1), 1, z0);
  const Coeffs wq = times_var(derive(base, 2), 2, w0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) lq[i][j][k] += zq[i][j][k] + 2.0 * wq[i][j][k] + 5.0 * base[i][j][k];
  const Coeffs slq = times_var(derive(lq, 0), 0, s0);
  auto S = [&](int j, int k) { return lq[0][j][k] + slq[0][j][k]; };
  return {S(0, 0), S(1, 0), S(0, 1), S(1, 1)};
}

}  // namespace detail

cplx quadruple_sum_closed(cplx x, cplx y, cplx z, cplx w) {
  return detail::quadruple_sum_jet(x + y, z, w).value;
}

cplx quadruple_sum_S(cplx x, cplx y, cplx z, cplx w, QuadSumMode mode, const TruncationConfig& cfg) {
  check_quadsum_region(x, y, z, w);
  if (mode == QuadSumMode::kSeries) return quadruple_sum_series(x, y, z, w, cfg).value;
  require(2.0 * std::abs(x) + 2.0 * std::abs(y) - std::abs(std::sqrt(1.0 - 4.0 * w)) < 1.0,
          ErrorCode::kPreconditionViolation,
          "quadruple sum (closed): need 2|x| + 2|y| - |sqrt(1 - 4w)| < 1");
  require(std::abs(w) >= kQuadSumSingularThreshold, ErrorCode::kSingularInput,
          "quadruple sum (closed): w = 0, use the series");
  require(std::abs(w - (z - z * z)) >= kQuadSumSingularThreshold, ErrorCode::kSingularInput,
          "quadruple sum (closed): w = z - z^2, use the series");
  return quadruple_sum_closed(x, y, z, w);
}

cplx double_sum_identity(cplx x, cplx y) {
  require(std::abs(x) < 1.0 && std::abs(y) < 1.0, ErrorCode::kPreconditionViolation,
          "double_sum_identity: need |x| < 1 and |y| < 1");
  const cplx ax = 1.0 - x;
  const cplx ay = 1.0 - y;
  return (3.0 - x - y - x * y) / (ax * ax * ax * ay * ay * ay);
}

}  // namespace bergman
