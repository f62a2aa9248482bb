// Copyright 2026 The Bergman Kernels Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>

#include "bergman/jet.hpp"
#include "bergman/types.hpp"

namespace bergman::detail {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Integer power by repeated squaring (std::pow on complex goes through the
// logarithm and misbehaves at 0).
inline cplx ipow(cplx x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  cplx r = 1.0;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

// log(1 + w) without cancellation for small |w|.
inline cplx log1p(cplx w) {
  if (std::abs(w) < 0.5) return 2.0 * std::atanh(w / (2.0 + w));
  return std::log(1.0 + w);
}

// exp(w) - 1 without cancellation for small |w|.
inline cplx expm1(cplx w) {
  const double x = w.real();
  const double y = w.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

// (1 - w)^p - 1 on the principal branch, accurate near w = 0.
inline cplx pow1m_m1(cplx w, double p) { return expm1(p * log1p(-w)); }

inline Jet2 pow1m_m1(const Jet2& w, double p) {
  const cplx base = 1.0 - w.val;
  const cplx f1 = -p * std::pow(base, p - 1.0);
  const cplx f2 = p * (p - 1.0) * std::pow(base, p - 2.0);
  return jet_apply(w, pow1m_m1(w.val, p), f1, f2);
}

// Principal real power, shared spelling for cplx and Jet2.
inline cplx rpow(cplx a, double p) { return std::pow(a, p); }
inline Jet2 rpow(const Jet2& a, double p) { return jet_pow(a, p); }

inline bool on_real_cut_from_one(cplx w) { return w.imag() == 0.0 && w.real() >= 1.0; }

}  // namespace bergman::detail
