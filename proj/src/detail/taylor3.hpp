// Copyright 2026 The Bergman Kernels Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Truncated Taylor expansion in three variables, keeping every monomial whose
// degree in each variable separately is at most 2 (27 coefficients). Used to
// push the first-order differential operators of the quadruple-sum closed form
// through a rational base function without symbolic expansion.

#include <array>
#include <complex>

#include "bergman/error.hpp"
#include "bergman/types.hpp"

namespace bergman::detail {

struct Taylor3 {
  static constexpr int kOrd = 3;  // coefficients 0..2 per variable
  // c[i][j][k] = (1 / i! j! k!) d^i d^j d^k f at the expansion point.
  std::array<std::array<std::array<cplx, kOrd>, kOrd>, kOrd> c{};

  Taylor3() = default;
  Taylor3(cplx v) { c[0][0][0] = v; }  // NOLINT
  Taylor3(double v) { c[0][0][0] = v; }  // NOLINT

  static Taylor3 variable(int which, cplx at) {
    Taylor3 t(at);
    if (which == 0) t.c[1][0][0] = 1.0;
    if (which == 1) t.c[0][1][0] = 1.0;
    if (which == 2) t.c[0][0][1] = 1.0;
    return t;
  }

  cplx value() const { return c[0][0][0]; }

  Taylor3& operator+=(const Taylor3& o) {
    for (int i = 0; i < kOrd; ++i)
      for (int j = 0; j < kOrd; ++j)
        for (int k = 0; k < kOrd; ++k) c[i][j][k] += o.c[i][j][k];
    return *this;
  }
  Taylor3& operator-=(const Taylor3& o) {
    for (int i = 0; i < kOrd; ++i)
      for (int j = 0; j < kOrd; ++j)
        for (int k = 0; k < kOrd; ++k) c[i][j][k] -= o.c[i][j][k];
    return *this;
  }
  Taylor3& operator*=(const Taylor3& o) { return *this = mul(*this, o); }
  Taylor3& operator/=(const Taylor3& o) { return *this = mul(*this, o.inverse()); }

  static Taylor3 mul(const Taylor3& a, const Taylor3& b) {
    Taylor3 r;
    for (int i1 = 0; i1 < kOrd; ++i1)
      for (int j1 = 0; j1 < kOrd; ++j1)
        for (int k1 = 0; k1 < kOrd; ++k1) {
          const cplx x = a.c[i1][j1][k1];
          if (x == cplx(0.0)) continue;
          for (int i2 = 0; i1 + i2 < kOrd; ++i2)
            for (int j2 = 0; j1 + j2 < kOrd; ++j2)
              for (int k2 = 0; k1 + k2 < kOrd; ++k2)
                r.c[i1 + i2][j1 + j2][k1 + k2] += x * b.c[i2][j2][k2];
        }
    return r;
  }

  // f(a) for a scalar function given its Taylor coefficients d[n] = f^(n)/n!
  // at a.value(). The non-constant part h is nilpotent with h^7 = 0.
  Taylor3 compose(const std::array<cplx, 7>& d) const {
    Taylor3 h = *this;
    h.c[0][0][0] = 0.0;
    Taylor3 out(d[0]);
    Taylor3 hp(1.0);
    for (int n = 1; n < 7; ++n) {
      hp = mul(hp, h);
      Taylor3 term = hp;
      for (auto& p : term.c)
        for (auto& q : p)
          for (auto& v : q) v *= d[n];
      out += term;
    }
    return out;
  }

  Taylor3 inverse() const {
    const cplx a0 = value();
    if (a0 == cplx(0.0)) raise(ErrorCode::kDivisionByZero, "Taylor3 inverse of zero");
    std::array<cplx, 7> d;
    cplx p = 1.0 / a0;
    for (int n = 0; n < 7; ++n) {
      d[n] = p;
      p *= -1.0 / a0;
    }
    return compose(d);
  }

  Taylor3 sqrt() const {
    const cplx a0 = value();
    if (a0 == cplx(0.0)) raise(ErrorCode::kDivisionByZero, "Taylor3 sqrt at zero");
    std::array<cplx, 7> d;
    // Binomial coefficients of (1 + t)^(1/2), scaled by a0^(1/2 - n).
    const cplx root = std::sqrt(a0);
    double binom = 1.0;
    cplx scale = root;
    for (int n = 0; n < 7; ++n) {
      d[n] = binom * scale;
      binom *= (0.5 - n) / (n + 1.0);
      scale /= a0;
    }
    return compose(d);
  }
};

inline Taylor3 operator+(Taylor3 a, const Taylor3& b) { return a += b; }
inline Taylor3 operator-(Taylor3 a, const Taylor3& b) { return a -= b; }
inline Taylor3 operator*(const Taylor3& a, const Taylor3& b) { return Taylor3::mul(a, b); }
inline Taylor3 operator/(const Taylor3& a, const Taylor3& b) { return Taylor3::mul(a, b.inverse()); }
inline Taylor3 operator-(const Taylor3& a) { return Taylor3(0.0) - a; }

}  // namespace bergman::detail
