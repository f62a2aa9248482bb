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

#include <complex>

#include "bergman/error.hpp"
#include "bergman/types.hpp"

namespace bergman {

// Truncated bivariate jet: a function value together with its first partials
// in two designated variables u, v and the mixed partial d2/du dv. Products
// drop the pure second-order terms, which is exact for the mixed partial.
struct Jet2 {
  cplx val{0.0, 0.0};
  cplx du{0.0, 0.0};
  cplx dv{0.0, 0.0};
  cplx duv{0.0, 0.0};

  constexpr Jet2() = default;
  constexpr Jet2(cplx v) : val(v) {}  // NOLINT: constants lift implicitly
  constexpr Jet2(double v) : val(v) {}  // NOLINT
  constexpr Jet2(cplx v, cplx u_, cplx v_, cplx uv_)
      : val(v), du(u_), dv(v_), duv(uv_) {}

  static constexpr Jet2 constant(cplx c) { return Jet2(c); }
  static constexpr Jet2 var_u(cplx u0) { return {u0, 1.0, 0.0, 0.0}; }
  static constexpr Jet2 var_v(cplx v0) { return {v0, 0.0, 1.0, 0.0}; }

  Jet2& operator+=(const Jet2& b) {
    val += b.val; du += b.du; dv += b.dv; duv += b.duv;
    return *this;
  }
  Jet2& operator-=(const Jet2& b) {
    val -= b.val; du -= b.du; dv -= b.dv; duv -= b.duv;
    return *this;
  }
  Jet2& operator*=(const Jet2& b) {
    const Jet2 a = *this;
    val = a.val * b.val;
    du = a.du * b.val + a.val * b.du;
    dv = a.dv * b.val + a.val * b.dv;
    duv = a.duv * b.val + a.du * b.dv + a.dv * b.du + a.val * b.duv;
    return *this;
  }
  Jet2& operator/=(const Jet2& b);
};

// Applies a scalar function with derivatives f0 = f(val), f1 = f'(val),
// f2 = f''(val) by the chain rule.
inline Jet2 jet_apply(const Jet2& a, cplx f0, cplx f1, cplx f2) {
  return {f0, f1 * a.du, f1 * a.dv, f2 * a.du * a.dv + f1 * a.duv};
}

inline Jet2 jet_inverse(const Jet2& a) {
  if (a.val == cplx(0.0, 0.0)) raise(ErrorCode::kDivisionByZero, "jet inverse of zero");
  const cplx r = 1.0 / a.val;
  return jet_apply(a, r, -r * r, 2.0 * r * r * r);
}

inline Jet2& Jet2::operator/=(const Jet2& b) { return *this *= jet_inverse(b); }

inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
inline Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
inline Jet2 operator-(const Jet2& a) { return {-a.val, -a.du, -a.dv, -a.duv}; }
inline Jet2 operator+(const Jet2& a) { return a; }

inline Jet2 jet_add(const Jet2& a, const Jet2& b) { return a + b; }
inline Jet2 jet_mul(const Jet2& a, const Jet2& b) { return a * b; }
inline Jet2 jet_div(const Jet2& a, const Jet2& b) { return a / b; }

// Principal-branch real power. Integer exponents avoid the logarithm so that
// negative real bases stay exact.
Jet2 jet_pow(const Jet2& a, double p);
inline Jet2 pow(const Jet2& a, double p) { return jet_pow(a, p); }
inline Jet2 sqrt(const Jet2& a) { return jet_pow(a, 0.5); }

// Scalar helpers so templated formulas compile for cplx and Jet2 alike.
inline cplx value_of(const cplx& x) { return x; }
inline cplx value_of(const Jet2& x) { return x.val; }

}  // namespace bergman
