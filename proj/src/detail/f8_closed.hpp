// Copyright 2026 The Bergman Kernels Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Closed forms of F8(a, 1, 1, 1; c1, 3; x^3, y, z) for a = 10/3, 11/3, 4,
// written once for any scalar type supporting +, -, *, / and rpow (cplx for
// plain evaluation, Jet2 for the D2 kernel's mixed derivative in (y, z)).
// Differences (1 - t)^p - 1 go through pow1m_m1 so the 1/y and 1/z poles
// cancel without catastrophic loss.

#include "detail/cmath.hpp"

namespace bergman::detail {

template <class T>
T f8_aux_p(cplx x, const T& y, const T& z) {
  const cplx x3 = x * x * x;
  const cplx x6 = x3 * x3;
  return 2.0 * x6 * x3 + x6 * (2.0 * y + 2.0 * z + 3.0) +
         2.0 * x3 * (y * z + y + z - 6.0) + y * z - 4.0 * y - 4.0 * z + 7.0;
}

template <class T>
T f8_aux_g(cplx x, const T& y, const T& z) {
  const cplx x3 = x * x * x;
  const cplx x6 = x3 * x3;
  return x6 * x3 + x6 * (y + z + 6.0) + x3 * (y * z + 4.0 * y + 4.0 * z - 15.0) +
         2.0 * y * z - 5.0 * y - 5.0 * z + 8.0;
}

template <class T>
T f8_ten_thirds_general(cplx x, const T& y, const T& z) {
  const cplx X = x * x * x;
  const T my = (1.0 - X) - y;
  const T mz = (1.0 - X) - z;
  const T cy = rpow(1.0 - y, 1.0 / 3.0);
  const T ey3 = pow1m_m1(y, -1.0 / 3.0);
  const T ez3 = pow1m_m1(z, -1.0 / 3.0);
  const T ey1 = pow1m_m1(y, 1.0 / 3.0);
  const T ey2 = pow1m_m1(y, 2.0 / 3.0);
  const T ez2 = pow1m_m1(z, 2.0 / 3.0);
  const cplx omx2 = (1.0 - X) * (1.0 - X);

  const T t1 = 9.0 * (z * ey3 - y * ez3) / (7.0 * y * z * (z - y) * mz);
  const T t2 = 9.0 * ey1 / (7.0 * y * cy * my * mz);
  const T t3 = 9.0 * f8_aux_p(x, y, z) / (14.0 * omx2 * my * my * mz * mz);
  const T t4 = 27.0 * ey2 * (my + mz) / (14.0 * y * my * my * mz * mz);
  const T t5 = -27.0 * (y * ez2 - z * ey2) / (14.0 * y * z * (y - z) * mz * mz);
  return t1 + t2 + t3 + t4 + t5;
}

template <class T>
T f8_eleven_thirds_general(cplx x, const T& y, const T& z) {
  const cplx X = x * x * x;
  const T my = (1.0 - X) - y;
  const T mz = (1.0 - X) - z;
  const T cy2 = rpow(1.0 - y, 2.0 / 3.0);
  const T ey23 = pow1m_m1(y, -2.0 / 3.0);
  const T ez23 = pow1m_m1(z, -2.0 / 3.0);
  const T ey1 = pow1m_m1(y, 1.0 / 3.0);
  const T ez1 = pow1m_m1(z, 1.0 / 3.0);
  const T ey2 = pow1m_m1(y, 2.0 / 3.0);
  const cplx omx2 = (1.0 - X) * (1.0 - X);

  const T t1 = 9.0 * (z * ey23 - y * ez23) / (40.0 * y * z * (z - y) * mz);
  const T t2 = 9.0 * f8_aux_g(x, y, z) / (40.0 * omx2 * my * my * mz * mz);
  const T t3 = 27.0 * ey1 * (my + mz) / (40.0 * y * my * my * mz * mz);
  const T t4 = -27.0 * (y * ez1 - z * ey1) / (40.0 * y * z * (y - z) * mz * mz);
  const T t5 = 9.0 * ey2 / (40.0 * y * cy2 * my * mz);
  return t1 + t2 + t3 + t4 + t5;
}

template <class T>
T f8_four(cplx x, const T& y, const T& z) {
  const cplx X = x * x * x;
  const T my = (1.0 - X) - y;
  const T mz = (1.0 - X) - z;
  const T num = 3.0 * X * X + 2.0 * X * (y + z - 3.0) + y * z - 2.0 * y - 2.0 * z + 3.0;
  return num / (3.0 * (X - 1.0) * (X - 1.0) * my * my * mz * mz);
}

// y = 0 reductions to F2(a, 1, 1; c1, 3; x^3, z).
inline cplx f8_ten_thirds_y0(cplx x, cplx z) {
  const cplx X = x * x * x;
  const cplx mz = 1.0 - X - z;
  const cplx c = std::pow(1.0 - z, 1.0 / 3.0);
  const cplx t1 = 3.0 * (X * (2.0 * X * (12.0 - X - z) + 16.0 * z - 15.0) + 4.0 * z - 7.0) /
                  (14.0 * (X - 1.0) * (X - 1.0) * (X - 1.0) * mz * mz);
  const cplx t2 = (27.0 * pow1m_m1(z, 2.0 / 3.0) + 18.0 * z) / (14.0 * z * z * mz * mz);
  const cplx t3 = (3.0 * z * c + 9.0 * pow1m_m1(z, 1.0 / 3.0)) / (7.0 * z * z * c * mz);
  return t1 + t2 + t3;
}

inline cplx f8_eleven_thirds_y0(cplx x, cplx z) {
  const cplx X = x * x * x;
  const cplx mz = 1.0 - X - z;
  const cplx c2 = std::pow(1.0 - z, 2.0 / 3.0);
  const cplx t1 = (-6.0 * X * X * X + X * X * (45.0 - 6.0 * z) + X * (30.0 * z + 9.0) +
                   6.0 * (5.0 * z - 8.0)) /
                  (40.0 * (X - 1.0) * (X - 1.0) * (X - 1.0) * mz * mz);
  const cplx t2 = (27.0 * pow1m_m1(z, 1.0 / 3.0) + 9.0 * z) / (40.0 * z * z * mz * mz);
  const cplx t3 = (6.0 * z * c2 + 9.0 * pow1m_m1(z, 2.0 / 3.0)) / (40.0 * z * z * c2 * mz);
  return t1 + t2 + t3;
}

// y = z = 0 reductions to Gauss functions of x^3.
inline cplx f8_ten_thirds_yz0(cplx x) {
  const cplx X = x * x * x;
  const cplx d = 1.0 - X;
  return (4.0 * X * X * X - 21.0 * X * X + 84.0 * X + 14.0) / (14.0 * d * d * d * d);
}

inline cplx f8_eleven_thirds_yz0(cplx x) {
  const cplx X = x * x * x;
  const cplx d = 1.0 - X;
  return (5.0 * X * X * X - 24.0 * X * X + 60.0 * X + 40.0) / (40.0 * d * d * d * d);
}

}  // namespace bergman::detail
