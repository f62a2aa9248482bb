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

#include "bergman/kernels.hpp"

#include <cmath>
#include <string>

#include "bergman/error.hpp"
#include "bergman/geometry.hpp"
#include "bergman/jet.hpp"
#include "bergman/kernel_series.hpp"
#include "detail/cmath.hpp"
#include "detail/f8_closed.hpp"
#include "detail/quad_sum.hpp"

namespace bergman {

using detail::kPi;

double d2_prefactor() { return 3.0 / (kPi * kPi * kPi); }
double d2_prefactor_alternative() { return 3.0 / (2.0 * kPi * kPi * kPi); }

namespace {

std::vector<cplx> checked_nu(DomainId domain, const KernelPoint& pt) {
  const auto n = static_cast<std::size_t>(domain.dim());
  require(pt.z.size() == n && pt.w.size() == n, ErrorCode::kDimensionMismatch,
          "kernel: point length does not match the domain");
  const DomainSpec spec = domain_spec(domain);
  require(contains(spec, pt.z) && contains(spec, pt.w), ErrorCode::kPreconditionViolation,
          ("kernel: point outside " + to_string(domain)).c_str());
  return pt.nu();
}

cplx cube(cplx x) { return x * x * x; }

}  // namespace

cplx kernel_ball(int n, const KernelPoint& pt) {
  const std::vector<cplx> nu = checked_nu(DomainId::ball(n), pt);
  cplx inner = 0.0;
  for (const cplx& v : nu) inner += v;
  double norm = 1.0;  // n! / pi^n
  for (int i = 1; i <= n; ++i) norm *= i / kPi;
  return norm * detail::ipow(1.0 - inner, -(n + 1));
}

cplx kernel_d1(const KernelPoint& pt) {
  const std::vector<cplx> v = checked_nu(DomainId::d1(), pt);
  const cplx n1 = v[0], n2 = v[1], n3 = v[2];
  const cplx num = 3.0 - 6.0 * n1 + 3.0 * n1 * n1 + n1 * (n2 + n3) - n2 - n3 - n2 * n3;
  return num / (kPi * kPi * kPi * cube(1.0 - n1 - n2) * cube(1.0 - n1 - n3));
}

namespace {

cplx d3_formula(const std::vector<cplx>& v, bool variant) {
  const cplx n1 = v[0], n2 = v[1], n3 = v[2];
  const cplx last = variant ? 3.0 * n1 + n3 - 3.0 : 3.0 * n1 + n2 - 3.0;
  const cplx num = n1 * (n3 * (n1 - n2 - 1.0) + (n1 - 1.0) * n1 * last);
  return num / (kPi * kPi * kPi * cube(n1 + n2 - 1.0) * cube((n1 - 1.0) * n1 + n3));
}

}  // namespace

cplx kernel_d3(const KernelPoint& pt) { return d3_formula(checked_nu(DomainId::d3(), pt), false); }

cplx kernel_d3_variant(const KernelPoint& pt) {
  return d3_formula(checked_nu(DomainId::d3(), pt), true);
}

cplx kernel_d2(const KernelPoint& pt) {
  const std::vector<cplx> v = checked_nu(DomainId::d2(), pt);
  if (std::abs(v[1] - v[2]) < kD2DiagonalThreshold || std::abs(v[1]) < kD2ZeroThreshold ||
      std::abs(v[2]) < kD2ZeroThreshold) {
    raise(ErrorCode::kDegenerateInput, "kernel_d2: nu2, nu3 too close to 0 or to each other");
  }
  // K = (3/pi^3) d2/dnu2 dnu3 { nu2 nu3 sum_j C_j nu1^(j-1) F8(3 + j/3, 1; j/3, 3; nu1^3, nu2, nu3) }
  // with C_j = Gamma(3 + j/3) / (2 Gamma(j/3)).
  const cplx x = v[0];
  const Jet2 y = Jet2::var_u(v[1]);
  const Jet2 z = Jet2::var_v(v[2]);
  const Jet2 braces = 14.0 / 27.0 * detail::f8_ten_thirds_general(x, y, z) +
                      40.0 / 27.0 * x * detail::f8_eleven_thirds_general(x, y, z) +
                      3.0 * x * x * detail::f8_four(x, y, z);
  const Jet2 inner = y * z * braces;
  return d2_prefactor() * inner.duv;
}

cplx kernel_d4(const KernelPoint& pt) {
  const std::vector<cplx> v = checked_nu(DomainId::d4(), pt);
  const cplx n3 = v[2], n4 = v[3];
  if (std::abs(n4) < kD4ZeroThreshold || std::abs(n4 - (n3 - n3 * n3)) < kD4ZeroThreshold ||
      std::abs(1.0 - 4.0 * n4) < kD4BranchThreshold) {
    raise(ErrorCode::kDegenerateInput, "kernel_d4: nu4 on a removable singular set");
  }
  // K = (1/pi^4) d2/dnu3 dnu4 [nu3 nu4 S(nu1, nu2, nu3, nu4)]
  const detail::QuadSumJet s = detail::quadruple_sum_jet(v[0] + v[1], n3, n4);
  const cplx mixed = s.value + n3 * s.dz + n4 * s.dw + n3 * n4 * s.dzw;
  return mixed / (kPi * kPi * kPi * kPi);
}

cplx kernel_closed(DomainId domain, const KernelPoint& pt) {
  switch (domain.kind) {
    case DomainKind::kD1: return kernel_d1(pt);
    case DomainKind::kD2: return kernel_d2(pt);
    case DomainKind::kD3: return kernel_d3(pt);
    case DomainKind::kD4: return kernel_d4(pt);
    case DomainKind::kBall: return kernel_ball(domain.ball_dim, pt);
  }
  raise(ErrorCode::kPreconditionViolation, "kernel_closed: unknown domain");
}

KernelValue kernel_eval(DomainId domain, const KernelPoint& pt, const TruncationConfig& series_cfg) {
  try {
    return {kernel_closed(domain, pt), false};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateInput) throw;
  }
  return {kernel_series(domain, pt, series_cfg).value, true};
}

cplx aux_polynomial(AuxPoly which, const std::vector<cplx>& a) {
  const bool four = which == AuxPoly::kW1Sum || which == AuxPoly::kW2Sum ||
                    which == AuxPoly::kW1Kernel || which == AuxPoly::kW2Kernel;
  require(a.size() == (four ? 4u : 3u), ErrorCode::kDimensionMismatch,
          "aux_polynomial: wrong number of arguments");
  switch (which) {
    case AuxPoly::kV1: {
      const cplx n1 = a[0], n2 = a[1], n3 = a[2];
      const cplx n13 = cube(n1);
      return 6.0 * n13 * n13 * n13 + n13 * n13 * (6.0 * n2 + 6.0 * n3 - 7.0) +
             n13 * (n2 * (6.0 * n3 - 2.0) - 2.0 * (n3 + 2.0)) + n2 * (3.0 * n3 - 4.0) -
             4.0 * n3 + 5.0 + n1 * (n2 * (6.0 * n3 - 7.0) - 7.0 * n3 + 8.0);
    }
    case AuxPoly::kV2: {
      const cplx n1 = a[0], n2 = a[1], n3 = a[2];
      const cplx n13 = cube(n1);
      return 3.0 * n13 * n13 * n13 + n13 * n13 * (3.0 * n2 + 3.0 * n3 + 2.0) +
             n13 * (n2 * (3.0 * n3 + 4.0) + 4.0 * n3 - 13.0) + 3.0 * n13 * n1 * n1 * n1 * n1 +
             2.0 * n13 * n1 * (n2 + n3 - 3.0) + n1 * n2 * (n3 - 2.0) - 2.0 * n1 * n3 + 3.0 * n1;
    }
    case AuxPoly::kP: return detail::f8_aux_p(a[0], a[1], a[2]);
    case AuxPoly::kG: return detail::f8_aux_g(a[0], a[1], a[2]);
    case AuxPoly::kW1Sum:
    case AuxPoly::kW1Kernel: {
      const cplx x = a[0], y = a[1], z = a[2], w = a[3];
      return w * w * (8.0 * x + 8.0 * y - 4.0 * z + 2.0) - (x - 1.0) * (x + y + 2.0 * z + 1.0) +
             w * (x * x * (4.0 * z + 6.0) + x * (4.0 * y * z + 6.0 * y + 4.0 * z - 4.0) -
                  2.0 * y * z - 7.0 * y - 8.0 * z - 4.0);
    }
    case AuxPoly::kW2Sum:
    case AuxPoly::kW2Kernel: {
      // In the kernel form the leading factor is nu4, the quadruple sum's w.
      const cplx x = a[0], y = a[1], z = a[2], w = a[3];
      return w * (4.0 * x * (x + y - 1.0) - 2.0 * y * z - 5.0 * y - 4.0 * z - 2.0) -
             (x - 1.0) * (x + y + 2.0 * z + 1.0);
    }
  }
  raise(ErrorCode::kPreconditionViolation, "aux_polynomial: unknown polynomial");
}

}  // namespace bergman
