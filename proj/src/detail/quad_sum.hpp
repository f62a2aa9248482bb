// Copyright 2026 The Bergman Kernels Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bergman/types.hpp"

namespace bergman::detail {

// Value of the quadruple sum S(x, y, z, w) as a function of s = x + y, z, w,
// together with the partials in z and w needed by the D4 kernel.
struct QuadSumJet {
  cplx value;
  cplx dz;
  cplx dw;
  cplx dzw;
};

QuadSumJet quadruple_sum_jet(cplx s, cplx z, cplx w);

}  // namespace bergman::detail
