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

#include <vector>

namespace bergman {

// Nodes and weights of an n-point Gaussian rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

// Gauss-Jacobi rule for the weight (1 - x)^alpha (1 + x)^beta, alpha, beta > -1,
// built with the Golub-Welsch eigenvalue method. Rules are cached, so repeated
// requests are cheap and thread-safe.
const QuadratureRule& gauss_jacobi(int n, double alpha, double beta);

inline const QuadratureRule& gauss_legendre(int n) {
  return gauss_jacobi(n, 0.0, 0.0);
}

// Integrates f over [lo, hi] with n Gauss-Legendre nodes.
template <class F>
auto integrate_legendre(F&& f, double lo, double hi, int n) {
  const QuadratureRule& rule = gauss_legendre(n);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  decltype(f(mid)) acc{};
  for (int i = 0; i < rule.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

}  // namespace bergman
