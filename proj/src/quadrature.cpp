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

#include "bergman/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "bergman/error.hpp"

namespace bergman {

namespace {

QuadratureRule build_jacobi(int n, double alpha, double beta) {
  // Three-term recurrence of the monic Jacobi polynomials.
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (k == 0) ? (beta - alpha) / (ab + 2.0)
                       : (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double b2;
    if (k == 1) {
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
           (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(b2);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  require(solver.info() == Eigen::Success, ErrorCode::kNonConvergence,
          "Golub-Welsch eigen-solve failed");

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_jacobi(int n, double alpha, double beta) {
  require(n >= 1, ErrorCode::kPreconditionViolation, "quadrature needs n >= 1");
  require(alpha > -1.0 && beta > -1.0, ErrorCode::kPreconditionViolation,
          "Gauss-Jacobi exponents must exceed -1");
  using Key = std::tuple<int, double, double>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<QuadratureRule>> cache;

  const Key key{n, alpha, beta};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto rule = std::make_unique<QuadratureRule>(build_jacobi(n, alpha, beta));
  std::lock_guard<std::mutex> lock(mu);
  // Parameter sweeps (Picard, H3) would otherwise grow the cache unboundedly;
  // Legendre rules are kept since they are reused everywhere.
  if (cache.size() > 512) {
    for (auto it = cache.begin(); it != cache.end();) {
      if (std::get<1>(it->first) != 0.0 || std::get<2>(it->first) != 0.0)
        it = cache.erase(it);
      else
        ++it;
    }
  }
  auto [it, inserted] = cache.emplace(key, std::move(rule));
  return *it->second;
}

}  // namespace bergman
