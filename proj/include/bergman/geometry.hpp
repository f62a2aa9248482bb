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

#include <cstdint>
#include <random>
#include <vector>

#include "bergman/types.hpp"

namespace bergman {

// One defining inequality of a domain, written in the squared moduli
// t_i = |z_i|^2:  sum_j coef_j * prod_i t_i^(pow_ji)  <  bound.
// Only what membership and the samplers need; the domains are fixed.
struct Monomial {
  double coef;
  std::vector<int> powers;  // exponents of t_1..t_n
};

struct Inequality {
  std::vector<Monomial> lhs;
  double bound;
  // Monomials on the right of "<" that depend on t (D3, D4): lhs < bound + rhs.
  std::vector<Monomial> rhs;
};

struct DomainSpec {
  DomainId id;
  int dim = 0;
  std::vector<Inequality> inequalities;
  // Bounding box for t_i = |z_i|^2: 0 <= t_i <= box[i].
  std::vector<double> box;
};

DomainSpec domain_spec(DomainId id);

// Strict membership; throws kDimensionMismatch on a length mismatch.
bool contains(const DomainSpec& spec, const ComplexPoint& p);
bool contains(DomainId id, const ComplexPoint& p);

// Membership with the right-hand sides of every defining inequality scaled by
// (1 - margin).
bool contains_with_margin(const DomainSpec& spec, const ComplexPoint& p, double margin);

// Same test on the squared moduli t_i = |z_i|^2 (membership depends on them only).
bool contains_moduli(const DomainSpec& spec, const std::vector<double>& t, double margin = 0.0);

// Deterministic rejection sampler. Points are uniform (with respect to volume)
// over the margin-shrunk domain. Throws kSamplerStall when the acceptance rate
// drops below 1e-6.
std::vector<ComplexPoint> sample_interior(const DomainSpec& spec, std::size_t count,
                                          std::uint64_t seed, double margin = 0.05);

// Seeded generator: std::mt19937_64 (whose output sequence is fixed by the
// standard) plus an explicit 53-bit mantissa conversion, so streams are
// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }  // [0, 1)

 private:
  std::mt19937_64 eng_;
};

// SplitMix64 finaliser, used to derive independent per-block seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Point drawn uniformly (by volume) from the bounding polydisc of the spec.
ComplexPoint sample_box_point(const DomainSpec& spec, Rng& rng);

}  // namespace bergman
