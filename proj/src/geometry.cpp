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

#include "bergman/geometry.hpp"

#include <cmath>

#include "bergman/error.hpp"
#include "detail/cmath.hpp"

namespace bergman {

namespace {

Monomial mono(double coef, std::vector<int> powers) { return {coef, std::move(powers)}; }

double eval(const std::vector<Monomial>& terms, const std::vector<double>& t) {
  double acc = 0.0;
  for (const Monomial& m : terms) {
    double v = m.coef;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (int k = 0; k < m.powers[i]; ++k) v *= t[i];
    acc += v;
  }
  return acc;
}

std::vector<double> squared_moduli(const ComplexPoint& p) {
  std::vector<double> t(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) t[i] = std::norm(p[i]);
  return t;
}

}  // namespace

DomainSpec domain_spec(DomainId id) {
  DomainSpec s;
  s.id = id;
  s.dim = id.dim();
  switch (id.kind) {
    case DomainKind::kD1:
      s.inequalities = {{{mono(1, {1, 0, 0}), mono(1, {0, 1, 0})}, 1.0, {}},
                        {{mono(1, {1, 0, 0}), mono(1, {0, 0, 1})}, 1.0, {}}};
      s.box = {1.0, 1.0, 1.0};
      break;
    case DomainKind::kD2:
      s.inequalities = {{{mono(1, {3, 0, 0}), mono(1, {0, 1, 0})}, 1.0, {}},
                        {{mono(1, {3, 0, 0}), mono(1, {0, 0, 1})}, 1.0, {}}};
      s.box = {1.0, 1.0, 1.0};
      break;
    case DomainKind::kD3:
      s.inequalities = {{{mono(1, {1, 0, 0}), mono(1, {0, 1, 0})}, 1.0, {}},
                        {{mono(1, {2, 0, 0}), mono(1, {0, 0, 1})}, 0.0, {mono(1, {1, 0, 0})}}};
      s.box = {1.0, 1.0, 0.25};
      break;
    case DomainKind::kD4: {
      const Monomial a = mono(1, {1, 0, 0, 0});
      const Monomial b = mono(1, {0, 1, 0, 0});
      // (t1 + t2)^2 + t4 < t1 + t2
      s.inequalities = {
          {{a, b, mono(1, {0, 0, 1, 0})}, 1.0, {}},
          {{mono(1, {2, 0, 0, 0}), mono(2, {1, 1, 0, 0}), mono(1, {0, 2, 0, 0}),
            mono(1, {0, 0, 0, 1})},
           0.0,
           {a, b}}};
      s.box = {1.0, 1.0, 1.0, 0.25};
      break;
    }
    case DomainKind::kBall: {
      require(id.ball_dim >= 1, ErrorCode::kPreconditionViolation, "ball dimension must be >= 1");
      Inequality q;
      q.bound = 1.0;
      for (int i = 0; i < id.ball_dim; ++i) {
        std::vector<int> pw(id.ball_dim, 0);
        pw[i] = 1;
        q.lhs.push_back(mono(1, pw));
      }
      s.inequalities = {q};
      s.box.assign(id.ball_dim, 1.0);
      break;
    }
  }
  return s;
}

bool contains_with_margin(const DomainSpec& spec, const ComplexPoint& p, double margin) {
  require(static_cast<int>(p.size()) == spec.dim, ErrorCode::kDimensionMismatch,
          "contains: point length does not match the domain dimension");
  return contains_moduli(spec, squared_moduli(p), margin);
}

bool contains_moduli(const DomainSpec& spec, const std::vector<double>& t, double margin) {
  const double scale = 1.0 - margin;
  for (const Inequality& q : spec.inequalities) {
    if (!(eval(q.lhs, t) < scale * (q.bound + eval(q.rhs, t)))) return false;
  }
  return true;
}

bool contains(const DomainSpec& spec, const ComplexPoint& p) {
  return contains_with_margin(spec, p, 0.0);
}

bool contains(DomainId id, const ComplexPoint& p) { return contains(domain_spec(id), p); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ComplexPoint sample_box_point(const DomainSpec& spec, Rng& rng) {
  // |z_i|^2 uniform on [0, box_i] and a uniform phase give the uniform
  // distribution on the disc of radius sqrt(box_i).
  ComplexPoint p(spec.dim);
  for (int i = 0; i < spec.dim; ++i) {
    const double r = std::sqrt(spec.box[i] * rng.uniform());
    const double phi = 2.0 * detail::kPi * rng.uniform();
    p[i] = std::polar(r, phi);
  }
  return p;
}

std::vector<ComplexPoint> sample_interior(const DomainSpec& spec, std::size_t count,
                                          std::uint64_t seed, double margin) {
  require(margin >= 0.0 && margin < 1.0, ErrorCode::kPreconditionViolation,
          "sample_interior: margin must lie in [0, 1)");
  std::vector<ComplexPoint> out;
  out.reserve(count);
  Rng rng(seed);
  std::uint64_t attempts = 0;
  constexpr std::uint64_t kStallWindow = 10'000'000;
  while (out.size() < count) {
    ComplexPoint p = sample_box_point(spec, rng);
    ++attempts;
    if (contains_with_margin(spec, p, margin)) out.push_back(std::move(p));
    if (attempts >= kStallWindow &&
        static_cast<double>(out.size()) < 1e-6 * static_cast<double>(attempts)) {
      raise(ErrorCode::kSamplerStall, "sample_interior: acceptance rate below 1e-6");
    }
  }
  return out;
}

}  // namespace bergman
