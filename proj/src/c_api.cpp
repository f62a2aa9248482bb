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

#include "bergman/bergman_c.h"

#include <new>
#include <string>

#include "bergman/complex_parse.hpp"
#include "bergman/error.hpp"
#include "bergman/geometry.hpp"
#include "bergman/kernel_series.hpp"
#include "bergman/kernels.hpp"
#include "bergman/luqikeng.hpp"
#include "bergman/report_json.hpp"
#include "bergman/verify.hpp"

struct bk_report {
  std::string json;
  bool passed = false;
};

namespace {

using namespace bergman;

thread_local std::string g_last_error;

bk_status to_status(ErrorCode code) {
  // ErrorCode and bk_status share their order (bk_status is offset by one).
  return static_cast<bk_status>(static_cast<int>(code) + 1);
}

struct InvalidArgument {
  const char* what;
};

template <typename F>
bk_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return BK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const InvalidArgument& e) {
    g_last_error = e.what;
    return BK_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BK_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BK_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return BK_INTERNAL_ERROR;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument{what};
}

DomainId domain_of(const char* name) {
  need(name, "domain is null");
  return parse_domain(name);
}

ComplexPoint point_of(const bk_complex* p, size_t n) {
  need(p, "point is null");
  ComplexPoint out(n);
  for (size_t i = 0; i < n; ++i) out[i] = {p[i].re, p[i].im};
  return out;
}

KernelPoint pair_of(DomainId d, const bk_complex* z, const bk_complex* w, size_t n) {
  require(n == static_cast<size_t>(d.dim()), ErrorCode::kDimensionMismatch,
          "point length does not match the domain dimension");
  KernelPoint kp(point_of(z, n), point_of(w, n));
  require(contains(d, kp.z) && contains(d, kp.w), ErrorCode::kPreconditionViolation,
          "z and w must lie in the domain");
  return kp;
}

bk_complex to_c(cplx c) { return {c.real(), c.imag()}; }

}  // namespace

extern "C" {

const char* bk_version(void) { return "0.1.0"; }

const char* bk_last_error(void) { return g_last_error.c_str(); }

const char* bk_status_name(bk_status status) {
  switch (status) {
    case BK_OK: return "Ok";
    case BK_INVALID_ARGUMENT: return "InvalidArgument";
    case BK_INTERNAL_ERROR: return "InternalError";
    default:
      if (status > BK_OK && status <= BK_PARSE_ERROR)
        return to_string(static_cast<ErrorCode>(status - 1)).data();
      return "Unknown";
  }
}

bk_status bk_parse_point(const char* text, bk_complex* out, size_t capacity, size_t* count) {
  return guarded([&] {
    need(text, "text is null");
    need(count, "count is null");
    const ComplexPoint p = parse_point(text);
    *count = p.size();
    if (p.size() > capacity) throw InvalidArgument{"output buffer too small"};
    need(out, "output is null");
    for (size_t i = 0; i < p.size(); ++i) out[i] = to_c(p[i]);
  });
}

bk_status bk_parse_index(const char* text, int* out, size_t capacity, size_t* count) {
  return guarded([&] {
    need(text, "text is null");
    need(count, "count is null");
    const MultiIndex a = parse_multi_index(text);
    *count = a.size();
    if (a.size() > capacity) throw InvalidArgument{"output buffer too small"};
    need(out, "output is null");
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  });
}

bk_status bk_domain_dim(const char* domain, size_t* dim) {
  return guarded([&] {
    need(dim, "dim is null");
    const DomainId d = domain_of(domain);
    require(d.kind != DomainKind::kBall || d.ball_dim >= 1, ErrorCode::kPreconditionViolation,
            "ball dimension must be >= 1");
    *dim = static_cast<size_t>(d.dim());
  });
}

bk_status bk_contains(const char* domain, const bk_complex* z, size_t n, int* inside) {
  return guarded([&] {
    need(inside, "inside is null");
    *inside = contains(domain_of(domain), point_of(z, n)) ? 1 : 0;
  });
}

bk_status bk_kernel(const char* domain, const bk_complex* z, const bk_complex* w, size_t n,
                    int allow_series, bk_complex* out, int* used_series) {
  return guarded([&] {
    need(out, "output is null");
    const DomainId d = domain_of(domain);
    const KernelPoint kp = pair_of(d, z, w, n);
    KernelValue v;
    if (allow_series) {
      TruncationConfig cfg = kernel_series_config();
      cfg.max_total_degree = 600;
      v = kernel_eval(d, kp, cfg);
    } else {
      v.value = kernel_closed(d, kp);
    }
    *out = to_c(v.value);
    if (used_series) *used_series = v.from_series ? 1 : 0;
  });
}

bk_status bk_kernel_series(const char* domain, const bk_complex* z, const bk_complex* w, size_t n,
                           int max_degree, double tol, bk_complex* out, double* tail_estimate,
                           int* terms_used) {
  return guarded([&] {
    need(out, "output is null");
    const DomainId d = domain_of(domain);
    const KernelPoint kp = pair_of(d, z, w, n);
    TruncationConfig cfg = kernel_series_config();
    if (max_degree > 0) cfg.max_total_degree = max_degree;
    if (tol > 0.0) cfg.abs_tol = tol;
    const SeriesResult r = kernel_series(d, kp, cfg);
    *out = to_c(r.value);
    if (tail_estimate) *tail_estimate = r.tail_estimate;
    if (terms_used) *terms_used = r.terms_used;
  });
}

bk_status bk_monomial_norm(const char* domain, const int* alpha, size_t n, double* out) {
  return guarded([&] {
    need(alpha, "alpha is null");
    need(out, "output is null");
    *out = monomial_norm(domain_of(domain), MultiIndex(alpha, alpha + n));
  });
}

bk_status bk_monomial_norm_quadrature(const char* domain, const int* alpha, size_t n, int nodes,
                                      double* out) {
  return guarded([&] {
    need(alpha, "alpha is null");
    need(out, "output is null");
    *out = monomial_norm_quadrature(domain_of(domain), MultiIndex(alpha, alpha + n),
                                    nodes > 0 ? nodes : 64);
  });
}

bk_status bk_volume(const char* domain, bk_volume_method method, uint64_t samples, uint64_t seed,
                    double* value, double* std_error) {
  return guarded([&] {
    need(value, "value is null");
    const DomainId d = domain_of(domain);
    double se = 0.0;
    switch (method) {
      case BK_VOLUME_FORMULA: *value = volume(d, VolumeMethod::formula()); break;
      case BK_VOLUME_QUADRATURE: *value = volume(d, VolumeMethod::quadrature()); break;
      case BK_VOLUME_MONTE_CARLO: {
        const MonteCarloEstimate est = volume_monte_carlo(d, samples, seed);
        *value = est.value;
        se = est.std_error;
        break;
      }
      default: throw InvalidArgument{"unknown volume method"};
    }
    if (std_error) *std_error = se;
  });
}

bk_status bk_biholomorphism_check(const bk_complex* z, const bk_complex* w, double* residual) {
  return guarded([&] {
    need(residual, "residual is null");
    *residual = biholomorphism_check(point_of(z, 3), point_of(w, 3));
  });
}

bk_status bk_proof_inequality_check(const bk_complex* z, const bk_complex* w, int* holds) {
  return guarded([&] {
    need(holds, "holds is null");
    *holds = proof_inequality_check(point_of(z, 3), point_of(w, 3)) ? 1 : 0;
  });
}

bk_status bk_zero_scan(const char* domain, uint64_t pairs, uint64_t seed, double zero_threshold,
                       bk_report_t** out) {
  return guarded([&] {
    need(out, "output is null");
    *out = nullptr;
    const ScanReport r = zero_scan(domain_of(domain), pairs, seed, zero_threshold);
    auto* rep = new bk_report;
    rep->json = dump_json(to_json(r));
    rep->passed = r.zero_hits.empty() && r.hermitian_violations == 0 && r.diagonal_violations == 0;
    *out = rep;
  });
}

bk_status bk_verify(const char* suite, const bk_verify_options* options, bk_report_t** out) {
  return guarded([&] {
    need(suite, "suite is null");
    need(out, "output is null");
    *out = nullptr;
    VerifyOptions opts;
    if (options) {
      opts.samples = options->samples;
      opts.seed = options->seed;
      opts.tol = options->tol;
      if (options->domain) opts.domain = parse_domain(options->domain);
    }
    const SuiteReport r = run_suite(parse_suite(suite), opts);
    auto* rep = new bk_report;
    rep->json = dump_json(to_json(r));
    rep->passed = r.ok();
    *out = rep;
  });
}

const char* bk_report_json(const bk_report_t* report) {
  return report ? report->json.c_str() : nullptr;
}

int bk_report_passed(const bk_report_t* report) { return report && report->passed ? 1 : 0; }

void bk_report_free(bk_report_t* report) { delete report; }

}  // extern "C"
