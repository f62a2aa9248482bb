#!/usr/bin/env python3
# Copyright 2026 The Bergman Kernels Authors
# SPDX-License-Identifier: Apache-2.0
"""Reference values for the unit tests, computed independently with mpmath.

Every value here comes from a direct definition (hypergeometric sums, polar
integrals, orthonormal-basis sums) evaluated at 30 significant digits; none
of the library's closed forms are used. Output: tests/reference_values.hpp.

    python3 tests/oracle/generate_reference.py > tests/reference_values.hpp
"""
import itertools
import sys

import mpmath as mp

mp.mp.dps = 30


def shells(term_fn, dims, tol=mp.mpf("1e-24"), max_deg=2000, lo=None):
    """Sum term_fn(alpha) over multi-indices grouped by total degree."""
    total = mp.mpc(0)
    small = 0
    for d in range(max_deg):
        s = mp.mpc(0)
        for alpha in compositions(d, dims):
            s += term_fn(alpha)
        total += s
        if abs(s) < tol * max(1, abs(total)):
            small += 1
            if small >= 4:
                return total
        else:
            small = 0
    raise RuntimeError("no convergence")


def compositions(d, k):
    if k == 1:
        yield (d,)
        return
    for i in range(d + 1):
        for rest in compositions(d - i, k - 1):
            yield (i,) + rest


# --- hypergeometric definitions ------------------------------------------------

def f8(a, b1, b2, b3, c1, c2, x, y, z):
    rf = mp.rf
    return shells(lambda t: rf(a, sum(t)) * rf(b1, t[0]) * rf(b2, t[1]) * rf(b3, t[2])
                  / (rf(c1, t[0]) * rf(c2, t[1] + t[2]) * mp.factorial(t[0]) * mp.factorial(t[1])
                     * mp.factorial(t[2])) * x**t[0] * y**t[1] * z**t[2], 3)


def h3(a, b, c, x, y):
    rf = mp.rf
    return shells(lambda t: rf(a, 2 * t[0] + t[1]) * rf(b, t[1]) / (rf(c, t[0] + t[1])
                  * mp.factorial(t[0]) * mp.factorial(t[1])) * x**t[0] * y**t[1], 2)


def quad_sum(x, y, z, w):
    G = mp.gamma
    return shells(lambda t: G(t[0] + t[1] + 2) * G(t[0] + t[1] + t[2] + 2 * t[3] + 6)
                  / (mp.factorial(t[0]) * mp.factorial(t[1]) * G(t[0] + t[1] + t[3] + 3)
                     * G(t[2] + t[3] + 3)) * x**t[0] * y**t[1] * z**t[2] * w**t[3], 4)


# --- monomial norms from the polar integrals -------------------------------------
# With t_i = |z_i|^2 the phase integrals give pi^n dt; the t_2.. integrals are
# over intervals and the remaining one is a beta integral.

def norm(domain, a):
    pi, B = mp.pi, mp.beta
    if domain == "d1":
        return pi**3 / ((a[1] + 1) * (a[2] + 1)) * B(a[0] + 1, a[1] + a[2] + 3)
    if domain == "d2":  # t1 -> s^(1/3)
        return pi**3 / ((a[1] + 1) * (a[2] + 1)) * B(mp.mpf(a[0] + 1) / 3, a[1] + a[2] + 3) / 3
    if domain == "d3":
        return pi**3 / ((a[1] + 1) * (a[2] + 1)) * B(a[0] + a[2] + 2, a[1] + a[2] + 3)
    if domain == "d4":  # sigma = t1 + t2
        return (pi**4 * B(a[0] + 1, a[1] + 1) * B(a[0] + a[1] + a[3] + 3, a[2] + a[3] + 3)
                / ((a[2] + 1) * (a[3] + 1)))
    raise ValueError(domain)


def norm_by_quad(domain, a):
    """Slow cross-check of norm() by nested numerical integration."""
    pi = mp.pi
    if domain == "d1":
        f = lambda t1: t1**a[0] * (1 - t1)**(a[1] + 1) / (a[1] + 1) * (1 - t1)**(a[2] + 1) / (a[2] + 1)
    elif domain == "d2":
        f = lambda t1: t1**a[0] * (1 - t1**3)**(a[1] + a[2] + 2) / ((a[1] + 1) * (a[2] + 1))
    elif domain == "d3":
        f = lambda t1: t1**a[0] * (1 - t1)**(a[1] + 1) * (t1 - t1**2)**(a[2] + 1) / ((a[1] + 1) * (a[2] + 1))
    else:  # t1 = s u, t2 = s (1 - u)
        return pi**4 * mp.quad(lambda s, u: s * (s * u)**a[0] * (s * (1 - u))**a[1]
                               * (1 - s)**(a[2] + 1) * (s - s**2)**(a[3] + 1)
                               / ((a[2] + 1) * (a[3] + 1)), [0, 1], [0, 1])
    return pi**3 * mp.quad(f, [0, 1])


def kernel(domain, z, w):
    nu = [mp.mpc(zi) * mp.conj(mp.mpc(wi)) for zi, wi in zip(z, w)]
    n = len(nu)
    if domain == "d3":
        # alpha_1 >= -1 - alpha_3: sum over beta = alpha_1 + alpha_3 + 1 >= 0.
        def term(t):
            a = (t[0] - t[2] - 1, t[1], t[2])
            return nu[0]**a[0] * nu[1]**a[1] * nu[2]**a[2] / norm(domain, a)
        return shells(term, 3)
    return shells(lambda a: mp.fprod(v**k for v, k in zip(nu, a)) / norm(domain, a), n)


# --- emit ----------------------------------------------------------------------

def c(v):
    v = mp.mpc(v)
    return "{%s, %s}" % (mp.nstr(v.real, 20, min_fixed=-1, max_fixed=1),
                         mp.nstr(v.imag, 20, min_fixed=-1, max_fixed=1))


def r(v):
    return mp.nstr(mp.mpf(v), 20, min_fixed=-1, max_fixed=1)


def point(p):
    return "{" + ", ".join(c(x) for x in p) + "}"


def main():
    out = []
    emit = out.append
    emit("// Generated by tests/oracle/generate_reference.py (mpmath, 30 digits). Do not edit.")
    emit("#pragma once\n\n#include <complex>\n#include <vector>\n")
    emit("namespace ref {\n\nusing C = std::complex<double>;\n")

    emit("// Gauss 2F1(a, b; c; x)")
    emit("struct Gauss { double a, b, c; C x; C value; };")
    gauss = [(1 / 3, 1, 2, 0.5), (4 / 3, 1, 2, mp.mpc(0.3, -0.4)), (4 / 3, 1, 1 / 3, mp.mpc(-0.6, 0.2)),
             (2, 2.5, 4, 0.3), (0.75, 1.25, 1.5, mp.mpc(0.1, 0.6)), (2, 2.5, 3, mp.mpc(-0.5, -0.3)),
             (1.75, 2.25, 2.5, 0.65)]
    emit("inline const std::vector<Gauss> kGauss = {")
    for a, b, cc, x in gauss:
        a, b, cc = mp.mpf(a), mp.mpf(b), mp.mpf(cc)
        emit("    {%s, %s, %s, %s, %s}," % (r(a), r(b), r(cc), c(x), c(mp.hyp2f1(a, b, cc, x))))
    emit("};\n")

    emit("// Appell F1(a; b1, b2; c; x, y)")
    emit("struct AppellF1 { double a, b1, b2, c; C x, y; C value; };")
    emit("inline const std::vector<AppellF1> kAppellF1 = {")
    for a, b1, b2, cc, x, y in [(mp.mpf(4) / 3, 1, 1, 3, 0.2, 0.1), (mp.mpf(7) / 3, 1, 1, 3, 0.3, 0.15),
                                (1.5, 0.5, 2, 2.5, mp.mpc(0.2, 0.3), mp.mpc(-0.4, 0.1))]:
        emit("    {%s, %s, %s, %s, %s, %s, %s}," % (r(a), r(b1), r(b2), r(cc), c(x), c(y),
                                                     c(mp.appellf1(a, b1, b2, cc, x, y))))
    emit("};\n")

    emit("// Appell F2(a; b1, b2; c1, c2; x, y)")
    emit("struct AppellF2 { double a, b1, b2, c1, c2; C x, y; C value; };")
    emit("inline const std::vector<AppellF2> kAppellF2 = {")
    for a, b1, b2, c1, c2, x, y in [(mp.mpf(10) / 3, 1, 1, mp.mpf(1) / 3, 3, mp.mpf(0.2)**3, 0.3),
                                    (2, 1, 1, 1.5, 2, mp.mpc(0.2, 0.1), mp.mpc(-0.3, 0.2))]:
        emit("    {%s, %s, %s, %s, %s, %s, %s, %s}," % (r(a), r(b1), r(b2), r(c1), r(c2), c(x), c(y),
                                                         c(mp.appellf2(a, b1, b2, c1, c2, x, y))))
    emit("};\n")

    emit("// Horn H3(a, b; c; x, y)")
    emit("struct HornH3 { double a, b, c; C x, y; C value; };")
    emit("inline const std::vector<HornH3> kHornH3 = {")
    for a, b, cc, x, y in [(2, 1, 3, 0.1, 0.2), (1, 1, 4, 0.05, 0.1),
                           (1.5, 2, 2.5, mp.mpc(0.05, 0.1), mp.mpc(0.3, -0.4))]:
        emit("    {%s, %s, %s, %s, %s, %s}," % (r(a), r(b), r(cc), c(x), c(y), c(h3(a, b, cc, x, y))))
    emit("};\n")

    emit("// Lauricella F8(a; b1, b2, b3; c1, c2; x, y, z)")
    emit("struct F8 { double a, b1, b2, b3, c1, c2; C x, y, z; C value; };")
    emit("inline const std::vector<F8> kF8 = {")
    f8pts = [(mp.mpf(10) / 3, mp.mpf(1) / 3, 0.2, 0.1, 0.15), (mp.mpf(11) / 3, mp.mpf(2) / 3, 0.25, 0.1, 0.2),
             (4, 1, 0.2, 0.1, 0.15), (mp.mpf(10) / 3, mp.mpf(1) / 3, mp.mpc(0.3, 0.4), mp.mpc(0.2, -0.1), 0),
             (mp.mpf(11) / 3, mp.mpf(2) / 3, mp.mpc(-0.5, 0.2), 0, mp.mpc(0.1, 0.3)),
             (mp.mpf(10) / 3, mp.mpf(1) / 3, 0.6, 0, 0), (mp.mpf(11) / 3, mp.mpf(2) / 3, mp.mpc(0.4, -0.3), 0, 0),
             (4, 1, mp.mpc(0.5, 0.1), mp.mpc(0.1, 0.2), mp.mpc(-0.2, 0.1)),
             (mp.mpf(10) / 3, mp.mpf(1) / 3, mp.mpc(0.3, 0.2), mp.mpc(0.2, 0.1), mp.mpc(0.2, 0.1))]
    for a, c1, x, y, z in f8pts:
        # x is the cube root of the first argument, as in the closed forms.
        x3 = mp.mpc(x)**3
        emit("    {%s, 1, 1, 1, %s, 3, %s, %s, %s, %s}," % (r(a), r(c1), c(x), c(y), c(z),
                                                           c(f8(a, 1, 1, 1, c1, 3, x3, y, z))))
    emit("};\n")

    emit("// Quadruple sum S(x, y, z, w)")
    emit("struct QuadSum { C x, y, z, w; C value; };")
    emit("inline const std::vector<QuadSum> kQuadSum = {")
    for x, y, z, w in [(0.1, 0.05, 0.1, 0.05), (0.2, 0.1, 0.05, 0.1), (0, 0, 0, 0),
                       (mp.mpc(0.1, 0.1), mp.mpc(-0.05, 0.1), mp.mpc(0.2, -0.1), mp.mpc(0.05, 0.08)),
                       (0.15, 0.1, 0.2, 0)]:
        emit("    {%s, %s, %s, %s, %s}," % (c(x), c(y), c(z), c(w), c(quad_sum(x, y, z, w))))
    emit("};\n")

    emit("// log Gamma (principal branch)")
    emit("struct LogGamma { C z; C value; };")
    emit("inline const std::vector<LogGamma> kLogGamma = {")
    for z in [mp.mpf(0.5), mp.mpf(10) / 3, mp.mpc(2, 3), mp.mpc(-2.5, 0.5), mp.mpc(0.1, -7), mp.mpf(150.25)]:
        emit("    {%s, %s}," % (c(z), c(mp.loggamma(z))))
    emit("};\n")

    emit("// Squared monomial norms")
    emit("struct Norm { const char* domain; std::vector<int> alpha; double value; };")
    emit("inline const std::vector<Norm> kNorms = {")
    norms = [("d1", (0, 0, 0)), ("d1", (2, 1, 3)), ("d2", (0, 0, 0)), ("d2", (1, 2, 0)), ("d2", (5, 0, 1)),
             ("d3", (0, 0, 0)), ("d3", (1, 0, 0)), ("d3", (-1, 0, 0)), ("d3", (-3, 1, 2)), ("d3", (2, 2, 1)),
             ("d4", (0, 0, 0, 0)), ("d4", (1, 0, 2, 1)), ("d4", (0, 3, 0, 2))]
    for dom, a in norms:
        v = norm(dom, a)
        check = norm_by_quad(dom, a)
        assert abs(v - check) < mp.mpf("1e-12") * v, (dom, a, v, check)
        emit('    {"%s", {%s}, %s},' % (dom, ", ".join(map(str, a)), r(v)))
    emit("};\n")

    emit("// Bergman kernels from orthonormal-basis sums")
    emit("struct Kernel { const char* domain; std::vector<C> z, w; C value; };")
    emit("inline const std::vector<Kernel> kKernels = {")
    kpts = [("d1", (0.3, 0.4, 0.2), (0.3, 0.4, 0.2)),
            ("d1", (mp.mpc(0.3, 0.2), -0.4, mp.mpc(0, 0.1)), (0.5, mp.mpc(0.2, -0.3), 0.4)),
            ("d1", (0.7, 0.2, 0.3), (0.7, 0.2, 0.3)),
            ("d2", (0.5, 0.3, 0.2), (0.5, 0.3, 0.2)),
            ("d2", (mp.mpc(0, 0.6), 0.3, -0.5), (0.4, mp.mpc(0.2, 0.5), mp.mpc(0, 0.3))),
            ("d2", (0.4, 0.25, 0.251), (0.4, 0.25, 0.251)),
            ("d3", (0.7, 0.3, 0.2), (0.7, 0.3, 0.2)),
            ("d3", (mp.mpc(0.5, 0.3), 0.4, mp.mpc(0, 0.2)), (0.6, mp.mpc(0, -0.3), 0.25)),
            ("d3", (0.7, 0.2, 0.3 * 0.7), (0.7, 0.2, 0.3 * 0.7)),
            ("d4", (0.3, 0.3, 0.2, 0.15), (0.3, 0.3, 0.2, 0.15)),
            ("d4", (mp.mpc(0, 0.3), 0.2, 0.4, mp.mpc(0.2, 0.1)), (0.4, mp.mpc(0, 0.3), -0.2, 0.25))]
    for dom, z, w in kpts:
        emit('    {"%s", %s, %s, %s},' % (dom, point(z), point(w), c(kernel(dom, z, w))))
        sys.stderr.write("kernel %s done\n" % dom)
    emit("};\n")

    emit("}  // namespace ref")
    print("\n".join(out))


if __name__ == "__main__":
    main()
