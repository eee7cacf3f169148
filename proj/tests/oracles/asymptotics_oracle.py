#!/usr/bin/env python3
"""Independent values for the asymptotics and exact-module tests.

Marchenko-Pastur quantities are integrated directly in x with scipy (no
angle substitution); the n = 2 eigenvalue density masses are integrated
symbolically with sympy.
"""
import math

import sympy as sp
from scipy import integrate


def mp(c):
    a, b = (math.sqrt(c) - 1) ** 2, (math.sqrt(c) + 1) ** 2
    pdf = lambda x: math.sqrt(max((x - a) * (b - x), 0.0)) / (2 * math.pi * x)
    return a, b, max(1 - c, 0.0), pdf


for c, x in [(1.0, 1.0), (0.5, 2.0), (2.0, 3.0), (10.0, 12.0), (0.2, 0.5)]:
    a, b, atom, pdf = mp(c)
    val, _ = integrate.quad(pdf, a, min(x, b), epsabs=1e-13, epsrel=1e-13, limit=200)
    print(f"mp_cdf c={c} x={x}: {atom + val!r}")
for c in [1.0, 2.0, 0.5]:
    a, b, atom, pdf = mp(c)
    for q in range(1, 5):
        val, _ = integrate.quad(lambda x: x**q * pdf(x), a, b, epsabs=1e-13, epsrel=1e-13, limit=200)
        print(f"mp_moment c={c} q={q}: {val!r}")

x = sp.symbols("x")
for k in [2, 3, 5, 10, 50]:
    n = 2
    C = sp.gamma(n * k) / sp.prod([sp.gamma(n + 1 - j) * sp.gamma(k - j) for j in range(n)])
    phi = C * (x * (1 - x)) ** (k - n) * (2 * x - 1) ** 2
    total = sp.integrate(phi, (x, 0, 1))
    part = sp.integrate(phi, (x, sp.Rational(1, 2), sp.Rational(3, 5)))
    print(f"n2 k={k}: C={C} total={total} mass[0.5,0.6]={float(part)!r}")

print("edge_density n=100 c=1 l=0.0404:", 100 ** (2 / 3) * (4.04 - 4) / (2 * 2 ** (1 / 3)))
print("edge_wishart n=1000 c=1 l=4100:", (4100 - 4000) / (10 * 2 * 2 ** (1 / 3)))
print("entropy (1/4,3/4):", -(0.25 * math.log(0.25) + 0.75 * math.log(0.75)))
print("page (2,1000):", sum(1 / i for i in range(1001, 2001)) - 1 / 2000, math.log(2))
print("page (2,10^4):", sum(1 / i for i in range(10001, 20001)) - 1 / 20000)
print("page (3,5):", float(sum(sp.Rational(1, i) for i in range(6, 16)) - sp.Rational(2, 10)))
