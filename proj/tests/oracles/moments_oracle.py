#!/usr/bin/env python3
"""Exact rational oracle for E[tr rho^q] under mu_{n,k}.

Route 1: the alternating falling-factorial sum, in exact rationals.
Route 2: genus expansion of complex Wishart moments,
         E tr W^q = sum over permutations s of S_q of n^{cyc(s)} k^{cyc(g s^-1)}
         with g the long cycle, divided by nk(nk+1)...(nk+q-1).
The two must agree exactly; the printed doubles are frozen into the tests.
"""
from fractions import Fraction
from itertools import permutations
from math import factorial


def falling(a, q):
    r = 1
    for i in range(q):
        r *= a - i
    return r


def rising(a, q):
    r = 1
    for i in range(q):
        r *= a + i
    return r


def moment_sum(n, k, q):
    s = Fraction(0)
    for j in range(1, q + 1):
        s += (-1) ** (j - 1) * Fraction(falling(k + q - j, q) * falling(n + q - j, q),
                                        factorial(q - j) * factorial(j - 1))
    return s / q / rising(n * k, q)


def cycles(perm):
    seen, count = set(), 0
    for i in range(len(perm)):
        if i not in seen:
            count += 1
            j = i
            while j not in seen:
                seen.add(j)
                j = perm[j]
    return count


def moment_genus(n, k, q):
    gamma = [(i + 1) % q for i in range(q)]
    total = 0
    for s in permutations(range(q)):
        inv = [0] * q
        for i, v in enumerate(s):
            inv[v] = i
        gs = [gamma[inv[i]] for i in range(q)]
        total += n ** cycles(s) * k ** cycles(gs)
    return Fraction(total, rising(n * k, q))


if __name__ == "__main__":
    grid = [(2, 2), (2, 5), (3, 4), (5, 5), (10, 20)]
    for n, k in grid:
        for q in range(1, 8):
            assert moment_sum(n, k, q) == moment_genus(n, k, q), (n, k, q)
    for n, k in grid:
        row = ", ".join(repr(float(moment_sum(n, k, q))) for q in range(1, 11))
        print(f"{{{n}, {k}, {{{row}}}}},")
    print("E_{2,2} q=4:", moment_sum(2, 2, 4))
