"""Independent high-precision reference values for the regression tests.

Uses exact rationals (30 terms) and mpmath (60 digits, nsum) only; nothing
from the package is imported, so these numbers can be frozen into tests.

    python scripts/oracle_values.py
"""
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 60


def rf(a, k):
    return mp.rf(a, k)


def c(p, q, k):
    return 1 / (rf(p, k) * rf(q, k))


def boundary_sums(p, q):
    s0 = mp.nsum(lambda k: c(p, q, k), [0, mp.inf])
    s1 = mp.nsum(lambda k: (k + 1) * c(p, q, k), [0, mp.inf])
    s2 = mp.nsum(lambda k: k * (k + 1) * c(p, q, k), [0, mp.inf])
    return s0, s1, s2


def lemma1(alpha, beta, p, q):
    # sum over k >= 2 of [k-1+beta(k+1-2alpha)] a_k with a_k = c_{k-1}
    return mp.nsum(lambda k: (k - 1 + beta * (k + 1 - 2 * alpha)) * c(p, q, k - 1), [2, mp.inf])


def lemma2(alpha, beta, p, q):
    return mp.nsum(lambda k: k * (k - 1 + beta * (k + 1 - 2 * alpha)) * c(p, q, k - 1), [2, mp.inf])


def rational_partial(weight, p, q, start, n_terms=30):
    p, q = Fraction(p), Fraction(q)
    total = Fraction(0)
    for k in range(start, start + n_terms):
        j = k - 1
        poch = Fraction(1)
        for i in range(j):
            poch *= (p + i) * (q + i)
        total += weight(k) / poch
    return total


if __name__ == "__main__":
    print("boundary_sums(2,3):", *[mp.nstr(v, 20) for v in boundary_sums(2, 3)])
    print("boundary_sums(1,1):", *[mp.nstr(v, 20) for v in boundary_sums(1, 1)])
    print("boundary_sums(1,2):", *[mp.nstr(v, 20) for v in boundary_sums(1, 2)])
    print("besseli(0,2), besseli(1,2):", mp.nstr(mp.besseli(0, 2), 20), mp.nstr(mp.besseli(1, 2), 20))
    print("lemma1(0,1,(1,2)):", mp.nstr(lemma1(0, 1, 1, 2), 20))
    print("  rational 30 terms:", float(rational_partial(lambda k: 2 * k, 1, 2, 2)))
    print("lemma1(0.5,1,(1,2)):", mp.nstr(lemma1(0.5, 1, 1, 2), 20))
    print("lemma2(0,1,(1,2)):", mp.nstr(lemma2(0, 1, 1, 2), 20))
    print("  rational 30 terms:", float(rational_partial(lambda k: 2 * k * k, 1, 2, 2)))
    print("lemma1(0,1,(1.5,3.5)) struve nu=2:", mp.nstr(lemma1(0, 1, 1.5, 3.5), 20))
    print("lemma1(0,1,(1,101)) bessel nu=100:", mp.nstr(lemma1(0, 1, 1, 101), 20))
    print("lemma1/2 (0,1,(1.5,1.5)) lommel(0,0):", mp.nstr(lemma1(0, 1, 1.5, 1.5), 20), mp.nstr(lemma2(0, 1, 1.5, 1.5), 20))
    s0, s1, s2 = boundary_sums(2.5, 2.5)
    print("lommel(0,0) shifted S0,S1,S2:", mp.nstr(s0, 20), mp.nstr(s1, 20), mp.nstr(s2, 20))
    print("  printed lommel starlike bound lhs, rhs:", mp.nstr(2 * s1 + 2 * s0, 20), mp.nstr(mp.mpf(8) / 9, 20))
    for nu in range(6):
        print(f"bessel nu={nu} lemma1-2:", mp.nstr(lemma1(0, 1, 1, nu + 1) - 2, 12))
    g = lambda nu: lemma1(0, 1, 1, nu + 1) - 2
    print("nu_star bessel T* a=0 b=1:", mp.nstr(mp.findroot(g, (1, 3), solver="anderson"), 25))
