#!/usr/bin/env python3
"""Brute-force second-cohomology counts over the two-element base with
two-element coefficients and trivial module data.

Written independently of the C++ library: every equation is spelled out
directly on integers mod 2. Prints one line per theory:
    <theory> Z=<|Z2|> B=<|B2|> H=<|H2|>
"""
import itertools
import sys

M = (0, 1)          # trivial brace on Z/2: a.b = a o b = a+b mod 2
P = 2               # coefficient group Z/2


def add(a, b):
    return (a + b) % 2


def normalized_pairs(values):
    """Cochain on M x M with value 0 whenever an argument is 0."""
    def fn(x, y):
        return 0 if x == 0 or y == 0 else values
    return fn


def count(cochains, is_cocycle, coboundaries):
    z = [c for c in cochains if is_cocycle(c)]
    b = set(coboundaries)
    assert b <= set(z), "coboundary outside the cocycle set"
    assert len(z) % len(b) == 0
    return len(z), len(b), len(z) // len(b)


def sb_counts():
    # g, f : M x M -> I normalized, determined by g(1,1), f(1,1)
    def cocycle(c):
        gv, fv = c
        g, f = normalized_pairs(gv), normalized_pairs(fv)
        inv = lambda m: m
        for m1, m2, m3 in itertools.product(M, repeat=3):
            e1 = g(m2, m3) - g(add(m1, m2), m3) + g(m1, add(m2, m3)) - g(m1, m2)
            e2 = f(m2, m3) - f(add(m1, m2), m3) + f(m1, add(m2, m3)) - f(m1, m2)
            c12 = add(m1, m2)
            e3 = (g(m2, m3) + g(m1, inv(m1)) - g(c12, inv(m1))
                  - g(add(c12, inv(m1)), add(m1, m3)) - f(m1, m2)
                  + f(m1, add(m2, m3)) - f(m1, m3))
            if e1 % P or e2 % P or e3 % P:
                return False
        return True

    cochains = list(itertools.product(range(P), repeat=2))
    cobs = []
    for t1 in range(P):
        theta = {0: 0, 1: t1}
        g11 = (-theta[add(1, 1)] + theta[1] + theta[1]) % P
        f11 = (-theta[add(1, 1)] + theta[1] + theta[1]) % P
        cobs.append((g11, f11))
    return count(cochains, cocycle, cobs)


def rb_counts():
    # base: Z/2 with R_H = 0; coefficients Z/2 with R_I = 0; trivial gamma.
    rh = lambda h: 0
    ri = lambda y: 0

    def circ(h1, h2):
        r = rh(h1)
        return (h1 + r + h2 - r) % 2

    def cocycle(c):
        tv, rv = c
        tau = normalized_pairs(tv)
        r = lambda h: 0 if h == 0 else rv
        for h1, h2, h3 in itertools.product(M, repeat=3):
            d2 = tau(h2, h3) - tau(add(h1, h2), h3) + tau(h1, add(h2, h3)) - tau(h1, h2)
            if d2 % P:
                return False
        for h1, h2 in itertools.product(M, repeat=2):
            r1, r2 = rh(h1), rh(h2)
            d1 = r(h2) - r(circ(h1, h2)) + r(h1)
            inner = (tau(add(h1, r1), (h2 - r1) % 2) + tau(h1, r1)
                     + tau(h2, (-r1) % 2) - tau(r1, (-r1) % 2))
            phi2 = tau(r1, r2) - ri(inner)
            beta = d1 - ri(r(h1) - r(h1)) + phi2
            if beta % P:
                return False
        return True

    cochains = list(itertools.product(range(P), repeat=2))
    cobs = []
    for t1 in range(P):
        th = {0: 0, 1: t1}
        d = (th[1] - th[add(1, 1)] + th[1]) % P
        phi1 = (ri(th[1]) - th[rh(1)]) % P
        cobs.append((d, phi1))
    return count(cochains, cocycle, cobs)


def rrb_counts():
    # A = B = Z/2, beta trivial, T = id; K = L = Z/2, trivial nu, mu, sigma,
    # f = 0, S = id.
    T = lambda a: a
    S = lambda k: k

    def cocycle(c):
        a11, b11, r11, x1 = c
        t1 = normalized_pairs(a11)
        t2 = normalized_pairs(b11)
        rho = normalized_pairs(r11)
        chi = lambda a: 0 if a == 0 else x1
        for x, y, z in itertools.product(M, repeat=3):
            if (t1(y, z) + t1(x, add(y, z)) - t1(add(x, y), z) - t1(x, y)) % P:
                return False
            if (t2(y, z) + t2(x, add(y, z)) - t2(add(x, y), z) - t2(x, y)) % P:
                return False
        for a1, b1, b2 in itertools.product(M, repeat=3):
            if (rho(a1, b1) + rho(a1, b2) - rho(a1, add(b1, b2))) % P:
                return False
        for a1, a2, b1 in itertools.product(M, repeat=3):
            lhs = rho(add(a1, a2), b1) + t1(a1, a2)
            rhs = rho(a1, b1) + rho(a2, b1) + t1(a1, a2)
            if (lhs - rhs) % P:
                return False
        for a1, a2 in itertools.product(M, repeat=2):
            circ = add(a1, a2)
            d1 = chi(a2) - chi(circ) + chi(a1)
            lhs = t2(T(a1), T(a2)) + d1
            rhs = S(rho(a2, T(a1)) + t1(a1, a2))
            if (lhs - rhs) % P:
                return False
        return True

    cochains = list(itertools.product(range(P), repeat=4))
    cobs = set()
    for u, v in itertools.product(range(P), repeat=2):
        k1 = {0: 0, 1: u}
        k2 = {0: 0, 1: v}
        t1 = (-k1[0] + k1[1] + k1[1]) % P
        t2 = (-k2[0] + k2[1] + k2[1]) % P
        rho = (k1[1] - k1[1]) % P
        chi = (S(k1[1]) - k2[T(1)]) % P
        cobs.add((t1, t2, rho, chi))
    return count(cochains, cocycle, list(cobs))


def main():
    for name, fn in (("sb", sb_counts), ("rb", rb_counts), ("rrb", rrb_counts)):
        z, b, h = fn()
        print(f"{name} Z={z} B={b} H={h}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
