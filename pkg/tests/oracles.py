"""Independent reference implementations used by the tests.

Nothing here imports the package: polynomials are ``{exponent tuple: int}``
dicts and every routine is the most direct (slow) formulation available.
"""

from __future__ import annotations

import itertools
import math


# -- integers ---------------------------------------------------------------


def brute_xgcd(a: int, b: int):
    """All Bezout pairs (u, v) with |u| <= |b|, |v| <= |a| and u*a + v*b = gcd."""
    d = math.gcd(a, b)
    ra, rb = max(abs(b), 1), max(abs(a), 1)
    return d, [(u, v) for u in range(-ra, ra + 1) for v in range(-rb, rb + 1) if u * a + v * b == d]


def brute_min_rem(a: int, b: int):
    """All (q, r) with a = q*b + r and |r| <= |b|/2, found by enumeration."""
    out = []
    for q in range(-abs(a) - 2, abs(a) + 3):
        r = a - q * b
        if 2 * abs(r) <= abs(b):
            out.append((q, r))
    return out


# -- dict polynomials -------------------------------------------------------


def padd(*ps):
    acc = {}
    for p in ps:
        for m, c in p.items():
            acc[m] = acc.get(m, 0) + c
    return {m: c for m, c in acc.items() if c}


def pscale(p, c, shift=None):
    if shift is None:
        return {m: v * c for m, v in p.items() if v * c}
    return {tuple(a + b for a, b in zip(m, shift)): v * c for m, v in p.items() if v * c}


def pmul(p, q):
    acc = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            acc[m] = acc.get(m, 0) + c1 * c2
    return {m: c for m, c in acc.items() if c}


def order_key(order: str, m):
    """Larger key = larger monomial; independent of any encoding."""
    if order == "lex":
        return tuple(m)
    rev = tuple(-e for e in reversed(m))
    d = sum(m)
    return ((d,) if order == "degrevlex" else (-d,)) + rev


def plead(p, order):
    m = max(p, key=lambda t: order_key(order, t))
    return m, p[m]


def mlcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mquo(a, b):
    return tuple(x - y for x, y in zip(a, b))


# -- criterion 8: univariate monomial ideals over Z --------------------------


def monomial_ideal_leads(gens):
    """Minimal strong lead-term set of <a_1 x^m_1, ..., a_k x^m_k> in Z[x].

    The lead coefficients at degree k form the ideal generated by the a_i
    with m_i <= k; a new lead term is needed exactly where that gcd drops.
    """
    top = max(m for _, m in gens)
    out = []
    prev = 0
    for k in range(top + 1):
        c = 0
        for a, m in gens:
            if m <= k:
                c = math.gcd(c, a)
        if c and c != prev:
            out.append((c, k))
        prev = c
    return out


# -- benchmark systems --------------------------------------------------------


def cyclic_dicts(n):
    out = []
    for d in range(1, n):
        p = {}
        for i in range(n):
            e = [0] * n
            for k in range(d):
                e[(i + k) % n] += 1
            p[tuple(e)] = p.get(tuple(e), 0) + 1
        out.append(p)
    out.append({tuple([1] * n): 1, tuple([0] * n): -1})
    return out


def katsura_dicts(n):
    """u_0..u_{n-1}; sum_{l=-(n-1)}^{n-1} u_|l| u_|m-l| = u_m and the sum rule."""

    def u(i):
        e = [0] * n
        e[i] = 1
        return {tuple(e): 1}

    def U(i):
        i = abs(i)
        return u(i) if i < n else {}

    first = padd(u(0), *[pscale(u(i), 2) for i in range(1, n)], {tuple([0] * n): -1})
    out = [first]
    for m in range(n - 1):
        terms = [pmul(U(l), U(m - l)) for l in range(-(n - 1), n)]
        out.append(padd(*terms, pscale(u(m), -1)))
    return out


def all_monomials(n, deg):
    return [e for e in itertools.product(range(deg + 1), repeat=n) if sum(e) <= deg]
