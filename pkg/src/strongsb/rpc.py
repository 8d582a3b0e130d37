"""Rational pre-check: find an integer constant in the ideal via a run over QQ.

Buchberger's algorithm over the rationals is run on values that carry their
representation in terms of the generators.  If ``1`` shows up, clearing the
denominators of its cofactors gives an integer constant ``lam`` together with
integer polynomials ``c_i`` such that ``lam = sum c_i * f_i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .coeff import QQ, ZZ
from .pairs import S_PAIR, Pair, PairQueue
from .poly import MonomialOrder, PolyRing, Polynomial


@dataclass(frozen=True)
class CofactorPoly:
    """``value == cofactors[0]*1 + sum(cofactors[i]*f_i)``."""

    value: Polynomial
    cofactors: tuple

    def images(self, generators: Sequence[Polynomial]) -> Polynomial:
        ring = self.value.ring
        acc = self.cofactors[0]
        for c, f in zip(self.cofactors[1:], generators):
            acc = acc + c * f
        return acc if acc.ring == ring else ring.from_codes(dict(acc.terms))

    def is_consistent(self, generators: Sequence[Polynomial]) -> bool:
        return self.images(generators) == self.value

    def scale(self, a) -> "CofactorPoly":
        return CofactorPoly(self.value.scale(a), tuple(c.scale(a) for c in self.cofactors))

    def monic(self) -> "CofactorPoly":
        return self.scale(1 / self.value.lc)


def _sub_into(acc: dict, q, t: int, terms):
    for m, c in terms:
        k = m + t
        v = acc.get(k, 0) - q * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


def _combine(ring, a, ta, f: CofactorPoly, b, tb, g: CofactorPoly) -> CofactorPoly:
    def lin(x: Polynomial, y: Polynomial) -> Polynomial:
        acc = {m + ta: c * a for m, c in x.terms}
        _sub_into(acc, -b, tb, y.terms)
        return ring.from_codes(acc)

    return CofactorPoly(
        lin(f.value, g.value), tuple(lin(x, y) for x, y in zip(f.cofactors, g.cofactors))
    )


def _reduce(h: CofactorPoly, G: list[CofactorPoly]) -> CofactorPoly:
    """Top-reduce over QQ, updating cofactors alongside."""
    ring = h.value.ring
    val = dict(h.value.terms)
    cofs = [dict(c.terms) for c in h.cofactors]
    while val:
        m = max(val)
        for g in G:
            gm = g.value.lm
            if ring.mono_divides(gm, m):
                q = val[m] / g.value.lc
                t = m - gm
                _sub_into(val, q, t, g.value.terms)
                for acc, gc in zip(cofs, g.cofactors):
                    _sub_into(acc, q, t, gc.terms)
                break
        else:
            break
    return CofactorPoly(ring.from_codes(val), tuple(ring.from_codes(c) for c in cofs))


@dataclass
class RationalBasis:
    ring: PolyRing
    elements: list  # CofactorPoly, value monic
    generators: list  # the integer generators, as rational polynomials

    @property
    def polys(self) -> list[Polynomial]:
        return [e.value for e in self.elements]

    def unit(self) -> Optional[CofactorPoly]:
        for e in self.elements:
            if e.value.lm == self.ring.one_code:
                return e
        return None


def rational_gb_with_cofactors(generators: Sequence[Polynomial], order=None) -> RationalBasis:
    """Groebner basis over QQ (monic elements) with cofactor vectors.

    Stops early once a constant appears, since then the basis is ``{1}``.
    """
    gens = [f for f in generators if f]
    if not gens:
        raise ValueError("rational pre-check needs at least one nonzero generator")
    base = gens[0].ring
    order = base.order if order is None else order
    order = order if isinstance(order, MonomialOrder) else MonomialOrder.parse(order)
    if not order.is_global:
        raise ValueError("the rational pre-check needs a global monomial order")
    R = PolyRing(base.variables, order, QQ)
    qgens = [R.from_dict(f.as_dict()) for f in gens]
    m = len(qgens)
    zero = R.zero()

    G: list[CofactorPoly] = []
    queue = PairQueue()

    def add(e: CofactorPoly) -> bool:
        e = e.monic()
        G.append(e)
        n = len(G) - 1
        if e.value.lm == R.one_code:
            return True
        for k in range(n):
            a, b = G[k].value.lm, e.value.lm
            if R.mono_coprime(a, b):
                continue
            t = R.mono_lcm(a, b)
            queue.push(Pair(k, n, S_PAIR, t, R.mono_degree(t)))
        return False

    for i, f in enumerate(qgens):
        cof = [zero] * (m + 1)
        cof[i + 1] = R.one()
        h = _reduce(CofactorPoly(f, tuple(cof)), G)
        if h.value and add(h):
            return RationalBasis(R, G, qgens)
    while queue:
        p = queue.pop()
        f, g = G[p.i], G[p.j]
        # both monic, so the S-polynomial is t_f*f - t_g*g
        s = _combine(R, Fraction(1), p.lcm - f.value.lm, f, Fraction(-1), p.lcm - g.value.lm, g)
        h = _reduce(s, G)
        if h.value and add(h):
            break
    return RationalBasis(R, G, qgens)


@dataclass
class ConstantCertificate:
    """``constant == sum(cofactors[i] * generators[i])`` over the integers."""

    constant: int
    cofactors: list  # integer polynomials, one per generator
    generators: list

    def expand(self) -> Polynomial:
        ring = self.generators[0].ring
        acc = ring.zero()
        for c, f in zip(self.cofactors, self.generators):
            acc = acc + c * f
        return acc

    def identity(self) -> str:
        parts = [f"({c})*({f})" for c, f in zip(self.cofactors, self.generators) if c]
        return f"{self.constant} = " + " + ".join(parts)


def extract_constant(result: RationalBasis, int_generators: Optional[Sequence[Polynomial]] = None
                     ) -> Optional[ConstantCertificate]:
    """Scale the representation of 1 to an integer one, if 1 was found."""
    e = result.unit()
    if e is None:
        return None
    lam = 1
    for c in e.cofactors:
        for _, a in c.terms:
            lam = lam * a.denominator // math.gcd(lam, a.denominator)
    if e.cofactors[0]:
        raise ArithmeticError("the constant slot of a generator combination must stay zero")
    if int_generators is None:
        int_generators = [f.change_domain(ZZ) for f in result.generators]
    gens = [f for f in int_generators if f]
    ring = gens[0].ring
    ints = []
    for c in e.cofactors[1:]:
        scaled = c.scale(lam)
        if any(a.denominator != 1 for _, a in scaled.terms):
            raise ArithmeticError("cofactor scaling left a fraction")
        ints.append(ring.from_codes({m: int(a) for m, a in scaled.terms}))
    ints = [ring.from_dict(c.as_dict()) if c.ring != ring else c for c in ints]
    cert = ConstantCertificate(lam, ints, list(gens))
    if cert.expand() != ring.constant(lam):
        raise ArithmeticError("cofactor identity does not evaluate to the constant")
    return cert


def rational_precheck(generators: Sequence[Polynomial],
                      order=None) -> tuple[list[Polynomial], Optional[ConstantCertificate]]:
    """Return the (possibly augmented) generator list and the certificate."""
    gens = list(generators)
    if not any(gens):
        return gens, None
    cert = extract_constant(rational_gb_with_cofactors(gens, order), [f for f in gens if f])
    if cert is None:
        return gens, None
    c = cert.generators[0].ring.constant(cert.constant)
    return [c] + [f for f in gens if f.canonical_sign() != c], cert


def rpc_augment(generators: Sequence[Polynomial], order=None) -> list[Polynomial]:
    return rational_precheck(generators, order)[0]


__all__ = [
    "CofactorPoly",
    "ConstantCertificate",
    "RationalBasis",
    "extract_constant",
    "rational_gb_with_cofactors",
    "rational_precheck",
    "rpc_augment",
]
