"""S-polynomials, GCD-polynomials, elimination criteria and the pair queue."""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field

from .poly import Polynomial


class Strategy(enum.Enum):
    """How pairs are generated for each new basis element.

    ``ALL`` schedules an S-pair and a G-pair for every partner (the G-pair is
    dropped when one lead coefficient divides the other).  ``FILTERED``
    schedules exactly one: the S-pair when one lead coefficient divides the
    other, the G-pair otherwise.
    """

    ALL = "all"
    FILTERED = "filtered"


S_PAIR = "S"
G_PAIR = "G"
GENERATOR = "GEN"

_KIND_RANK = {GENERATOR: 0, S_PAIR: 1, G_PAIR: 2}


def _combine(a1, t1: int, f: Polynomial, a2, t2: int, g: Polynomial) -> Polynomial:
    """Return ``a1*x^t1*f + a2*x^t2*g``."""
    acc: dict[int, object] = {}
    if a1:
        for m, c in f.terms:
            acc[m + t1] = c * a1
    if a2:
        for m, c in g.terms:
            k = m + t2
            v = acc.get(k, 0) + c * a2
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
    return f.ring.from_codes(acc)


def _shifts(f: Polynomial, g: Polynomial) -> tuple[int, int, int]:
    ring = f.ring
    t = ring.mono_lcm(f.lm, g.lm)
    return t, t - f.lm, t - g.lm


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial: cancel the lead terms at the lcm of lead terms."""
    if not f or not g:
        raise ValueError("spoly of the zero polynomial")
    dom = f.ring.domain
    _, tf, tg = _shifts(f, g)
    a = dom.lcm(f.lc, g.lc)
    return _combine(dom.exact_quo(a, f.lc), tf, f, -dom.exact_quo(a, g.lc), tg, g)


def gpoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """GCD-polynomial: lead term ``gcd(lc f, lc g) * lcm(lm f, lm g)``."""
    if not f or not g:
        raise ValueError("gpoly of the zero polynomial")
    _, tf, tg = _shifts(f, g)
    _, u, v = f.ring.domain.xgcd(f.lc, g.lc)
    return _combine(u, tf, f, v, tg, g)


def gpoly_easy_skip(f: Polynomial, g: Polynomial) -> bool:
    """The G-pair is useless when one lead coefficient divides the other."""
    dom = f.ring.domain
    return dom.divides(f.lc, g.lc) or dom.divides(g.lc, f.lc)


def product_criterion(f: Polynomial, g: Polynomial) -> bool:
    """Coprime lead monomials and coprime lead coefficients (S-pairs only)."""
    ring = f.ring
    return ring.mono_coprime(f.lm, g.lm) and ring.domain.is_unit(ring.domain.gcd(f.lc, g.lc))


def chain_criterion_s(f: Polynomial, g: Polynomial, h: Polynomial) -> bool:
    """``f`` mediates the S-pair ``(g, h)``.

    Only the divisibility conditions are checked here; the caller must make
    sure the S-pairs ``(f, g)`` and ``(f, h)`` are already accounted for.
    """
    ring = f.ring
    dom = ring.domain
    t = ring.mono_lcm(g.lm, h.lm)
    return ring.mono_divides(f.lm, t) and dom.divides(f.lc, dom.lcm(g.lc, h.lc))


def chain_criterion_g(f: Polynomial, g: Polynomial, h: Polynomial) -> bool:
    """The lead term of ``f`` strongly divides the lead term of ``gpoly(g, h)``."""
    ring = f.ring
    dom = ring.domain
    t = ring.mono_lcm(g.lm, h.lm)
    return ring.mono_divides(f.lm, t) and dom.divides(f.lc, dom.gcd(g.lc, h.lc))


@dataclass
class Pair:
    i: int
    j: int
    kind: str
    lcm: int
    degree: int
    versions: tuple = ()
    alive: bool = True

    def sort_key(self):
        return (self.degree, self.lcm, _KIND_RANK[self.kind], self.i, self.j)


def make_pair(polys, i: int, j: int, kind: str, versions=None) -> Pair:
    if i > j:
        i, j = j, i
    f, g = polys[i], polys[j]
    ring = f.ring
    t = ring.mono_lcm(f.lm, g.lm)
    vers = (versions[i], versions[j]) if versions is not None else ()
    return Pair(i, j, kind, t, ring.mono_degree(t), vers)


def make_pairs(polys, new_index: int, strategy: Strategy, stats=None, versions=None,
               partners=None, criteria: bool = True) -> list[Pair]:
    """Pairs between ``polys[new_index]`` and each partner.

    ``partners`` defaults to every other live (non-``None``) entry.  The
    product criterion and the easy-gpoly rule are applied here and counted on
    ``stats`` when given.
    """
    h = polys[new_index]
    dom = h.ring.domain
    if partners is None:
        partners = [k for k, p in enumerate(polys) if p is not None and k != new_index]
    out = []
    for k in partners:
        g = polys[k]
        divisible = dom.divides(g.lc, h.lc) or dom.divides(h.lc, g.lc)
        want_s = strategy is Strategy.ALL or divisible
        want_g = not divisible
        if want_s:
            if criteria and product_criterion(g, h):
                if stats is not None:
                    stats.product_hits += 1
            else:
                out.append(make_pair(polys, k, new_index, S_PAIR, versions))
                if stats is not None:
                    stats.s_pairs += 1
        if strategy is Strategy.ALL and divisible and stats is not None:
            stats.gpoly_easy_hits += 1
        if want_g:
            out.append(make_pair(polys, k, new_index, G_PAIR, versions))
            if stats is not None:
                stats.g_pairs += 1
    return out


@dataclass
class PairQueue:
    """Min-heap of pairs keyed by (lcm degree, lcm, kind, i, j)."""

    _heap: list = field(default_factory=list)
    _count: int = 0

    def push(self, pair: Pair):
        heapq.heappush(self._heap, (pair.sort_key(), self._count, pair))
        self._count += 1

    def extend(self, pairs):
        for p in pairs:
            self.push(p)

    def pop(self) -> Pair:
        if not self._heap:
            raise IndexError("pop from an empty pair queue")
        pair = heapq.heappop(self._heap)[2]
        pair.alive = False
        return pair

    def __len__(self):
        return len(self._heap)

    def __bool__(self):
        return bool(self._heap)


def queue_pop(q: PairQueue) -> Pair:
    return q.pop()
