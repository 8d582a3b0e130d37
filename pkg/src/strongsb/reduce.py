"""Top reductions, normal forms and the 2x2 spoly/gpoly replacement.

Three kinds of top-reduction step are distinguished:

``lt``
    the reducer's lead term strongly divides the lead term (monomial *and*
    coefficient), so the lead term disappears;
``replace``
    equal lead monomials, neither lead coefficient divides the other: the
    reducer is swapped for ``gpoly(h, g)`` and ``h`` continues as
    ``spoly(h, g)``;
``lc``
    the reducer only shrinks the lead coefficient (Euclidean division step).

The normal forms never mutate their inputs.  A replacement is applied to a
private copy of the reducer list and reported in the outcome so the caller
can update its basis and pair bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .pairs import gpoly, spoly
from .poly import MAX_DEGREE, Polynomial

LT = "lt"
REPLACE = "replace"
LC = "lc"

_CATEGORY = {LT: 0, REPLACE: 1, LC: 2}


@dataclass(frozen=True)
class ReductionPolicy:
    lc_reductions: bool = True
    replace_cap: int = 5


LT_ONLY = ReductionPolicy(lc_reductions=False, replace_cap=0)
NO_REPLACE = ReductionPolicy(lc_reductions=True, replace_cap=0)


@dataclass
class Step:
    h: Polynomial
    reducer: Optional[Polynomial]
    kind: Optional[str]
    inserted: bool = False


@dataclass
class ReductionOutcome:
    remainder: Polynomial
    replacements: list = field(default_factory=list)  # (index, old, new)
    steps: int = 0
    kinds: list = field(default_factory=list)
    trace: Optional[list] = None

    @property
    def inserted(self) -> int:
        return sum(1 for s in self.trace or () if s.inserted)


class ReducerSet:
    """Indexed reducers; ``None`` marks a dead slot."""

    def __init__(self, polys: Sequence[Optional[Polynomial]] = ()):
        self.polys: list[Optional[Polynomial]] = []
        self.masks: list[int] = []
        for p in polys:
            self.append(p)

    def append(self, p: Optional[Polynomial]) -> int:
        if p is not None and not p:
            raise ValueError("reducers must be nonzero")
        self.polys.append(p)
        self.masks.append(p.ring.divmask(p.lm) if p is not None else 0)
        return len(self.polys) - 1

    def replace(self, i: int, p: Polynomial):
        self.polys[i] = p
        self.masks[i] = p.ring.divmask(p.lm)

    def kill(self, i: int):
        self.polys[i] = None

    def copy(self) -> "ReducerSet":
        out = ReducerSet()
        out.polys = list(self.polys)
        out.masks = list(self.masks)
        return out

    def live(self) -> list[Polynomial]:
        return [p for p in self.polys if p is not None]

    def __len__(self):
        return len(self.polys)


def _as_reducers(G) -> ReducerSet:
    return G if isinstance(G, ReducerSet) else ReducerSet(list(G))


# ----------------------------------------------------------------------
# single steps


def _subtract(h: dict, q, t: int, g: Polynomial):
    """In place: ``h -= q * x^t * g``."""
    get = h.get
    for k, c in g.terms:
        k += t
        v = get(k, 0) - q * c
        if v:
            h[k] = v
        else:
            del h[k]


def _check_degree(ring, lm_h: int, g: Polynomial):
    if ring.mono_degree(lm_h) + g.ecart() > MAX_DEGREE:
        raise OverflowError(f"monomial degree exceeds {MAX_DEGREE}")


def top_lt_reduce(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    dom = ring.domain
    if not f or not g or not ring.mono_divides(g.lm, f.lm) or not dom.divides(g.lc, f.lc):
        raise ValueError("g does not strongly top-divide f")
    h = dict(f.terms)
    _check_degree(ring, f.lm, g)
    _subtract(h, dom.exact_quo(f.lc, g.lc), f.lm - g.lm, g)
    return ring.from_codes(h)


def top_lc_reduce(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    dom = ring.domain
    if (
        not f
        or not g
        or not ring.mono_divides(g.lm, f.lm)
        or dom.divides(g.lc, f.lc)
        or not dom.norm_less(g.lc, f.lc)
    ):
        raise ValueError("no lc-reduction of f by g")
    q, _ = dom.div_min_rem(f.lc, g.lc)
    h = dict(f.terms)
    _check_degree(ring, f.lm, g)
    _subtract(h, q, f.lm - g.lm, g)
    return ring.from_codes(h)


def replace_2x2(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Return ``(spoly(f, g), gpoly(f, g))`` for equal lead monomials.

    The pair generates the same ideal as ``(f, g)``.
    """
    if not f or not g or f.lm != g.lm:
        raise ValueError("replace_2x2 needs equal lead monomials")
    dom = f.ring.domain
    if dom.divides(f.lc, g.lc) or dom.divides(g.lc, f.lc):
        raise ValueError("replace_2x2 needs lead coefficients that do not divide each other")
    return spoly(f, g), gpoly(f, g)


def replacement_matrix(f: Polynomial, g: Polynomial):
    """Integer matrix taking ``(f, g)`` to ``(gpoly, spoly)``."""
    dom = f.ring.domain
    d, u, v = dom.xgcd(f.lc, g.lc)
    a = dom.lcm(f.lc, g.lc)
    return [[u, v], [dom.exact_quo(a, f.lc), -dom.exact_quo(a, g.lc)]]


# ----------------------------------------------------------------------
# reducer selection


def _classify(dom, lc_h, g: Polynomial, same_lm: bool, policy: ReductionPolicy, replaced: int):
    """Category of reducing a lead coefficient ``lc_h`` by ``g`` (monomials divide)."""
    lc_g = g.lc
    if dom.divides(lc_g, lc_h):
        return LT
    if same_lm and replaced < policy.replace_cap and not dom.divides(lc_h, lc_g):
        return REPLACE
    if policy.lc_reductions and dom.norm_less(lc_g, lc_h):
        return LC
    return None


def select_reducer(h: Polynomial, G, policy: ReductionPolicy = ReductionPolicy(), replaced: int = 0):
    """Pick ``(kind, index)`` for a global-order top reduction of ``h``.

    Categories are tried in the order lt, replace, lc.  Within a category
    the reducer with the smallest lead coefficient norm wins, then the
    lowest index.  Returns ``(None, None)`` when ``h`` is top-irreducible.
    """
    if not h:
        raise ValueError("cannot select a reducer for the zero polynomial")
    return _select_global(h.ring, h.lm, h.lc, _as_reducers(G), policy, replaced)


def _select_global(ring, m, c, R: ReducerSet, policy, replaced):
    dom = ring.domain
    guard = ring._guard
    hmask = ring.divmask(m) | guard
    best = None
    best_key = None
    polys = R.polys
    for idx, gm in enumerate(R.masks):
        g = polys[idx]
        if g is None or (hmask - gm) & guard != guard:
            continue
        kind = _classify(dom, c, g, g.terms[0][0] == m, policy, replaced)
        if kind is None:
            continue
        lc_g = g.terms[0][1]
        key = (_CATEGORY[kind], abs(lc_g), idx)
        if best_key is None or key < best_key:
            best, best_key = (kind, idx), key
            if kind is LT and abs(lc_g) == 1:
                break
    return best if best is not None else (None, None)


# ----------------------------------------------------------------------
# normal forms


def nf_global(f: Polynomial, G, policy: ReductionPolicy = ReductionPolicy(), trace: bool = False) -> ReductionOutcome:
    """Top-reduce ``f`` against ``G`` under a global order until irreducible."""
    ring = f.ring
    if not ring.order.is_global:
        raise ValueError("nf_global needs a global monomial order")
    R = _as_reducers(G)
    dom = ring.domain
    out = ReductionOutcome(ring.zero(), trace=[] if trace else None)
    if not f or not R.polys:
        out.remainder = f
        if trace:
            out.trace.append(Step(f, None, None))
        return out
    copied = False
    h = dict(f.terms)
    kinds = out.kinds
    while h:
        m = max(h)
        c = h[m]
        kind, idx = _select_global(ring, m, c, R, policy, len(out.replacements))
        if trace:
            out.trace.append(Step(ring.from_codes(h), R.polys[idx] if kind else None, kind))
        if kind is None:
            break
        g = R.polys[idx]
        kinds.append(kind)
        if kind is REPLACE:
            hp = ring.from_codes(h)
            s, p = spoly(hp, g), gpoly(hp, g)
            if not copied:
                R = R.copy()
                copied = True
            R.replace(idx, p)
            out.replacements.append((idx, g, p))
            h = dict(s.terms)
            continue
        lc_g = g.terms[0][1]
        if kind is LT:
            q = dom.exact_quo(c, lc_g)
        else:
            q = dom.div_min_rem(c, lc_g)[0]
        _check_degree(ring, m, g)
        _subtract(h, q, m - g.terms[0][0], g)
    out.steps = len(kinds)
    out.remainder = ring.from_codes(h)
    if trace and not h:
        out.trace.append(Step(out.remainder, None, None))
    return out


def _ecart_of(ring, h: dict, m: int) -> int:
    md = ring.mono_degree
    return max(md(k) for k in h) - md(m)


def nf_mora(f: Polynomial, G, policy: ReductionPolicy = ReductionPolicy(), trace: bool = False) -> ReductionOutcome:
    """Mora's normal form for a local order.

    The reducer is the candidate of minimal ecart, ties going to the lowest
    position (basis entries precede intermediate reducers).  When ``policy.lc_reductions`` is set, any reducer whose
    division leaves a remainder of smaller norm qualifies, whatever the size
    of its lead coefficient.  If the chosen reducer's ecart exceeds that of
    ``h``, ``h`` is kept as an extra reducer first; replacement steps do not
    keep ``h``.
    """
    ring = f.ring
    dom = ring.domain
    R = _as_reducers(G)
    out = ReductionOutcome(ring.zero(), trace=[] if trace else None)
    nbasis = len(R.polys)
    # T: basis slots first, then intermediate copies of h
    T: list[Optional[Polynomial]] = list(R.polys)
    copied = False
    h = dict(f.terms)
    kinds = out.kinds
    guard = ring._guard
    while h:
        m = max(h)
        c = h[m]
        hmask = ring.divmask(m) | guard
        eh = _ecart_of(ring, h, m)
        best = None
        best_key = None
        for pos, g in enumerate(T):
            if g is None or (hmask - ring.divmask(g.terms[0][0])) & guard != guard:
                continue
            lc_g = g.terms[0][1]
            if dom.divides(lc_g, c):
                kind = LT
            elif (
                pos < nbasis
                and g.terms[0][0] == m
                and len(out.replacements) < policy.replace_cap
                and not dom.divides(c, lc_g)
            ):
                kind = REPLACE
            elif policy.lc_reductions:
                q, r = dom.div_min_rem(c, lc_g)
                if not q or not dom.norm_less(r, c):
                    continue
                kind = LC
            else:
                continue
            key = (g.ecart(), pos)
            if best_key is None or key < best_key:
                best, best_key = (kind, pos), key
        if best is None:
            if trace:
                out.trace.append(Step(ring.from_codes(h), None, None))
            break
        kind, pos = best
        g = T[pos]
        kinds.append(kind)
        hp = ring.from_codes(h)
        if kind is REPLACE:
            s, p = spoly(hp, g), gpoly(hp, g)
            if not copied:
                R = R.copy()
                copied = True
            R.replace(pos, p)
            T[pos] = p
            out.replacements.append((pos, g, p))
            if trace:
                out.trace.append(Step(hp, g, kind))
            h = dict(s.terms)
            continue
        inserted = g.ecart() > eh
        if inserted:
            T.append(hp)
        if trace:
            out.trace.append(Step(hp, g, kind, inserted))
        lc_g = g.terms[0][1]
        q = dom.exact_quo(c, lc_g) if kind is LT else dom.div_min_rem(c, lc_g)[0]
        _check_degree(ring, m, g)
        _subtract(h, q, m - g.terms[0][0], g)
    out.steps = len(kinds)
    out.remainder = ring.from_codes(h)
    if trace and not h:
        out.trace.append(Step(out.remainder, None, None))
    return out


def normal_form(f: Polynomial, G, policy: ReductionPolicy = ReductionPolicy(), trace: bool = False) -> ReductionOutcome:
    """Dispatch to the global or the local normal form by the ring's order."""
    if f.ring.order.is_global:
        return nf_global(f, G, policy, trace)
    return nf_mora(f, G, policy, trace)


def _trunc_quo(c, b) -> int:
    q = abs(c) // abs(b)
    return q if (c < 0) == (b < 0) else -q


def tail_reduce(f: Polynomial, G) -> Polynomial:
    """Shrink every coefficient of ``f`` using the lead terms of ``G``.

    A term ``c*x^m`` is reduced by ``g`` when ``lm g | m`` and
    ``|lc g| <= |c|``; the quotient is truncated toward zero, so the new
    coefficient keeps its sign and has ``|r| < |lc g|``.  Terms already
    smaller than every applicable lead coefficient are left alone.  Global
    orders only.
    """
    ring = f.ring
    if not ring.order.is_global:
        raise ValueError("tail reduction needs a global monomial order")
    R = _as_reducers(G)
    if not f or not R.polys:
        return f
    dom = ring.domain
    exact = dom.is_field
    guard = ring._guard
    h = dict(f.terms)
    done: dict[int, object] = {}
    while h:
        m = max(h)
        c = h[m]
        hmask = ring.divmask(m) | guard
        best = None
        for idx, gm in enumerate(R.masks):
            g = R.polys[idx]
            if g is None or (hmask - gm) & guard != guard:
                continue
            b = abs(g.terms[0][1])
            if (exact or b <= abs(c)) and (best is None or b < best[0]):
                best = (b, g)
                if b == 1:
                    break
        if best is None:
            done[m] = c
            del h[m]
            continue
        g = best[1]
        lc_g = g.terms[0][1]
        q = c / lc_g if exact else _trunc_quo(c, lc_g)
        _check_degree(ring, m, g)
        _subtract(h, q, m - g.terms[0][0], g)
        if m in h:
            done[m] = h.pop(m)
    return ring.from_codes(done)
