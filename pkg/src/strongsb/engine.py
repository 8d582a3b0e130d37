"""The strong Buchberger loop, interreduction and strong-basis verification."""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Optional, Sequence

from .pairs import (
    G_PAIR,
    GENERATOR,
    S_PAIR,
    Pair,
    PairQueue,
    Strategy,
    gpoly,
    make_pairs,
    spoly,
)
from .poly import MonomialOrder, PolyRing, Polynomial
from .reduce import NO_REPLACE, ReducerSet, ReductionOutcome, ReductionPolicy, normal_form, tail_reduce


@dataclass
class EngineConfig:
    strategy: Strategy = Strategy.ALL
    lc_reductions: bool = True
    replace_cap: int = 5
    tail_reduce: bool = True
    rpc: bool = False
    criteria: bool = True

    def __post_init__(self):
        if not isinstance(self.strategy, Strategy):
            self.strategy = Strategy(self.strategy)
        if self.replace_cap < 0:
            raise ValueError("replace_cap must be nonnegative")

    @property
    def policy(self) -> ReductionPolicy:
        return ReductionPolicy(self.lc_reductions, self.replace_cap)


@dataclass
class Stats:
    s_pairs: int = 0
    g_pairs: int = 0
    zero_reductions: int = 0
    product_hits: int = 0
    chain_s_hits: int = 0
    chain_g_hits: int = 0
    gpoly_easy_hits: int = 0
    replacements: int = 0
    pairs_regenerated: int = 0
    max_coeff_bits: int = 0
    basis_size: int = 0

    def as_lines(self) -> list[str]:
        return [f"{f.name}={getattr(self, f.name)}" for f in fields(self)]


class Basis:
    """Indexed basis slots; a dead slot holds ``None``."""

    def __init__(self, ring: Optional[PolyRing], polys: Sequence[Optional[Polynomial]] = ()):
        self.ring = ring
        self.reducers = ReducerSet(polys)
        self.versions = [0] * len(self.reducers)

    @property
    def order(self) -> Optional[MonomialOrder]:
        return self.ring.order if self.ring is not None else None

    @property
    def polys(self) -> list[Optional[Polynomial]]:
        return self.reducers.polys

    @property
    def elements(self) -> list[tuple[Optional[Polynomial], bool]]:
        return [(p, p is not None) for p in self.polys]

    def live(self) -> list[Polynomial]:
        return self.reducers.live()

    def live_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.polys) if p is not None]

    def append(self, p: Polynomial) -> int:
        self.versions.append(0)
        return self.reducers.append(p)

    def replace(self, i: int, p: Polynomial):
        self.reducers.replace(i, p)
        self.versions[i] += 1

    def __len__(self):
        return len(self.live_indices())

    def __iter__(self):
        return iter(self.live())

    def __repr__(self):
        return f"Basis([{', '.join(str(p) for p in self.live())}])"


# ----------------------------------------------------------------------
# the loop


@dataclass
class _State:
    basis: Basis
    queue: PairQueue
    config: EngineConfig
    stats: Stats
    s_done: set = field(default_factory=set)


def _key(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def _schedule(st: _State, idx: int, partners=None):
    B = st.basis
    pairs = make_pairs(
        B.polys, idx, st.config.strategy, st.stats, B.versions, partners, st.config.criteria
    )
    if st.config.criteria:
        # pairs killed by the product criterion count as treated
        made = {(p.i, p.j) for p in pairs if p.kind == S_PAIR}
        divides = B.ring.domain.divides
        h = B.polys[idx]
        for k in partners if partners is not None else B.live_indices():
            if k == idx or _key(k, idx) in made:
                continue
            g = B.polys[k]
            if st.config.strategy is Strategy.ALL or divides(g.lc, h.lc) or divides(h.lc, g.lc):
                st.s_done.add(_key(k, idx))
    st.queue.extend(pairs)
    return pairs


def apply_replacement(B: Basis, outcome: ReductionOutcome, queue: PairQueue,
                      config: Optional[EngineConfig] = None, stats: Optional[Stats] = None,
                      s_done: Optional[set] = None):
    """Install the gpoly replacements recorded in ``outcome``.

    The replaced slot gets new pairs against every other live element;
    queued pairs for the old contents go stale through the slot version.
    """
    st = _State(B, queue, config or EngineConfig(), stats if stats is not None else Stats(),
                s_done if s_done is not None else set())
    for idx, _old, new in outcome.replacements:
        B.replace(idx, new.canonical_sign())
        st.stats.replacements += 1
        st.s_done = {k for k in st.s_done if idx not in k}
        regenerated = _schedule(st, idx)
        st.stats.pairs_regenerated += len(regenerated)
        st.stats.max_coeff_bits = max(st.stats.max_coeff_bits, B.polys[idx].max_coeff_bits())
    if s_done is not None:
        s_done.clear()
        s_done.update(st.s_done)
    return st.s_done


def _chain_skip(st: _State, pair: Pair) -> bool:
    B = st.basis
    ring = B.ring
    dom = ring.domain
    polys = B.polys
    i, j = pair.i, pair.j
    f, g = polys[i], polys[j]
    if pair.kind == S_PAIR:
        bound = dom.lcm(f.lc, g.lc)
        need_done = True
    else:
        bound = dom.gcd(f.lc, g.lc)
        need_done = st.config.strategy is Strategy.FILTERED
    t = pair.lcm
    divides = ring.mono_divides
    for k, h in enumerate(polys):
        if h is None or k == i or k == j:
            continue
        if not divides(h.lm, t) or not dom.divides(h.lc, bound):
            continue
        if need_done and (_key(k, i) not in st.s_done or _key(k, j) not in st.s_done):
            continue
        return True
    return False


def _with_order(f: Polynomial, ring: PolyRing) -> Polynomial:
    if f.ring == ring:
        return f
    return ring.from_dict(f.as_dict())


def _unit_basis(ring: PolyRing, stats: Stats) -> tuple[Basis, Stats]:
    stats.basis_size = 1
    stats.max_coeff_bits = max(stats.max_coeff_bits, 1)
    return Basis(ring, [ring.one()]), stats


def _is_unit_constant(f: Polynomial) -> bool:
    return f.lm == f.ring.one_code and f.ring.domain.is_unit(f.lc)


def buchberger(generators: Sequence[Polynomial], order=None,
               config: Optional[EngineConfig] = None) -> tuple[Basis, Stats]:
    """Strong standard basis of the ideal generated by ``generators``.

    Generators enter through the pair queue (ordered like pairs, by lead
    monomial degree) and are reduced before joining the basis.  The normal
    form is Mora's for a local order and the plain top reduction otherwise.
    """
    config = config or EngineConfig()
    stats = Stats()
    gens = list(generators)
    if not gens:
        return Basis(None), stats
    ring = gens[0].ring
    for f in gens:
        if f.ring.variables != ring.variables or f.ring.domain is not ring.domain:
            raise ValueError("generators must belong to a common ring")
    if order is not None:
        order = order if isinstance(order, MonomialOrder) else MonomialOrder.parse(order)
        if order is not ring.order:
            ring = PolyRing(ring.variables, order, ring.domain)
    gens = [_with_order(f, ring) for f in gens]

    seen = set()
    inputs = []
    for f in gens:
        if not f:
            continue
        f = f.canonical_sign()
        if f.terms in seen:
            continue
        seen.add(f.terms)
        inputs.append(f)
    if any(_is_unit_constant(f) for f in inputs):
        return _unit_basis(ring, stats)

    B = Basis(ring)
    st = _State(B, PairQueue(), config, stats)
    for n, f in enumerate(inputs):
        st.queue.push(Pair(n, n, GENERATOR, f.lm, ring.mono_degree(f.lm)))
    policy = config.policy

    while st.queue:
        pair = st.queue.pop()
        if pair.kind == GENERATOR:
            h = inputs[pair.i]
        else:
            i, j = pair.i, pair.j
            if B.polys[i] is None or B.polys[j] is None:
                continue
            if pair.versions != (B.versions[i], B.versions[j]):
                continue
            if pair.kind == S_PAIR:
                if config.criteria and _chain_skip(st, pair):
                    stats.chain_s_hits += 1
                    st.s_done.add((i, j))
                    continue
                st.s_done.add((i, j))
                h = spoly(B.polys[i], B.polys[j])
            else:
                if config.criteria and _chain_skip(st, pair):
                    stats.chain_g_hits += 1
                    continue
                h = gpoly(B.polys[i], B.polys[j])
        if not h:
            stats.zero_reductions += 1
            continue
        out = normal_form(h, B.reducers, policy)
        if out.replacements:
            st.s_done = apply_replacement(B, out, st.queue, config, stats, st.s_done)
        r = out.remainder
        if not r:
            stats.zero_reductions += 1
            continue
        r = r.canonical_sign()
        if config.tail_reduce and ring.order.is_global and len(r.terms) > 1:
            r = _reduce_tail(r, B.reducers)
        if _is_unit_constant(r):
            return _unit_basis(ring, stats)
        idx = B.append(r)
        stats.max_coeff_bits = max(stats.max_coeff_bits, r.max_coeff_bits())
        _schedule(st, idx)

    for p in B.live():
        if _is_unit_constant(p):
            return _unit_basis(ring, stats)
    stats.basis_size = len(B)
    return B, stats


# ----------------------------------------------------------------------
# post-processing and verification


def _reduce_tail(f: Polynomial, G) -> Polynomial:
    ring = f.ring
    return Polynomial(ring, f.terms[:1]) + tail_reduce(Polynomial(ring, f.terms[1:]), G)


def sort_key(f: Polynomial):
    """Output order: lead monomial descending, then lead coefficient ascending."""
    return (-f.lm, f.lc)


def interreduce(B: Basis, tail: bool = True) -> Basis:
    """Drop elements whose lead term is strongly divisible by another's.

    With ``tail`` set (global orders only) the survivors' tail coefficients
    are shrunk by truncated division against the other lead terms.  The result is sign-canonical and sorted.
    """
    if B.ring is None:
        return Basis(None)
    ring = B.ring
    dom = ring.domain
    items = [(i, p.canonical_sign()) for i, p in enumerate(B.polys) if p is not None]
    keep = []
    for i, f in items:
        dominated = False
        for k, g in items:
            if k == i or not ring.mono_divides(g.lm, f.lm) or not dom.divides(g.lc, f.lc):
                continue
            same = g.lm == f.lm and dom.divides(f.lc, g.lc)
            if not same or k < i:
                dominated = True
                break
        if not dominated:
            keep.append(f)
    keep.sort(key=sort_key)
    if tail and ring.order.is_global:
        for n, f in enumerate(keep):
            keep[n] = _reduce_tail(f, keep)
    return Basis(ring, keep)


def sorted_basis(B: Basis) -> list[Polynomial]:
    return sorted((p.canonical_sign() for p in B.live()), key=sort_key)


def lead_terms(polys) -> list[tuple[int, object]]:
    return [(p.lm, p.lc) for p in polys]


def mutually_strongly_divisible(A, C) -> bool:
    """Each lead term of one set is strongly divisible by one of the other set."""
    A, C = list(A), list(C)
    if not A or not C:
        return not A and not C
    ring = A[0].ring
    dom = ring.domain

    def covered(xs, ys):
        return all(
            any(ring.mono_divides(y.lm, x.lm) and dom.divides(y.lc, x.lc) for y in ys) for x in xs
        )

    return covered(A, C) and covered(C, A)


@dataclass
class Witness:
    kind: str  # "generator", "spoly" or "gpoly"
    index: tuple
    remainder: Polynomial

    def __str__(self):
        return f"{self.kind}{self.index}: {self.remainder}"


@dataclass
class VerificationReport:
    failures: list = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def verify_strong(B, generators: Sequence[Polynomial] = ()) -> VerificationReport:
    """Check that ``B`` is a strong basis containing ``generators``.

    Every generator and the spoly and gpoly of every pair of live elements
    must reduce to zero.  Replacements are disabled, so the check cannot
    mutate ``B``.
    """
    polys = B.live() if isinstance(B, Basis) else [p for p in B if p is not None]
    report = VerificationReport()
    if not polys:
        for n, f in enumerate(generators):
            report.checked += 1
            if f:
                report.failures.append(Witness("generator", (n,), f))
        return report
    ring = polys[0].ring
    R = ReducerSet(polys)

    def check(kind, index, f):
        report.checked += 1
        if not f:
            return
        r = normal_form(f, R, NO_REPLACE).remainder
        if r:
            report.failures.append(Witness(kind, index, r))

    for n, f in enumerate(generators):
        check("generator", (n,), _with_order(f, ring))
    for j in range(len(polys)):
        for i in range(j):
            check("spoly", (i, j), spoly(polys[i], polys[j]))
            check("gpoly", (i, j), gpoly(polys[i], polys[j]))
    return report


__all__ = [
    "Basis",
    "EngineConfig",
    "Stats",
    "VerificationReport",
    "Witness",
    "apply_replacement",
    "buchberger",
    "interreduce",
    "lead_terms",
    "mutually_strongly_divisible",
    "sort_key",
    "sorted_basis",
    "verify_strong",
]
