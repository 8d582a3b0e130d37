"""Parameterized benchmark systems: cyclic, katsura, eco and noon."""

from __future__ import annotations

from dataclasses import dataclass

from .parse import IdealFile
from .poly import MonomialOrder, PolyRing

# desk-scale size bounds (inclusive)
BOUNDS = {"cyclic": (2, 8), "katsura": (2, 10), "eco": (2, 12), "noon": (2, 10)}

HEADERS = {
    "cyclic": "cyclic-{n}: elementary symmetric sums of cyclically consecutive products, last one minus 1",
    "katsura": "katsura-{n}: u0..u{m}, normalization u0 + 2(u1+...+u{m}) = 1 plus the convolution equations",
    "eco": "eco-{n}: economic modelling system",
    "noon": "noon-{n}: x_i*sum_(j!=i) x_j^2 - 11/10*x_i + 1 scaled by 10 to integer coefficients",
}


@dataclass(frozen=True)
class BenchmarkSpec:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in BOUNDS:
            raise ValueError(f"unknown benchmark family '{self.family}'")
        lo, hi = BOUNDS[self.family]
        if not lo <= self.n <= hi:
            raise ValueError(f"{self.family} size must be between {lo} and {hi}, got {self.n}")

    @classmethod
    def parse(cls, text: str) -> "BenchmarkSpec":
        family, sep, size = text.partition(":")
        if not sep or not size.strip().isdigit():
            raise ValueError(f"benchmark must look like 'cyclic:5', got '{text}'")
        return cls(family.strip(), int(size))

    def __str__(self):
        return f"{self.family}:{self.n}"

    @property
    def header(self) -> str:
        return HEADERS[self.family].format(n=self.n, m=self.n - 1)


def _cyclic(n):
    R = PolyRing([f"x{i}" for i in range(n)], MonomialOrder.DEGREVLEX)
    x = R.gens()
    out = []
    for d in range(1, n):
        s = R.zero()
        for i in range(n):
            t = R.one()
            for k in range(d):
                t = t * x[(i + k) % n]
            s = s + t
        out.append(s)
    prod = R.one()
    for v in x:
        prod = prod * v
    out.append(prod - 1)
    return R, out


def _katsura(n):
    R = PolyRing([f"u{i}" for i in range(n)], MonomialOrder.DEGREVLEX)
    u = R.gens()

    def U(k):
        k = abs(k)
        return u[k] if k < n else R.zero()

    first = u[0] - 1
    for i in range(1, n):
        first = first + u[i] * 2
    out = [first]
    for m in range(n - 1):
        s = R.zero()
        for l in range(-(n - 1), n):
            s = s + U(l) * U(m - l)
        out.append(s - u[m])
    return R, out


def _eco(n):
    R = PolyRing([f"x{i}" for i in range(1, n + 1)], MonomialOrder.DEGREVLEX)
    x = [None] + R.gens()
    out = []
    for k in range(1, n):
        s = x[k]
        for i in range(1, n - k):
            s = s + x[i] * x[i + k]
        out.append(s * x[n] - k)
    last = R.one()
    for l in range(1, n):
        last = last + x[l]
    out.append(last)
    return R, out


def _noon(n):
    R = PolyRing([f"x{i}" for i in range(1, n + 1)], MonomialOrder.DEGREVLEX)
    x = R.gens()
    out = []
    for i in range(n):
        sq = R.zero()
        for j in range(n):
            if j != i:
                sq = sq + x[j] * x[j]
        out.append(x[i] * sq * 10 - x[i] * 11 + 10)
    return R, out


_FAMILIES = {"cyclic": _cyclic, "katsura": _katsura, "eco": _eco, "noon": _noon}


def gen_benchmark(spec, n: int = None) -> IdealFile:
    """Accepts a :class:`BenchmarkSpec`, a ``"family:n"`` string, or ``(family, n)``."""
    if isinstance(spec, str):
        spec = BenchmarkSpec.parse(spec) if n is None else BenchmarkSpec(spec, n)
    ring, gens = _FAMILIES[spec.family](spec.n)
    return IdealFile(ring, ring.order, gens)
