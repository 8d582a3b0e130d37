"""Monomials, monomial orders and sparse multivariate polynomials.

Monomials are exchanged with callers as exponent tuples, but polynomials
store them as *codes*: integers ``sum(e_i * w_i)`` where the weights ``w_i``
depend on the monomial order.  For each supported order the weights are
chosen so that

* multiplying monomials is adding codes, and
* comparing monomials under the order is comparing codes as integers.

Each exponent lives in a 16-bit field, so a product is only formed after
checking the total degree stays below :data:`MAX_DEGREE`; crossing it raises
:class:`OverflowError` instead of silently carrying into a neighbouring
field.

A second packed form with a guard bit per field (the "divisor mask") makes
monomial divisibility a subtraction and a mask test.
"""

from __future__ import annotations

import enum
from typing import Mapping, Sequence

from .coeff import QQ, ZZ, Domain

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_DEGREE = (1 << (FIELD_BITS - 1)) - 1


class MonomialOrder(enum.Enum):
    DEGREVLEX = "degrevlex"
    LEX = "lex"
    NEGDEGREVLEX = "negdegrevlex"

    @property
    def is_global(self) -> bool:
        return self is not MonomialOrder.NEGDEGREVLEX

    @property
    def is_local(self) -> bool:
        return self is MonomialOrder.NEGDEGREVLEX

    @classmethod
    def parse(cls, name: str) -> "MonomialOrder":
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown order {name!r}") from None


def _sort_key(order: MonomialOrder, m: Sequence[int]):
    """Reference comparison key on exponent tuples (bigger key = bigger monomial)."""
    if order is MonomialOrder.LEX:
        return tuple(m)
    revlex = tuple(-e for e in reversed(m))
    if order is MonomialOrder.DEGREVLEX:
        return (sum(m),) + revlex
    return (-sum(m),) + revlex


def compare(order: MonomialOrder, m1: Sequence[int], m2: Sequence[int]) -> int:
    """Compare two exponent vectors; returns -1, 0 or 1."""
    if len(m1) != len(m2):
        raise ValueError("monomials have different numbers of variables")
    k1, k2 = _sort_key(order, m1), _sort_key(order, m2)
    return (k1 > k2) - (k1 < k2)


def lcm_monomial(m1: Sequence[int], m2: Sequence[int]) -> tuple[int, ...]:
    if len(m1) != len(m2):
        raise ValueError("monomials have different numbers of variables")
    return tuple(max(a, b) for a, b in zip(m1, m2))


class PolyRing:
    """A polynomial ring ``domain[variables]`` with a fixed monomial order."""

    def __init__(self, variables: Sequence[str], order="degrevlex", domain: Domain = ZZ):
        if not variables:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be unique")
        self.variables = tuple(variables)
        self.n = len(self.variables)
        self.order = order if isinstance(order, MonomialOrder) else MonomialOrder.parse(order)
        self.domain = domain
        n, W = self.n, FIELD_BITS
        if self.order is MonomialOrder.LEX:
            self._weights = tuple(1 << (W * (n - 1 - i)) for i in range(n))
        else:
            sign = 1 if self.order is MonomialOrder.DEGREVLEX else -1
            # fields: [+-deg | s_{n-1} | ... | s_1] with s_k = e_1 + ... + e_k
            top = 1 << (W * (n - 1))
            self._weights = tuple(
                sign * top + sum(1 << (W * (k - 1)) for k in range(i + 1, n))
                for i in range(n)
            )
        self._guard = sum(1 << (W * i + W - 1) for i in range(n))
        self._exp_cache: dict[int, tuple[int, ...]] = {}
        self._mask_cache: dict[int, int] = {}
        self._deg_cache: dict[int, int] = {}
        self.one_code = 0

    # ------------------------------------------------------------------
    # monomial codes

    def encode(self, exps: Sequence[int]) -> int:
        if len(exps) != self.n:
            raise ValueError(f"expected {self.n} exponents, got {len(exps)}")
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        if sum(exps) > MAX_DEGREE:
            raise OverflowError(f"monomial degree exceeds {MAX_DEGREE}")
        return sum(e * w for e, w in zip(exps, self._weights))

    def exponents(self, code: int) -> tuple[int, ...]:
        try:
            return self._exp_cache[code]
        except KeyError:
            pass
        n, W = self.n, FIELD_BITS
        if self.order is MonomialOrder.LEX:
            exps = tuple((code >> (W * (n - 1 - i))) & FIELD_MASK for i in range(n))
        else:
            top = code >> (W * (n - 1))
            deg = top if self.order is MonomialOrder.DEGREVLEX else -top
            s = [0] + [(code >> (W * (k - 1))) & FIELD_MASK for k in range(1, n)]
            exps = tuple(s[k] - s[k - 1] for k in range(1, n)) + (deg - s[n - 1],)
        self._exp_cache[code] = exps
        return exps

    def divmask(self, code: int) -> int:
        try:
            return self._mask_cache[code]
        except KeyError:
            pass
        mask = 0
        for i, e in enumerate(self.exponents(code)):
            mask |= e << (FIELD_BITS * i)
        self._mask_cache[code] = mask
        return mask

    def mono_degree(self, code: int) -> int:
        try:
            return self._deg_cache[code]
        except KeyError:
            d = self._deg_cache[code] = sum(self.exponents(code))
            return d

    def mono_divides(self, a: int, b: int) -> bool:
        """True iff monomial ``a`` divides monomial ``b``."""
        g = self._guard
        return ((self.divmask(b) | g) - self.divmask(a)) & g == g

    def mono_lcm(self, a: int, b: int) -> int:
        return self.encode(lcm_monomial(self.exponents(a), self.exponents(b)))

    def mono_coprime(self, a: int, b: int) -> bool:
        return not any(x and y for x, y in zip(self.exponents(a), self.exponents(b)))

    # ------------------------------------------------------------------
    # polynomial construction

    def with_domain(self, domain: Domain) -> "PolyRing":
        return PolyRing(self.variables, self.order, domain)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.domain.convert(c)
        return Polynomial(self, ((0, c),) if c else ())

    def gens(self) -> list["Polynomial"]:
        out = []
        for i in range(self.n):
            e = [0] * self.n
            e[i] = 1
            out.append(self.monomial(e))
        return out

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(self, ((self.encode(exps), self.domain.convert(coeff)),))

    def from_dict(self, terms: Mapping[tuple, object]) -> "Polynomial":
        """Build from ``{exponent tuple: coefficient}``; zero coefficients dropped."""
        acc: dict[int, object] = {}
        conv = self.domain.convert
        for exps, c in terms.items():
            code = self.encode(exps)
            acc[code] = acc.get(code, 0) + conv(c)
        return self.from_codes(acc)

    def from_codes(self, terms: Mapping[int, object]) -> "Polynomial":
        return Polynomial(self, tuple(sorted(((m, c) for m, c in terms.items() if c), reverse=True)))

    def parse(self, text: str) -> "Polynomial":
        from .parse import parse_polynomial

        return parse_polynomial(self, text)

    def format(self, f: "Polynomial") -> str:
        if not f.terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(f.terms):
            factors = []
            for name, e in zip(self.variables, self.exponents(m)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.order is other.order
            and self.domain is other.domain
        )

    def __hash__(self):
        return hash((self.variables, self.order, self.domain.name))

    def __repr__(self):
        return f"PolyRing({list(self.variables)}, {self.order.value}, {self.domain})"


class Polynomial:
    """Immutable sparse polynomial.

    ``terms`` is a tuple of ``(code, coeff)`` pairs, strictly decreasing in
    the ring's monomial order, with no zero coefficients.
    """

    __slots__ = ("ring", "terms", "_deg", "_hash")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms
        self._deg = None
        self._hash = None

    # lead data -------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> int:
        """Code of the lead monomial."""
        if not self.terms:
            raise ValueError("the zero polynomial has no lead term")
        return self.terms[0][0]

    @property
    def lc(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no lead term")
        return self.terms[0][1]

    def degree(self) -> int:
        if self._deg is None:
            if not self.terms:
                self._deg = -1
            else:
                md = self.ring.mono_degree
                self._deg = max(md(m) for m, _ in self.terms)
        return self._deg

    def ecart(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no ecart")
        return self.degree() - self.ring.mono_degree(self.terms[0][0])

    def items(self) -> list[tuple[tuple[int, ...], object]]:
        ex = self.ring.exponents
        return [(ex(m), c) for m, c in self.terms]

    def as_dict(self) -> dict:
        return dict(self.items())

    def max_coeff_bits(self) -> int:
        return max((abs(c).bit_length() for _, c in self.terms if isinstance(c, int)), default=0)

    # arithmetic ------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials belong to different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            v = acc.get(m, 0) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return self.ring.from_codes(acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, a) -> "Polynomial":
        if not a:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, c * a) for m, c in self.terms))

    def mul_term(self, coeff, code: int) -> "Polynomial":
        """Multiply by the term ``coeff * x^code``; order is preserved."""
        if not coeff or not self.terms:
            return self.ring.zero()
        if self.degree() + self.ring.mono_degree(code) > MAX_DEGREE:
            raise OverflowError(f"monomial degree exceeds {MAX_DEGREE}")
        return Polynomial(self.ring, tuple((m + code, c * coeff) for m, c in self.terms))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(self.ring.domain.convert(other))
        self._check(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        if self.degree() + other.degree() > MAX_DEGREE:
            raise OverflowError(f"monomial degree exceeds {MAX_DEGREE}")
        acc: dict[int, object] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                k = m1 + m2
                acc[k] = acc.get(k, 0) + c1 * c2
        return self.ring.from_codes(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def canonical_sign(self) -> "Polynomial":
        """Return the associate with positive lead coefficient."""
        if self.terms and self.terms[0][1] < 0:
            return -self
        return self

    def change_domain(self, domain: Domain) -> "Polynomial":
        ring = self.ring.with_domain(domain)
        conv = domain.convert
        return Polynomial(ring, tuple((m, conv(c)) for m, c in self.terms))

    # comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self.terms == (((0, other),) if other else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __str__(self):
        return self.ring.format(self)

    def __repr__(self):
        return f"Polynomial({self.ring.format(self)!r})"


# free-function accessors ----------------------------------------------


class Term(tuple):
    """``(coeff, exponents)`` pair."""

    __slots__ = ()

    def __new__(cls, coeff, mono):
        return super().__new__(cls, (coeff, tuple(mono)))

    @property
    def coeff(self):
        return self[0]

    @property
    def mono(self):
        return self[1]


def lead_term(f: Polynomial) -> Term:
    return Term(f.lc, f.ring.exponents(f.lm))


def lead_monomial(f: Polynomial) -> tuple[int, ...]:
    return f.ring.exponents(f.lm)


def lead_coeff(f: Polynomial):
    return f.lc


def ecart(f: Polynomial) -> int:
    return f.ecart()


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul_term(f: Polynomial, t: Term) -> Polynomial:
    return f.mul_term(f.ring.domain.convert(t.coeff), f.ring.encode(t.mono))


def strongly_divides(ring: PolyRing, lm_a: int, lc_a, lm_b: int, lc_b) -> bool:
    """True iff the term ``lc_a*x^a`` divides ``lc_b*x^b``."""
    return ring.mono_divides(lm_a, lm_b) and ring.domain.divides(lc_a, lc_b)


def is_canonical(f: Polynomial) -> bool:
    """Strictly decreasing codes, no zero coefficients."""
    ts = f.terms
    return all(c for _, c in ts) and all(ts[i][0] > ts[i + 1][0] for i in range(len(ts) - 1))


__all__ = [
    "FIELD_BITS",
    "MAX_DEGREE",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "Term",
    "ZZ",
    "QQ",
    "add",
    "compare",
    "ecart",
    "is_canonical",
    "lcm_monomial",
    "lead_coeff",
    "lead_monomial",
    "lead_term",
    "mul_term",
    "strongly_divides",
]
