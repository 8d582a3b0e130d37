"""Euclidean-domain coefficient arithmetic.

Two coefficient domains are provided.  ``ZZ`` represents elements as plain
Python ``int`` (arbitrary precision, so coefficient swell is never truncated)
and ``QQ`` uses ``fractions.Fraction``, which keeps numerator/denominator
reduced with a positive denominator.

Both domains expose the same small contract used by the rest of the package:
division with norm-minimal remainder, a deterministic extended gcd, the total
order on elements induced by the Euclidean norm, and divisibility.
"""

from __future__ import annotations

import math
from fractions import Fraction


class Domain:
    """Common interface of a coefficient domain."""

    name = "domain"
    is_field = False

    def convert(self, a):
        raise NotImplementedError

    def div_min_rem(self, a, b):
        raise NotImplementedError

    def xgcd(self, a, b):
        raise NotImplementedError

    def norm_key(self, a):
        raise NotImplementedError

    def norm_less(self, a, b) -> bool:
        """True iff ``a`` strictly precedes ``b`` in the norm order."""
        return self.norm_key(a) < self.norm_key(b)

    def divides(self, a, b) -> bool:
        raise NotImplementedError

    def gcd(self, a, b):
        return self.xgcd(a, b)[0]

    def lcm(self, a, b):
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def __repr__(self):
        return self.name


class IntegerDomain(Domain):
    """The integers with balanced remainders.

    The norm order is ``0 < -1 < 1 < -2 < 2 < ...``: absolute value first,
    negative before positive on ties.
    """

    name = "ZZ"

    def convert(self, a):
        if isinstance(a, bool):
            return int(a)
        if isinstance(a, int):
            return a
        if isinstance(a, Fraction) and a.denominator == 1:
            return a.numerator
        raise TypeError(f"cannot convert {a!r} to an integer coefficient")

    def div_min_rem(self, a: int, b: int) -> tuple[int, int]:
        """Return ``(q, r)`` with ``a == q*b + r`` and ``|r| <= |b|/2``.

        When ``|r| == |b|/2`` the positive remainder is taken.
        """
        if b == 0:
            raise ZeroDivisionError("division by zero coefficient")
        q, r = divmod(a, b)
        # divmod gives r with the sign of b; move into (-|b|/2, |b|/2]
        ab = abs(b)
        if r < 0:
            r += ab
            q -= 1 if b > 0 else -1
        if 2 * r > ab:
            r -= ab
            q += 1 if b > 0 else -1
        return q, r

    def xgcd(self, a: int, b: int) -> tuple[int, int, int]:
        """Extended gcd ``(d, u, v)`` with ``u*a + v*b == d > 0``.

        ``u`` is the balanced representative modulo ``b/d``, which makes the
        Bezout pair the minimal one and the result deterministic.
        """
        if a == 0 and b == 0:
            raise ValueError("xgcd(0, 0) is undefined")
        r0, r1 = a, b
        s0, s1 = 1, 0
        t0, t1 = 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0 < 0:
            r0, s0, t0 = -r0, -s0, -t0
        d, u = r0, s0
        if b == 0:
            return d, (1 if a > 0 else -1), 0
        if a == 0:
            return d, 0, (1 if b > 0 else -1)
        m = abs(b) // d
        _, u = self.div_min_rem(u, m)
        v = (d - u * a) // b
        if 2 * abs(u) == m:
            # u and -u are both balanced; keep the one with the smaller v
            v2 = (d + u * a) // b
            if abs(v2) < abs(v) or (abs(v2) == abs(v) and -u > u):
                u, v = -u, v2
        return d, u, v

    def norm_key(self, a: int):
        return (abs(a), a)

    def divides(self, a: int, b: int) -> bool:
        if a == 0:
            raise ZeroDivisionError("divisibility by zero is undefined")
        return b % a == 0

    def gcd(self, a: int, b: int) -> int:
        return math.gcd(a, b)

    def lcm(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return abs(a * b) // math.gcd(a, b)

    def is_unit(self, a: int) -> bool:
        return a == 1 or a == -1

    def exact_quo(self, a: int, b: int) -> int:
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q


class RationalDomain(Domain):
    """The rationals, as a (trivially) Euclidean field."""

    name = "QQ"
    is_field = True

    def convert(self, a):
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int):
            return Fraction(a)
        raise TypeError(f"cannot convert {a!r} to a rational coefficient")

    def div_min_rem(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero coefficient")
        return Fraction(a) / b, Fraction(0)

    def xgcd(self, a, b):
        if a == 0 and b == 0:
            raise ValueError("xgcd(0, 0) is undefined")
        if a != 0:
            return Fraction(1), 1 / Fraction(a), Fraction(0)
        return Fraction(1), Fraction(0), 1 / Fraction(b)

    def norm_key(self, a):
        # every nonzero element has the same Euclidean norm; break ties by value
        return (a != 0, abs(a), a)

    def divides(self, a, b) -> bool:
        if a == 0:
            raise ZeroDivisionError("divisibility by zero is undefined")
        return True

    def gcd(self, a, b):
        return Fraction(0) if a == 0 and b == 0 else Fraction(1)

    def lcm(self, a, b):
        return Fraction(0) if a == 0 or b == 0 else Fraction(1)

    def is_unit(self, a) -> bool:
        return a != 0

    def exact_quo(self, a, b):
        return Fraction(a) / b


ZZ = IntegerDomain()
QQ = RationalDomain()


def div_min_rem(a, b, domain: Domain = ZZ):
    return domain.div_min_rem(a, b)


def xgcd(a, b, domain: Domain = ZZ):
    return domain.xgcd(a, b)


def norm_less(a, b, domain: Domain = ZZ) -> bool:
    return domain.norm_less(a, b)


def divides(a, b, domain: Domain = ZZ) -> bool:
    return domain.divides(a, b)


def parse_integer(text: str) -> int:
    """Parse a base-10 integer literal with an optional leading ``-``."""
    s = text.strip()
    body = s[1:] if s.startswith("-") else s
    if not body.isdigit() or not body.isascii():
        raise ValueError(f"malformed integer literal {text!r}")
    return int(s)
