"""Ideal file and polynomial text parsing.

File layout::

    vars x y z
    order degrevlex
    gens
    x^2*y - 3*x + 4
    ...

``#`` starts a comment and blank lines are skipped.  In a polynomial ``*``
between factors is optional and ``^`` is required for exponents.  A run of
letters that is not a declared variable is split greedily into declared
names, so ``xy`` means ``x*y`` unless ``xy`` itself is declared.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .poly import MAX_DEGREE, MonomialOrder, PolyRing, Polynomial

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ParseError(ValueError):
    def __init__(self, msg: str, line: Optional[int] = None, col: Optional[int] = None):
        self.msg = msg
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" at line {line}"
            if col is not None:
                where += f", column {col}"
        super().__init__(msg + where)


@dataclass
class IdealFile:
    ring: PolyRing
    order: MonomialOrder
    generators: list

    @property
    def variables(self) -> tuple:
        return self.ring.variables

    def dumps(self, header: str = "") -> str:
        lines = [f"# {h}" for h in header.splitlines()]
        lines += [
            "vars " + " ".join(self.ring.variables),
            "order " + self.order.value,
            "gens",
        ]
        lines += [str(f) for f in self.generators]
        return "\n".join(lines) + "\n"


class _PolyParser:
    def __init__(self, ring: PolyRing, text: str, line: Optional[int]):
        self.ring = ring
        self.s = text
        self.pos = 0
        self.line = line
        self.index = {v: i for i, v in enumerate(ring.variables)}
        # longest names first for greedy splitting
        self.names = sorted(ring.variables, key=len, reverse=True)

    def error(self, msg, pos=None):
        raise ParseError(msg, self.line, (self.pos if pos is None else pos) + 1)

    def skip(self):
        s = self.s
        while self.pos < len(s) and s[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.s[self.pos] if self.pos < len(self.s) else ""

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.s) and self.s[self.pos].isdigit():
            self.pos += 1
        return int(self.s[start:self.pos])

    def identifier(self) -> tuple[int, str]:
        start = self.pos
        s = self.s
        while self.pos < len(s) and (s[self.pos].isalnum() or s[self.pos] == "_"):
            self.pos += 1
        return start, s[start:self.pos]

    def split_name(self, word: str, start: int) -> list[int]:
        if word in self.index:
            return [self.index[word]]
        out = []
        k = 0
        while k < len(word):
            for name in self.names:
                if word.startswith(name, k):
                    out.append(self.index[name])
                    k += len(name)
                    break
            else:
                if word[k].isdigit() and out:
                    self.error(f"malformed exponent in '{word}' (use '^')", start + k)
                self.error(f"unknown variable '{word}'", start)
        return out

    def parse(self) -> Polynomial:
        ring = self.ring
        acc: dict = {}
        if not self.peek():
            self.error("empty polynomial")
        first = True
        while True:
            c = self.peek()
            if not c:
                break
            sign = 1
            if c in "+-":
                sign = -1 if c == "-" else 1
                self.pos += 1
            elif not first:
                self.error(f"unexpected character '{c}'")
            coeff, exps = self.term()
            code = ring.encode(exps)
            acc[code] = acc.get(code, 0) + sign * coeff
            first = False
        return ring.from_codes({m: ring.domain.convert(c) for m, c in acc.items()})

    def term(self):
        exps = [0] * self.ring.n
        coeff = 1
        seen_factor = False
        while True:
            c = self.peek()
            if not c or c in "+-":
                break
            if seen_factor and c == "*":
                self.pos += 1
                c = self.peek()
                if not c or c in "+-*^":
                    self.error("expected a factor after '*'")
            if c.isdigit():
                coeff *= self.integer()
                if self.peek() == "^":
                    self.error("exponent on a numeric factor")
            elif c.isalpha():
                start, word = self.identifier()
                idx = self.split_name(word, start)
                e = 1
                if self.peek() == "^":
                    self.pos += 1
                    self.skip()
                    if self.pos >= len(self.s) or not self.s[self.pos].isdigit():
                        self.error("malformed exponent")
                    e = self.integer()
                for k in idx[:-1]:
                    exps[k] += 1
                exps[idx[-1]] += e
            elif c == "(":
                self.error("parentheses are not supported")
            else:
                self.error(f"unexpected character '{c}'")
            seen_factor = True
        if not seen_factor:
            self.error("missing term")
        if sum(exps) > MAX_DEGREE:
            self.error(f"monomial degree exceeds {MAX_DEGREE}")
        return coeff, exps


def parse_polynomial(ring: PolyRing, text: str, line: Optional[int] = None) -> Polynomial:
    return _PolyParser(ring, text, line).parse()


def _strip(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def parse_ideal(text: str) -> IdealFile:
    rows = [(n, _strip(raw)) for n, raw in enumerate(text.splitlines(), start=1)]
    rows = [(n, s) for n, s in rows if s]
    if len(rows) < 3:
        last = rows[-1][0] if rows else 1
        raise ParseError("incomplete ideal file (need vars, order and gens lines)", last)

    (ln, s) = rows[0]
    head, *names = s.split()
    if head != "vars" or not names:
        raise ParseError("expected 'vars <name>...'", ln)
    for name in names:
        if not NAME_RE.match(name):
            raise ParseError(f"invalid variable name '{name}'", ln)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable name", ln)

    (ln, s) = rows[1]
    parts = s.split()
    if parts[0] != "order" or len(parts) != 2:
        raise ParseError("expected 'order <keyword>'", ln)
    try:
        order = MonomialOrder(parts[1])
    except ValueError:
        raise ParseError(f"unknown order '{parts[1]}'", ln) from None

    (ln, s) = rows[2]
    if s != "gens":
        raise ParseError("expected 'gens'", ln)

    ring = PolyRing(names, order)
    gens = [parse_polynomial(ring, s, ln) for ln, s in rows[3:]]
    return IdealFile(ring, order, gens)
