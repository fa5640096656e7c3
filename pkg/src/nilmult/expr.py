"""Parser for group expressions such as ``Z^2 + Z12 + Z2`` or ``Z2 * Z3``.

Grammar (whitespace between tokens is ignored)::

    expr := sum ('*' sum)*
    sum  := atom ('+' atom)*
    atom := 'Z' ('^' NAT)? | 'Z' NAT ('^' NAT)? | '1'

``Z`` is infinite cyclic, ``Z12`` is cyclic of order 12, a power is a
repeated direct sum and ``1`` is the trivial group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, ScopeError
from .fgab import FgAbGroup, direct_sum, from_summands

__all__ = ["Atom", "Sum", "GroupExpr", "parse_group", "render"]

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<sym>[Z^+*]))")


@dataclass(frozen=True)
class Atom:
    order: int  # 0 for Z
    power: int = 1

    def to_group(self) -> FgAbGroup:
        return from_summands(0, [(self.order, self.power)])


@dataclass(frozen=True)
class Sum:
    atoms: tuple[Atom, ...]

    def to_group(self) -> FgAbGroup:
        return direct_sum(*(a.to_group() for a in self.atoms))


@dataclass(frozen=True)
class GroupExpr:
    """Free product of one or more direct sums."""

    factors: tuple[Sum, ...]

    @property
    def is_free_product(self) -> bool:
        return len(self.factors) > 1

    def factor_groups(self) -> list[FgAbGroup]:
        return [f.to_group() for f in self.factors]

    def to_group(self) -> FgAbGroup:
        if self.is_free_product:
            raise ScopeError(
                "free products are not abelian; only `multiplier` accepts '*' "
                "(c = 2, or pairwise coprime cyclic factors)"
            )
        return self.factors[0].to_group()


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", offset)
        kind = "nat" if match.group("nat") is not None else match.group("sym")
        value = match.group("nat") or match.group("sym")
        tokens.append((kind, value, match.start(kind if kind == "nat" else "sym")))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def where(self) -> int:
        tok = self.peek()
        return tok[2] if tok else len(self.text.rstrip()) if self.text.strip() else 0

    def take(self, kind: str, what: str):
        tok = self.peek()
        if tok is None or tok[0] != kind:
            found = "end of input" if tok is None else repr(tok[1])
            raise ParseError(f"expected {what}, found {found}", self.where())
        self.i += 1
        return tok

    def expr(self) -> GroupExpr:
        if not self.tokens:
            raise ParseError("empty group expression", 0)
        factors = [self.sum()]
        while self.peek() and self.peek()[0] == "*":
            self.i += 1
            factors.append(self.sum())
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.peek()[1]!r}", self.where())
        return GroupExpr(tuple(factors))

    def sum(self) -> Sum:
        atoms = [self.atom()]
        while self.peek() and self.peek()[0] == "+":
            self.i += 1
            atoms.append(self.atom())
        return Sum(tuple(atoms))

    def atom(self) -> Atom:
        tok = self.peek()
        if tok is not None and tok[0] == "nat" and tok[1].lstrip("0") == "1":
            self.i += 1
            return Atom(1)
        self.take("Z", "'Z' or '1'")
        order = 0
        if self.peek() and self.peek()[0] == "nat":
            order = int(self.take("nat", "order")[1])
            if order == 0:
                raise ParseError("cyclic order must be >= 1", self.tokens[self.i - 1][2])
        power = 1
        if self.peek() and self.peek()[0] == "^":
            self.i += 1
            power = int(self.take("nat", "exponent")[1])
        return Atom(order, power)


def parse_group(text: str) -> GroupExpr:
    """Parse ``text``; raises ParseError carrying a 0-based offset.

    >>> print(parse_group("Z^2 + Z12 + Z2").to_group())
    Z^2 + Z12 + Z2
    >>> parse_group("Z^")
    Traceback (most recent call last):
    ...
    nilmult.errors.ParseError: expected exponent, found end of input at offset 2
    """
    return _Parser(text).expr()


def render(G: FgAbGroup) -> str:
    return str(G)
