"""Basic commutators: Witt counts, an explicit Hall basis, and T(H_1..H_n)_w.

The number ``b_j`` of basic commutators of weight ``w`` on ``j`` letters is
given by Witt's necklace formula.  The explicit Hall basis is enumerated
independently of that formula and serves as its oracle; ``tensor_T`` builds
the direct sum of tensor products indexed by the basis, which is the
brute-force route to the nilpotent multiplier of an abelian group.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Sequence, Union

from .errors import CapacityError
from .fgab import TRIVIAL, Z, FgAbGroup, cyclic, from_summands
from .homalg import tensor

__all__ = [
    "BasicCommutator",
    "MultiplierParams",
    "MAX_LETTERS",
    "MAX_WEIGHT",
    "mobius",
    "divisors",
    "witt_count",
    "hall_basis",
    "letter_multiset",
    "tensor_T",
]

MAX_LETTERS = 6
MAX_WEIGHT = 8


@dataclass(frozen=True)
class BasicCommutator:
    """A leaf ``x_letter`` or a bracket ``[left, right]``."""

    letter: int | None = None
    left: BasicCommutator | None = None
    right: BasicCommutator | None = None
    weight: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.letter is not None:
            if self.left is not None or self.right is not None or self.letter < 1:
                raise ValueError("a leaf carries only a positive letter index")
            w = 1
        else:
            if self.left is None or self.right is None:
                raise ValueError("a bracket needs both sides")
            w = self.left.weight + self.right.weight
        object.__setattr__(self, "weight", w)

    @classmethod
    def leaf(cls, i: int) -> BasicCommutator:
        return cls(letter=i)

    @classmethod
    def bracket(cls, u: BasicCommutator, v: BasicCommutator) -> BasicCommutator:
        return cls(left=u, right=v)

    @property
    def is_leaf(self) -> bool:
        return self.letter is not None

    def __str__(self):
        if self.is_leaf:
            return f"x{self.letter}"
        return f"[{self.left},{self.right}]"


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(d: int) -> int:
    if d < 1:
        raise ValueError(f"mobius is defined for d >= 1, got {d}")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    if d > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def witt_count(n: int, w: int) -> int:
    """Number of basic commutators of weight ``w`` on ``n`` letters.

    ``(1/w) * sum_{d | w} mu(d) * n^(w/d)``; letters may repeat and need not
    all occur, so this counts commutators on *at most* n letters.

    >>> witt_count(4, 2), witt_count(2, 3), witt_count(1, 5)
    (6, 2, 0)
    """
    if n < 0 or w < 1:
        raise ValueError(f"witt_count needs n >= 0 and w >= 1, got ({n}, {w})")
    total = sum(mobius(d) * n ** (w // d) for d in divisors(w))
    q, r = divmod(total, w)
    assert r == 0, f"Witt sum {total} not divisible by {w}"
    return q


@dataclass(frozen=True)
class MultiplierParams:
    """Nilpotency class ``c`` and the derived weight ``w = c + 1``.

    ``b(j)`` is the number of basic commutators of weight w on j letters,
    with ``b(0) == b(1) == 0``.
    """

    c: int

    def __post_init__(self):
        if self.c < 1:
            raise ValueError(f"nilpotency class must be >= 1, got {self.c}")

    @property
    def w(self) -> int:
        return self.c + 1

    def b(self, j: int) -> int:
        return witt_count(j, self.w)

    def b_table(self, up_to: int) -> dict[int, int]:
        return {j: self.b(j) for j in range(up_to + 1)}


def _check_caps(n: int, w: int, lo: int = 1):
    if not (lo <= n <= MAX_LETTERS and 1 <= w <= MAX_WEIGHT):
        raise CapacityError(
            f"Hall basis enumeration is capped at {lo} <= n <= {MAX_LETTERS}, "
            f"1 <= w <= {MAX_WEIGHT}; got n={n}, w={w}"
        )


# Internal encoding: element i of the global order is either ("leaf", letter)
# or (left_index, right_index); elements are appended weight by weight, so
# index order is the Hall order.
@dataclass
class _HallTable:
    n: int
    nodes: list = field(default_factory=list)
    weights: list = field(default_factory=list)
    letters: list = field(default_factory=list)  # per node, tuple of letter counts
    by_weight: dict = field(default_factory=dict)  # weight -> list of node indices


@lru_cache(maxsize=None)
def _hall_table(n: int, w: int) -> _HallTable:
    if w > 1:
        prev = _hall_table(n, w - 1)
        table = _HallTable(
            n, list(prev.nodes), list(prev.weights), list(prev.letters), dict(prev.by_weight)
        )
    else:
        table = _HallTable(n)
        for i in range(1, n + 1):
            table.nodes.append(("leaf", i))
            table.weights.append(1)
            table.letters.append(tuple(int(j == i) for j in range(1, n + 1)))
        table.by_weight[1] = list(range(n))
        return table

    nodes, weights = table.nodes, table.weights
    new = []
    for wv in range(1, w // 2 + 1):
        wu = w - wv
        for u in table.by_weight.get(wu, ()):
            # Hall condition: if u = [a, b] then b <= v.
            lower = 0 if nodes[u][0] == "leaf" else nodes[u][1]
            for v in table.by_weight.get(wv, ()):
                if v < u and v >= lower:
                    new.append((u, v))
    new.sort()
    start = len(nodes)
    for u, v in new:
        nodes.append((u, v))
        weights.append(w)
        table.letters.append(tuple(a + b for a, b in zip(table.letters[u], table.letters[v])))
    table.by_weight[w] = list(range(start, len(nodes)))
    return table


def _to_commutator(table: _HallTable, i: int, memo: dict) -> BasicCommutator:
    if i in memo:
        return memo[i]
    node = table.nodes[i]
    if node[0] == "leaf":
        bc = BasicCommutator.leaf(node[1])
    else:
        bc = BasicCommutator.bracket(
            _to_commutator(table, node[0], memo), _to_commutator(table, node[1], memo)
        )
    memo[i] = bc
    return bc


def hall_basis(n: int, w: int) -> list[BasicCommutator]:
    """All basic commutators of weight exactly ``w`` on letters x_1..x_n.

    Ordered by weight first, then lexicographically by the positions of the
    two bracket entries in that same order.  Leaves satisfy x_1 < x_2 < ...

    >>> [str(c) for c in hall_basis(2, 3)]
    ['[[x2,x1],x1]', '[[x2,x1],x2]']
    """
    _check_caps(n, w)
    table = _hall_table(n, w)
    memo: dict = {}
    return [_to_commutator(table, i, memo) for i in table.by_weight[w]]


def letter_multiset(bc: BasicCommutator) -> dict[int, int]:
    if bc.is_leaf:
        return {bc.letter: 1}
    counts = Counter(letter_multiset(bc.left))
    counts.update(letter_multiset(bc.right))
    return dict(sorted(counts.items()))


@lru_cache(maxsize=None)
def _multiset_census(n: int, w: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    table = _hall_table(n, w)
    census = Counter(table.letters[i] for i in table.by_weight[w])
    return tuple(sorted(census.items()))


CyclicLike = Union[int, FgAbGroup]


def _as_order(h: CyclicLike) -> int:
    if isinstance(h, FgAbGroup):
        if h.free_rank == 1 and not h.torsion:
            return 0
        if h.free_rank == 0 and len(h.torsion) <= 1 and h.num_invariant_factors <= 1:
            return h.torsion[0][0] if h.torsion else 1
        raise ValueError(f"{h} is not cyclic")
    if h < 0:
        raise ValueError(f"negative cyclic order {h}")
    return h


def tensor_T(H: Sequence[CyclicLike], w: int) -> FgAbGroup:
    """Direct sum over the weight-``w`` Hall basis on ``len(H)`` letters of
    ``H_{i_1} (x) ... (x) H_{i_w}``, the letters of each basic commutator
    selecting the factors (with repetition).

    Entries of H are cyclic groups, given either as FgAbGroup or as an order
    (0 for Z).
    """
    orders = [_as_order(h) for h in H]
    if not orders:
        if w > MAX_WEIGHT or w < 1:
            _check_caps(0, w, lo=0)
        return TRIVIAL
    _check_caps(len(orders), w)
    factors = [Z if d == 0 else cyclic(d) for d in orders]
    free_rank = 0
    summands = []
    for counts, how_many in _multiset_census(len(orders), w):
        selected = [g for g, k in zip(factors, counts) for _ in range(k)]
        t = reduce(tensor, selected)
        free_rank += t.free_rank * how_many
        summands.extend((d, mult * how_many) for d, mult in t.torsion)
    return from_summands(free_rank, summands)
