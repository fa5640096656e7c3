"""Finitely generated abelian groups in invariant-factor form.

A group ``Z^(n) + Z_{n_1} + ... + Z_{n_k}`` is stored as its free rank and a
compressed list of ``(factor, multiplicity)`` pairs.  Factors run in
*descending* divisibility order (``n_{i+1} | n_i``), so the largest factor
comes first.  Two canonical values are isomorphic exactly when they compare
equal.

>>> from_cyclic_orders([4, 6])
FgAbGroup(free_rank=0, torsion=((12, 1), (2, 1)))
>>> print(direct_sum(from_cyclic_orders([0]), cyclic(2)))
Z + Z2
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from sympy import factorint

__all__ = [
    "FgAbGroup",
    "IntMatrix",
    "TRIVIAL",
    "Z",
    "cyclic",
    "free",
    "from_cyclic_orders",
    "from_summands",
    "smith_normal_form",
    "from_presentation",
    "direct_sum",
    "is_isomorphic",
    "is_direct_summand",
    "order",
    "exponent",
    "is_elementary_abelian",
    "primary_decomposition",
    "cyclic_orders",
]


@dataclass(frozen=True)
class FgAbGroup:
    """Canonical invariant-factor form of a finitely generated abelian group."""

    free_rank: int = 0
    torsion: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError(f"negative free rank {self.free_rank}")
        prev = None
        for factor, mult in self.torsion:
            if factor < 2 or mult < 1:
                raise ValueError(f"bad torsion entry {(factor, mult)}")
            if prev is not None and (factor >= prev or prev % factor):
                raise ValueError(
                    f"torsion {self.torsion} is not a strictly descending "
                    "divisibility chain"
                )
            prev = factor

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def num_invariant_factors(self) -> int:
        """k, the number of torsion invariant factors counted with multiplicity."""
        return sum(mult for _, mult in self.torsion)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        for factor, mult in self.torsion:
            parts.append(f"Z{factor}" if mult == 1 else f"Z{factor}^{mult}")
        return " + ".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "invariant_factors": [[d, m] for d, m in self.torsion],
        }


TRIVIAL = FgAbGroup()
Z = FgAbGroup(1)


def free(rank: int) -> FgAbGroup:
    return FgAbGroup(rank)


def cyclic(d: int) -> FgAbGroup:
    """Z_d for d >= 1, or Z for d == 0."""
    return from_cyclic_orders([d])


@lru_cache(maxsize=4096)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((int(p), int(e)) for p, e in factorint(n).items()))


def _assemble(free_rank: int, prime_runs: dict[int, dict[int, int]]) -> FgAbGroup:
    # prime_runs[p][e] = number of Z_{p^e} summands
    columns = []
    for p in sorted(prime_runs):
        runs = sorted(
            ((e, m) for e, m in prime_runs[p].items() if m > 0), reverse=True
        )
        if runs:
            columns.append((p, runs))
    # Invariant factor at position t is prod_p p^(t-th largest exponent of p).
    cuts = set()
    for _, runs in columns:
        pos = 0
        for _, m in runs:
            pos += m
            cuts.add(pos)
    torsion: list[list[int]] = []
    start = 0
    for end in sorted(cuts):
        factor = 1
        for p, runs in columns:
            pos = 0
            for e, m in runs:
                if start < pos + m:
                    factor *= p**e
                    break
                pos += m
        if torsion and torsion[-1][0] == factor:
            torsion[-1][1] += end - start
        else:
            torsion.append([factor, end - start])
        start = end
    return FgAbGroup(free_rank, tuple((f, m) for f, m in torsion))


def from_summands(free_rank: int, summands: Iterable[tuple[int, int]]) -> FgAbGroup:
    """Canonical form of ``Z^(free_rank) + sum of Z_order^(multiplicity)``.

    Summands may come in any order; orders equal to 1 and zero multiplicities
    are ignored, order 0 is an infinite cyclic summand.  Multiplicities are
    never expanded, so ``Z_2^(10**30)`` is cheap.
    """
    runs: dict[int, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for d, mult in summands:
        if d < 0 or mult < 0:
            raise ValueError(f"negative summand {(d, mult)}")
        if mult == 0 or d == 1:
            continue
        if d == 0:
            free_rank += mult
            continue
        for p, e in _factor(d):
            runs[p][e] += mult
    return _assemble(free_rank, runs)


def from_cyclic_orders(orders: Iterable[int]) -> FgAbGroup:
    """Canonical form of the direct sum of cyclic groups of the given orders.

    0 stands for Z and 1 for the trivial group.
    """
    return from_summands(0, ((d, 1) for d in orders))


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None):
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(out, other.cols)

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]


def smith_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(S, U, V)`` with ``S == U @ M @ V``.

    U and V are unimodular; S is diagonal with non-negative entries
    ``d_1 | d_2 | ...`` and any zeros after the nonzero chain.  The pivot is
    always the entry of least absolute value, ties broken by position.
    """
    m, n = M.rows, M.cols
    A = M.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst += q * row src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(
                A[t][j] for j in range(t + 1, n)
            ):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        if A[t][t] == 0:
            break

    return (
        IntMatrix.from_rows(A, n),
        IntMatrix.from_rows(U, m),
        IntMatrix.from_rows(V, n),
    )


def from_presentation(M: IntMatrix) -> FgAbGroup:
    """The group ``Z^cols / rowspace(M)``."""
    S, _, _ = smith_normal_form(M)
    diag = [d for d in S.diagonal() if d]
    return from_summands(M.cols - len(diag), ((d, 1) for d in diag))


def direct_sum(*groups: FgAbGroup) -> FgAbGroup:
    return from_summands(
        sum(g.free_rank for g in groups),
        (pair for g in groups for pair in g.torsion),
    )


def is_isomorphic(A: FgAbGroup, B: FgAbGroup) -> bool:
    return A == B


def primary_decomposition(A: FgAbGroup) -> dict[tuple[int, int], int]:
    """Map ``(p, e)`` to the number of ``Z_{p^e}`` summands of A."""
    table: dict[tuple[int, int], int] = defaultdict(int)
    for d, mult in A.torsion:
        for p, e in _factor(d):
            table[p, e] += mult
    return dict(table)


def is_direct_summand(A: FgAbGroup, B: FgAbGroup) -> bool:
    """True iff ``A + C`` is isomorphic to B for some C."""
    if A.free_rank > B.free_rank:
        return False
    pb = primary_decomposition(B)
    return all(pb.get(pe, 0) >= mult for pe, mult in primary_decomposition(A).items())


def order(A: FgAbGroup) -> int | float:
    """|A|, or ``math.inf`` when A has a free part."""
    if A.free_rank:
        return math.inf
    return math.prod(d**mult for d, mult in A.torsion)


def exponent(A: FgAbGroup) -> int | float:
    if A.free_rank:
        return math.inf
    return A.torsion[0][0] if A.torsion else 1


def is_elementary_abelian(A: FgAbGroup, p: int) -> bool:
    if A.free_rank:
        return False
    return all(d == p for d, _ in A.torsion) and (
        not A.torsion or len(_factor(p)) == 1 and _factor(p)[0][1] == 1
    )


def cyclic_orders(A: FgAbGroup) -> list[int]:
    """Expanded summand list: ``free_rank`` zeros, then n_1 >= n_2 >= ...

    Only for groups of modest size; multiplicities are materialized.
    """
    out = [0] * A.free_rank
    for d, mult in A.torsion:
        out.extend([d] * mult)
    return out
