"""Closed-form c-nilpotent multipliers of finitely generated abelian groups.

For ``G = Z^(n) + Z_{n_1} + ... + Z_{n_k}`` with ``n_{i+1} | n_i``::

    N_c M(G) = Z^(b_n) + Z_{n_1}^(b_{n+1} - b_n) + ... + Z_{n_k}^(b_{n+k} - b_{n+k-1})

where ``b_j`` counts basic commutators of weight c+1 on j letters.  Runs of
equal invariant factors collapse: a run at positions s..e contributes
``Z_f^(b_{n+e} - b_{n+s-1})``, so huge multiplicities cost nothing.

>>> from nilmult.fgab import from_cyclic_orders
>>> print(schur_multiplier(from_cyclic_orders([4, 4])))
Z4
>>> print(nilpotent_multiplier(from_cyclic_orders([0, 4]), 2))
Z4^2
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .commutators import MultiplierParams
from .errors import ScopeError
from .fgab import TRIVIAL, FgAbGroup, direct_sum, from_summands
from .homalg import tensor, tor1

__all__ = [
    "positional_sum",
    "nilpotent_multiplier",
    "schur_multiplier",
    "schur_direct_product",
    "schur_free_product",
    "free_product_n2",
    "free_product_n2_many",
    "free_product_coprime_cyclic",
]


def positional_sum(
    params: MultiplierParams, offset: int, entries: Iterable[tuple[int, int]]
) -> list[tuple[int, int]]:
    """Summands ``Z_{d_i}^(b_{offset+i} - b_{offset+i-1})`` for i = 1, 2, ...

    ``entries`` lists ``(d, run_length)`` in position order; each run is
    collapsed to one summand.  d may be 1 (contributes nothing).
    """
    out = []
    pos = offset
    for d, run in entries:
        mult = params.b(pos + run) - params.b(pos)
        if mult:
            out.append((d, mult))
        pos += run
    return out


def nilpotent_multiplier(G: FgAbGroup, c: int) -> FgAbGroup:
    """N_c M(G) for a finitely generated abelian G, any c >= 1."""
    params = MultiplierParams(c)
    n = G.free_rank
    return from_summands(params.b(n), positional_sum(params, n, G.torsion))


def schur_multiplier(G: FgAbGroup) -> FgAbGroup:
    return nilpotent_multiplier(G, 1)


def schur_direct_product(A: FgAbGroup, B: FgAbGroup) -> FgAbGroup:
    """M(A x B) = M(A) + M(B) + (A (x) B), abelian A and B."""
    return direct_sum(schur_multiplier(A), schur_multiplier(B), tensor(A, B))


def schur_free_product(A: FgAbGroup, B: FgAbGroup) -> FgAbGroup:
    """M(A * B) = M(A) + M(B)."""
    return direct_sum(schur_multiplier(A), schur_multiplier(B))


def free_product_n2(A: FgAbGroup, B: FgAbGroup) -> FgAbGroup:
    """N_2 M(A * B) for abelian free factors A, B.

    N_2M(A) + N_2M(B) + (M(A) (x) B) + (A (x) M(B)) + Tor_1(A, B).
    """
    return direct_sum(
        nilpotent_multiplier(A, 2),
        nilpotent_multiplier(B, 2),
        tensor(schur_multiplier(A), B),
        tensor(A, schur_multiplier(B)),
        tor1(A, B),
    )


def free_product_n2_many(factors: Sequence[FgAbGroup]) -> FgAbGroup:
    """N_2 M of a free product of several abelian groups.

    Folds the two-factor formula left to right.  The running free product
    P is not abelian, but the formula only needs N_2M(P), M(P) and P_ab,
    which are carried along: M(P * H) = M(P) + M(H) and
    (P * H)_ab = P_ab + H.
    """
    if not factors:
        return TRIVIAL
    first = factors[0]
    n2m, m, ab = nilpotent_multiplier(first, 2), schur_multiplier(first), first
    for H in factors[1:]:
        mh = schur_multiplier(H)
        n2m = direct_sum(
            n2m, nilpotent_multiplier(H, 2), tensor(m, H), tensor(ab, mh), tor1(ab, H)
        )
        m = direct_sum(m, mh)
        ab = direct_sum(ab, H)
    return n2m


def free_product_coprime_cyclic(orders: Sequence[int], c: int) -> FgAbGroup:
    """N_c M of a free product of cyclic groups of pairwise coprime orders.

    Equal to the direct sum of the factors' multipliers, each trivial.
    """
    MultiplierParams(c)
    if any(d < 2 for d in orders):
        raise ValueError(f"cyclic orders must be >= 2, got {list(orders)}")
    for i, a in enumerate(orders):
        for b in orders[i + 1 :]:
            if gcd(a, b) != 1:
                raise ScopeError(
                    f"orders {a} and {b} are not coprime; the multiplier does "
                    "not split over this free product (e.g. Z2 * Z2)"
                )
    return direct_sum(*(nilpotent_multiplier(from_summands(0, [(d, 1)]), c) for d in orders))
