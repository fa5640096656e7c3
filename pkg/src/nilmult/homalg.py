"""Tensor, Hom, Ext and Tor over Z for finitely generated abelian groups.

Every functor here is additive in each argument, so it is evaluated on
pairs of cyclic summands and summed.  The base cases form a complete
table over {Z, Z_d} x {Z, Z_d}; Z never enters a gcd.

>>> from nilmult.fgab import cyclic
>>> print(tor1(cyclic(4), cyclic(6)))
Z2
>>> print(ext1(cyclic(6), cyclic(0)))
Z6
"""

from __future__ import annotations

from math import gcd

from .fgab import TRIVIAL, FgAbGroup, from_summands

__all__ = ["tensor", "hom", "ext1", "tor1", "ext_n", "tor_n"]


def _bilinear(A: FgAbGroup, B: FgAbGroup, zz, zd, dz, dd) -> FgAbGroup:
    # zz/zd/dz/dd give the cyclic order (0 = Z, 1 = trivial) of the functor on
    # Z x Z, Z x Z_b, Z_a x Z and Z_a x Z_b respectively.
    free_rank = 0
    summands: list[tuple[int, int]] = []

    def add(d, mult):
        nonlocal free_rank
        if d == 0:
            free_rank += mult
        else:
            summands.append((d, mult))

    add(zz, A.free_rank * B.free_rank)
    for b, mb in B.torsion:
        add(zd(b), A.free_rank * mb)
    for a, ma in A.torsion:
        add(dz(a), ma * B.free_rank)
        for b, mb in B.torsion:
            add(dd(a, b), ma * mb)
    return from_summands(free_rank, summands)


def tensor(A: FgAbGroup, B: FgAbGroup) -> FgAbGroup:
    """A (x) B."""
    return _bilinear(A, B, 0, lambda b: b, lambda a: a, gcd)


def hom(A: FgAbGroup, B: FgAbGroup) -> FgAbGroup:
    """Hom(A, B); Hom(Z_a, Z) vanishes."""
    return _bilinear(A, B, 0, lambda b: b, lambda a: 1, gcd)


def ext1(A: FgAbGroup, B: FgAbGroup) -> FgAbGroup:
    """Ext^1(A, B).

    Z is projective so only torsion of A contributes; Ext^1(Z_a, B) is B/aB,
    with Z/aZ = Z_a and Z_b/aZ_b = Z_(a,b).
    """
    return _bilinear(A, B, 1, lambda b: 1, lambda a: a, gcd)


def tor1(A: FgAbGroup, B: FgAbGroup) -> FgAbGroup:
    """Tor_1(A, B); Tor_1(Z_a, B) is the a-torsion B[a]."""
    return _bilinear(A, B, 1, lambda b: 1, lambda a: 1, gcd)


def ext_n(A: FgAbGroup, B: FgAbGroup, n: int) -> FgAbGroup:
    """Ext^n over Z for n >= 2, always zero (Z has global dimension 1)."""
    if n < 2:
        raise ValueError(f"ext_n needs n >= 2, got {n}; use hom or ext1")
    return TRIVIAL


def tor_n(A: FgAbGroup, B: FgAbGroup, n: int) -> FgAbGroup:
    if n < 2:
        raise ValueError(f"tor_n needs n >= 2, got {n}; use tensor or tor1")
    return TRIVIAL
