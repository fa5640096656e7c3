"""Composites of N_cM(-) with Hom, Ext^1, Tor_1 and tensor by Z_m.

Each composite is evaluated three ways:

* ``closed_form``: the direct-sum formula written in terms of b_j,
* ``pipeline``: the functors chained literally, N_cM taken from the closed
  form for abelian groups,
* ``oracle_pipeline``: the same chain, with N_cM computed by enumerating
  basic commutators (``tensor_T``).  Only available within the Hall basis
  enumeration caps.

``check_commutation`` compares each composite with its partner (the functor
applied on the other side of N_cM) and raises ``VerificationError`` whenever
the three evaluations disagree or a commutation that must hold fails.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable, Iterator, Sequence

from .commutators import MAX_LETTERS, MAX_WEIGHT, MultiplierParams, tensor_T
from .errors import VerificationError
from .fgab import TRIVIAL, FgAbGroup, cyclic, cyclic_orders, from_summands
from .homalg import ext1, hom, tensor, tor1
from .multiplier import nilpotent_multiplier, positional_sum

__all__ = [
    "CompositionId",
    "CommutationReport",
    "CounterexampleReport",
    "closed_form",
    "pipeline",
    "oracle_pipeline",
    "partner_pipeline",
    "predicted_commutes",
    "check_commutation",
    "grid_groups",
    "counterexample_suite",
    "report",
    "sweep",
]


class CompositionId(enum.Enum):
    T34_I = "3.4(i)"
    T34_II = "3.4(ii)"
    T34_III = "3.4(iii)"
    T34_IV = "3.4(iv)"
    T34_V = "3.4(v)"
    T34_VI = "3.4(vi)"
    T36_I = "3.6(i)"
    T36_II = "3.6(ii)"
    T36_IV = "3.6(iv)"
    T36_V = "3.6(v)"

    @property
    def theorem(self) -> str:
        return self.value.split("(")[0]


CI = CompositionId

Multiplier = Callable[[FgAbGroup], FgAbGroup]

# Composite as a function of (Z_m, D, N) where N is a multiplier route.
_COMPOSITES: dict[CompositionId, Callable[[FgAbGroup, FgAbGroup, Multiplier], FgAbGroup]] = {
    CI.T34_I: lambda Zm, D, N: N(ext1(Zm, D)),
    CI.T34_II: lambda Zm, D, N: ext1(Zm, N(D)),
    CI.T34_III: lambda Zm, D, N: N(ext1(D, Zm)),
    CI.T34_IV: lambda Zm, D, N: ext1(N(D), Zm),
    CI.T34_V: lambda Zm, D, N: N(tor1(Zm, D)),
    CI.T34_VI: lambda Zm, D, N: tor1(Zm, N(D)),
    CI.T36_I: lambda Zm, D, N: N(hom(Zm, D)),
    CI.T36_II: lambda Zm, D, N: hom(Zm, N(D)),
    CI.T36_IV: lambda Zm, D, N: N(hom(D, Zm)),
    CI.T36_V: lambda Zm, D, N: N(tensor(Zm, D)),
}

_PARTNERS: dict[CompositionId, Callable[[FgAbGroup, FgAbGroup, Multiplier], FgAbGroup]] = {
    CI.T34_I: _COMPOSITES[CI.T34_II],
    CI.T34_II: _COMPOSITES[CI.T34_I],
    CI.T34_III: _COMPOSITES[CI.T34_IV],
    CI.T34_IV: _COMPOSITES[CI.T34_III],
    CI.T34_V: _COMPOSITES[CI.T34_VI],
    CI.T34_VI: _COMPOSITES[CI.T34_V],
    CI.T36_I: _COMPOSITES[CI.T36_II],
    CI.T36_II: _COMPOSITES[CI.T36_I],
    CI.T36_IV: lambda Zm, D, N: hom(N(D), Zm),
    CI.T36_V: lambda Zm, D, N: tensor(Zm, N(D)),
}

DESCRIPTIONS = {
    CI.T34_I: "NcM(Ext1(Zm, D))",
    CI.T34_II: "Ext1(Zm, NcM(D))",
    CI.T34_III: "NcM(Ext1(D, Zm))",
    CI.T34_IV: "Ext1(NcM(D), Zm)",
    CI.T34_V: "NcM(Tor1(Zm, D))",
    CI.T34_VI: "Tor1(Zm, NcM(D))",
    CI.T36_I: "NcM(Hom(Zm, D))",
    CI.T36_II: "Hom(Zm, NcM(D))",
    CI.T36_IV: "NcM(Hom(D, Zm))",
    CI.T36_V: "NcM(Zm (x) D)",
}


def _check_args(id, m: int, c: int):
    if not isinstance(id, CompositionId):
        raise ValueError(f"unknown composition {id!r}")
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    MultiplierParams(c)


def closed_form(id: CompositionId, m: int, c: int, D: FgAbGroup) -> FgAbGroup:
    """Direct-sum formula for the composite ``id`` at (m, c, D).

    With ``D = Z^(n) + Z_{n_1} + ... + Z_{n_k}``, every value is a head of
    ``Z_m^(b_n)`` (or nothing) followed by ``Z_{(n_i, m)}`` summands whose
    multiplicities are b-differences starting at position ``n`` or ``0``.
    Since ``(m, n_{i+1}) | (m, n_i) | m`` the positions never need re-sorting.
    """
    _check_args(id, m, c)
    params = MultiplierParams(c)
    n = D.free_rank
    reduced = [(gcd(d, m), mult) for d, mult in D.torsion]
    if id in (CI.T34_I, CI.T34_II, CI.T36_IV, CI.T36_V):
        # Z_m^(b_n) + sum_{i=1..k} Z_(n_i,m)^(b_{n+i} - b_{n+i-1})
        summands = [(m, params.b(n))] + positional_sum(params, n, reduced)
    elif id in (CI.T34_III, CI.T34_V, CI.T36_I):
        # sum_{i=2..k} Z_(n_i,m)^(b_i - b_{i-1}); the i=1 term has b_1 - b_0 = 0
        summands = positional_sum(params, 0, reduced)
    else:
        # sum_{i=1..k} Z_(n_i,m)^(b_{n+i} - b_{n+i-1})
        summands = positional_sum(params, n, reduced)
    return from_summands(0, summands)


def _closed_multiplier(c: int) -> Multiplier:
    return lambda G: nilpotent_multiplier(G, c)


def _oracle_multiplier(c: int) -> Multiplier:
    return lambda G: tensor_T(cyclic_orders(G), c + 1)


def _oracle_fits(G: FgAbGroup, c: int) -> bool:
    return G.free_rank + G.num_invariant_factors <= MAX_LETTERS and c + 1 <= MAX_WEIGHT


def pipeline(id: CompositionId, m: int, c: int, D: FgAbGroup) -> FgAbGroup:
    """The composite evaluated by chaining functors, without the closed form."""
    _check_args(id, m, c)
    return _COMPOSITES[id](cyclic(m), D, _closed_multiplier(c))


def partner_pipeline(id: CompositionId, m: int, c: int, D: FgAbGroup) -> FgAbGroup:
    """The composite with the functor moved to the other side of N_cM."""
    _check_args(id, m, c)
    return _PARTNERS[id](cyclic(m), D, _closed_multiplier(c))


def oracle_pipeline(id: CompositionId, m: int, c: int, D: FgAbGroup) -> FgAbGroup | None:
    """Like ``pipeline`` but N_cM comes from basic-commutator enumeration.

    Returns None when some group fed to N_cM has more cyclic summands than
    the enumeration supports.
    """
    _check_args(id, m, c)
    oracle = _oracle_multiplier(c)
    too_big = False

    def guarded(G):
        nonlocal too_big
        if not _oracle_fits(G, c):
            too_big = True
            return TRIVIAL
        return oracle(G)

    value = _COMPOSITES[id](cyclic(m), D, guarded)
    return None if too_big else value


def predicted_commutes(id: CompositionId, D: FgAbGroup) -> bool:
    """Whether the composite is claimed isomorphic to its partner.

    Ext^1(Z_m, -), Hom(-, Z_m) and Z_m (x) - commute with N_cM on every
    finitely generated D; Tor_1(Z_m, -), Ext^1(-, Z_m) and Hom(Z_m, -) only
    on finite D.
    """
    if id in (CI.T34_I, CI.T34_II, CI.T36_IV, CI.T36_V):
        return True
    return D.is_finite


@dataclass(frozen=True)
class CommutationReport:
    id: CompositionId
    m: int
    c: int
    D: FgAbGroup
    lhs: FgAbGroup
    rhs_closed_form: FgAbGroup
    pipeline: FgAbGroup | None
    partner: FgAbGroup
    commutes_with_partner: bool
    predicted: bool

    @property
    def consistent(self) -> bool:
        """Closed form, chained evaluation and (when run) oracle agree."""
        return self.lhs == self.rhs_closed_form and (
            self.pipeline is None or self.pipeline == self.lhs
        )

    @property
    def matches_prediction(self) -> bool:
        return self.commutes_with_partner == self.predicted

    def to_json(self) -> dict:
        return {
            "id": self.id.value,
            "composite": DESCRIPTIONS[self.id],
            "m": self.m,
            "c": self.c,
            "D": str(self.D),
            "lhs": str(self.lhs),
            "rhs_closed_form": str(self.rhs_closed_form),
            "pipeline": None if self.pipeline is None else str(self.pipeline),
            "partner": str(self.partner),
            "commutes_with_partner": self.commutes_with_partner,
            "predicted": self.predicted,
        }

    def __str__(self):
        verdict = "commutes" if self.commutes_with_partner else "does not commute"
        return (
            f"{self.id.value:9} m={self.m} c={self.c} D={self.D}: "
            f"{DESCRIPTIONS[self.id]} = {self.lhs}, partner = {self.partner} ({verdict})"
        )


def report(id: CompositionId, m: int, c: int, D: FgAbGroup, oracle: bool = True) -> CommutationReport:
    lhs = pipeline(id, m, c, D)
    partner = partner_pipeline(id, m, c, D)
    return CommutationReport(
        id=id,
        m=m,
        c=c,
        D=D,
        lhs=lhs,
        rhs_closed_form=closed_form(id, m, c, D),
        pipeline=oracle_pipeline(id, m, c, D) if oracle else None,
        partner=partner,
        commutes_with_partner=lhs == partner,
        predicted=predicted_commutes(id, D),
    )


def check_commutation(
    m: int,
    c: int,
    D: FgAbGroup,
    ids: Iterable[CompositionId] = tuple(CompositionId),
    oracle: bool = True,
) -> list[CommutationReport]:
    """Reports for every composite at (m, c, D).

    Raises VerificationError if any evaluation routes disagree, or if a
    commutation predicted to hold fails.  A predicted non-commutation that
    does commute is recorded but not an error: for infinite D the claim is
    existential (Z + Z2 with odd m gives trivial groups on both sides).
    """
    reports = sorted(
        (report(id, m, c, D, oracle) for id in ids), key=lambda r: r.id.value
    )
    for r in reports:
        if not r.consistent:
            raise VerificationError(
                f"{r.id.value} at m={m}, c={c}, D={D}: closed form "
                f"{r.rhs_closed_form}, chained {r.lhs}, oracle {r.pipeline}"
            )
        if r.predicted and not r.commutes_with_partner:
            raise VerificationError(
                f"{r.id.value} at m={m}, c={c}, D={D}: expected to commute but "
                f"{DESCRIPTIONS[r.id]} = {r.lhs} vs partner {r.partner}"
            )
    return reports


def _chains(max_len: int, max_factor: int) -> Iterator[tuple[int, ...]]:
    def extend(chain):
        yield chain
        if len(chain) == max_len:
            return
        top = chain[-1] if chain else max_factor
        for d in range(2, top + 1):
            if chain and top % d:
                continue
            yield from extend(chain + (d,))

    yield from extend(())


def grid_groups(
    max_free_rank: int = 2, max_factors: int = 3, max_factor: int = 12
) -> list[FgAbGroup]:
    """Every canonical group with free rank <= ``max_free_rank`` and at most
    ``max_factors`` invariant factors, the largest <= ``max_factor``."""
    groups = []
    for n in range(max_free_rank + 1):
        for chain in _chains(max_factors, max_factor):
            groups.append(from_summands(n, ((d, 1) for d in chain)))
    return groups


@dataclass(frozen=True)
class CounterexampleReport:
    label: str
    description: str
    lhs: FgAbGroup
    rhs: FgAbGroup
    expected_lhs: FgAbGroup
    expected_rhs: FgAbGroup

    @property
    def isomorphic(self) -> bool:
        return self.lhs == self.rhs

    @property
    def reproduced(self) -> bool:
        return (
            self.lhs == self.expected_lhs
            and self.rhs == self.expected_rhs
            and not self.isomorphic
        )

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "description": self.description,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "expected_lhs": str(self.expected_lhs),
            "expected_rhs": str(self.expected_rhs),
            "isomorphic": self.isomorphic,
            "reproduced": self.reproduced,
        }

    def __str__(self):
        mark = "ok" if self.reproduced else "MISMATCH"
        return f"({self.label}) {self.description}: {self.lhs} vs {self.rhs} [{mark}]"


def counterexample_suite(n: int, c: int, multiplier: Multiplier | None = None) -> list[CounterexampleReport]:
    """Non-commutation examples for non-cyclic A, evaluated by chaining.

    (a)-(e) use Z_n and Z_n + Z_n; (f) and (g) use fixed groups.  Each lhs is
    expected to be ``Z_d^(b_2)`` and each rhs trivial.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    params = MultiplierParams(c)
    N = multiplier or _closed_multiplier(c)
    Zn = cyclic(n)
    A = from_summands(0, [(n, 2)])
    b2 = params.b(2)

    def expect(d):
        return from_summands(0, [(d, b2)])

    G14_2 = from_summands(0, [(14, 1), (2, 1)])
    G6_3 = from_summands(0, [(6, 1), (3, 1)])
    G6_2 = from_summands(0, [(6, 1), (2, 1)])
    G9_3 = from_summands(0, [(9, 1), (3, 1)])
    rows = [
        ("a", f"NcM(Ext1(Z{n}+Z{n}, Z{n})) vs Ext1(Z{n}+Z{n}, NcM(Z{n}))",
         N(ext1(A, Zn)), ext1(A, N(Zn)), expect(n)),
        ("b", f"NcM(Ext1(Z{n}, Z{n}+Z{n})) vs Ext1(NcM(Z{n}), Z{n}+Z{n})",
         N(ext1(Zn, A)), ext1(N(Zn), A), expect(n)),
        ("c", f"NcM(Tor1(Z{n}+Z{n}, Z{n})) vs Tor1(Z{n}+Z{n}, NcM(Z{n}))",
         N(tor1(A, Zn)), tor1(A, N(Zn)), expect(n)),
        ("d", f"NcM((Z{n}+Z{n}) (x) Z{n}) vs (Z{n}+Z{n}) (x) NcM(Z{n})",
         N(tensor(A, Zn)), tensor(A, N(Zn)), expect(n)),
        ("e", f"NcM(Hom(Z{n}+Z{n}, Z{n})) vs Hom(Z{n}+Z{n}, NcM(Z{n}))",
         N(hom(A, Zn)), hom(A, N(Zn)), expect(n)),
        ("f", "NcM(Hom(Z14+Z2, Z6+Z3)) vs Hom(Z14+Z2, NcM(Z6+Z3))",
         N(hom(G14_2, G6_3)), hom(G14_2, N(G6_3)), expect(2)),
        ("g", "NcM(Hom(Z6+Z2, Z9+Z3)) vs Hom(NcM(Z6+Z2), Z9+Z3)",
         N(hom(G6_2, G9_3)), hom(N(G6_2), G9_3), expect(3)),
    ]
    return [
        CounterexampleReport(label, desc, lhs, rhs, exp, TRIVIAL)
        for label, desc, lhs, rhs, exp in rows
    ]


def sweep(
    ids: Sequence[CompositionId],
    ms: Iterable[int],
    cs: Iterable[int],
    groups: Iterable[FgAbGroup],
    oracle: bool = True,
) -> list[CommutationReport]:
    """``check_commutation`` over a product grid; raises on the first failure."""
    groups = list(groups)
    out = []
    for m, c in itertools.product(list(ms), list(cs)):
        for D in groups:
            out.extend(check_commutation(m, c, D, ids, oracle))
    return out
