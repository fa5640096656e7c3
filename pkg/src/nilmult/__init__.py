"""Exact c-nilpotent multipliers of finitely generated abelian groups and
their interaction with Hom, Ext, Tor and tensor products."""

from .errors import CapacityError, NilmultError, ParseError, ScopeError, VerificationError
from .fgab import (
    TRIVIAL,
    Z,
    FgAbGroup,
    IntMatrix,
    cyclic,
    direct_sum,
    from_cyclic_orders,
    from_presentation,
    is_direct_summand,
    is_isomorphic,
    smith_normal_form,
)
from .homalg import ext1, ext_n, hom, tensor, tor1, tor_n
from .commutators import BasicCommutator, MultiplierParams, hall_basis, tensor_T, witt_count
from .multiplier import (
    free_product_coprime_cyclic,
    free_product_n2,
    nilpotent_multiplier,
    schur_direct_product,
    schur_multiplier,
)
from .expr import parse_group

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "NilmultError",
    "ParseError",
    "ScopeError",
    "VerificationError",
    "TRIVIAL",
    "Z",
    "FgAbGroup",
    "IntMatrix",
    "cyclic",
    "direct_sum",
    "from_cyclic_orders",
    "from_presentation",
    "is_direct_summand",
    "is_isomorphic",
    "smith_normal_form",
    "ext1",
    "ext_n",
    "hom",
    "tensor",
    "tor1",
    "tor_n",
    "BasicCommutator",
    "MultiplierParams",
    "hall_basis",
    "tensor_T",
    "witt_count",
    "free_product_coprime_cyclic",
    "free_product_n2",
    "nilpotent_multiplier",
    "schur_direct_product",
    "schur_multiplier",
    "parse_group",
]
