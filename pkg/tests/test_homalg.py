from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brute import (
    finite_groups_up_to,
    hom_profile,
    profile_from_counts,
    quotient_profile,
    tensor_relations,
    torsion_subgroup_profile,
)
from nilmult.fgab import (
    TRIVIAL,
    Z,
    IntMatrix,
    cyclic,
    cyclic_orders,
    direct_sum,
    free,
    from_cyclic_orders,
    from_presentation,
    order,
)
from nilmult.homalg import ext1, ext_n, hom, tensor, tor1, tor_n


def G(*orders):
    return from_cyclic_orders(orders)


def brute_tensor(a, b):
    rows, n = tensor_relations(a, b)
    return from_presentation(IntMatrix.from_rows(rows, n))


class TestTensor:
    def test_examples(self):
        assert tensor(cyclic(4), cyclic(6)) == cyclic(2)
        assert tensor(free(2), cyclic(3)) == G(3, 3)
        assert tensor(Z, Z) == Z

    def test_klein_with_z2_by_bilinear_presentation(self):
        assert brute_tensor([2, 2], [2]) == G(2, 2)
        assert tensor(G(2, 2), cyclic(2)) == G(2, 2)

    @pytest.mark.parametrize("a,b", [([4], [6]), ([2], [2, 2, 2]), ([3, 3], [6]), ([4, 2], [4])])
    def test_against_bilinear_presentation(self, a, b):
        assert tensor(G(*a), G(*b)) == brute_tensor(a, b)


class TestHom:
    def test_examples(self):
        assert hom(cyclic(5), Z) == TRIVIAL
        assert hom(Z, cyclic(5)) == cyclic(5)
        assert hom(Z, Z) == Z

    def test_hom_z6z2_to_z9z3(self):
        size, prof = hom_profile([6, 2], [9, 3])
        assert size == 9
        result = hom(G(6, 2), G(9, 3))
        assert result == G(3, 3)
        assert prof == profile_from_counts(cyclic_orders(result), 9)

    @pytest.mark.parametrize("a,b", [([4], [6]), ([2, 2], [4]), ([6], [4, 2]), ([3], [2])])
    def test_against_enumeration(self, a, b):
        size, prof = hom_profile(a, b)
        result = hom(G(*a), G(*b))
        assert order(result) == size
        exp = max(prof)
        assert prof == profile_from_counts(cyclic_orders(result), exp)


class TestExt1:
    def test_examples(self):
        assert ext1(cyclic(6), Z) == cyclic(6)
        assert ext1(Z, G(0, 4, 2)) == TRIVIAL
        assert ext1(cyclic(4), cyclic(6)) == cyclic(2)

    def test_quotient_oracle(self):
        index, prof = quotient_profile([6], 4)
        assert index == 2
        assert prof == profile_from_counts(cyclic_orders(ext1(cyclic(4), cyclic(6))), 6)


class TestTor1:
    def test_examples(self):
        assert tor1(cyclic(2), cyclic(2)) == cyclic(2)
        assert tor1(cyclic(7), Z) == TRIVIAL
        assert tor1(cyclic(4), cyclic(6)) == cyclic(2)

    def test_killed_by_m(self):
        size, prof = torsion_subgroup_profile([6], 4)
        assert size == 2 == order(tor1(cyclic(4), cyclic(6)))


class TestHigher:
    def test_vanish(self):
        assert ext_n(cyclic(4), cyclic(6), 2) == TRIVIAL
        assert tor_n(Z, Z, 5) == TRIVIAL
        assert ext_n(TRIVIAL, TRIVIAL, 3) == TRIVIAL

    @pytest.mark.parametrize("f", [ext_n, tor_n])
    def test_low_degree_rejected(self, f):
        with pytest.raises(ValueError):
            f(Z, Z, 1)


def test_lemma_brute_force_small():
    """B/mB and B[m] for every finite B with |B| <= 24 and m <= 6."""
    for chain in finite_groups_up_to(24):
        B = G(*chain)
        exp = max(chain) if chain else 1
        for m in range(1, 7):
            _, qprof = quotient_profile(list(chain), m)
            assert qprof == profile_from_counts(cyclic_orders(ext1(cyclic(m), B)), exp)
            size, tprof = torsion_subgroup_profile(list(chain), m)
            assert size == order(tor1(cyclic(m), B))
            assert tprof == profile_from_counts(cyclic_orders(tor1(cyclic(m), B)), exp)


# -- laws -------------------------------------------------------------------

groups_st = st.lists(st.integers(0, 24), max_size=4).map(from_cyclic_orders)
finite_st = st.lists(st.integers(1, 24), max_size=4).map(from_cyclic_orders)


@given(groups_st, groups_st)
def test_symmetry(a, b):
    assert tensor(a, b) == tensor(b, a)
    assert tor1(a, b) == tor1(b, a)


@given(finite_st, finite_st)
def test_ext_symmetric_on_finite(a, b):
    assert ext1(a, b) == ext1(b, a)


def test_ext_asymmetric_with_free():
    for m in range(2, 10):
        assert ext1(cyclic(m), Z) == cyclic(m)
        assert ext1(Z, cyclic(m)) == TRIVIAL


@given(groups_st, groups_st, groups_st)
def test_additivity(a, b, c):
    for f in (tensor, hom, ext1, tor1):
        assert f(direct_sum(a, b), c) == direct_sum(f(a, c), f(b, c))
        assert f(c, direct_sum(a, b)) == direct_sum(f(c, a), f(c, b))


@given(groups_st)
def test_units(a):
    assert tensor(a, TRIVIAL) == TRIVIAL
    assert tensor(a, Z) == a
    assert hom(Z, a) == a


@given(st.integers(1, 30), st.lists(st.integers(0, 30), max_size=5))
def test_ext_closed_form(m, orders):
    B = from_cyclic_orders(orders)
    expected = from_cyclic_orders(
        [m] * B.free_rank + [gcd(d, m) for d in cyclic_orders(B) if d]
    )
    assert ext1(cyclic(m), B) == expected
