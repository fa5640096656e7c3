import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilmult.commutators import tensor_T, witt_count
from nilmult.compositions import grid_groups
from nilmult.errors import ScopeError
from nilmult.fgab import (
    TRIVIAL,
    Z,
    cyclic,
    cyclic_orders,
    direct_sum,
    free,
    from_cyclic_orders,
    from_summands,
    is_direct_summand,
    is_elementary_abelian,
    order,
)
from nilmult.homalg import tensor, tor1
from nilmult.multiplier import (
    free_product_coprime_cyclic,
    free_product_n2,
    free_product_n2_many,
    nilpotent_multiplier,
    schur_direct_product,
    schur_free_product,
    schur_multiplier,
)


def G(*orders):
    return from_cyclic_orders(orders)


class TestNilpotentMultiplier:
    @pytest.mark.parametrize("c", [1, 2, 3, 7])
    def test_cyclic_is_trivial(self, c):
        assert nilpotent_multiplier(cyclic(2), c) == TRIVIAL
        assert nilpotent_multiplier(Z, c) == TRIVIAL

    def test_z4_z4_schur(self):
        assert nilpotent_multiplier(G(4, 4), 1) == cyclic(4)

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    @pytest.mark.parametrize("c", [1, 2, 3])
    def test_elementary_abelian(self, p, k, c):
        M = nilpotent_multiplier(from_summands(0, [(p, k)]), c)
        assert is_elementary_abelian(M, p)
        assert order(M) == p ** witt_count(k, c + 1)

    def test_z_plus_z4_class_two(self):
        assert tensor_T([Z, cyclic(4)], 3) == G(4, 4)
        assert nilpotent_multiplier(G(0, 4), 2) == G(4, 4)

    def test_free_abelian(self):
        for n in range(6):
            for c in range(1, 5):
                assert nilpotent_multiplier(free(n), c) == free(witt_count(n, c + 1))

    def test_rejects_c0(self):
        with pytest.raises(ValueError):
            nilpotent_multiplier(G(2, 2), 0)

    def test_huge_multiplicity(self):
        # Z2^(10^6): b_k for weight 2 is k(k-1)/2
        k = 10**6
        assert nilpotent_multiplier(from_summands(0, [(2, k)]), 1) == from_summands(
            0, [(2, k * (k - 1) // 2)]
        )

    def test_against_oracle_small(self):
        for D in grid_groups(1, 2, 8):
            for c in (1, 2):
                assert nilpotent_multiplier(D, c) == tensor_T(cyclic_orders(D), c + 1), D


class TestSchur:
    def test_schur_multiplier(self):
        assert schur_multiplier(G(4, 4)) == cyclic(4)
        assert schur_multiplier(free(2)) == tensor_T([Z, Z], 2) == Z
        assert schur_multiplier(cyclic(9)) == TRIVIAL

    def test_direct_product(self):
        assert schur_direct_product(cyclic(4), cyclic(4)) == cyclic(4)
        assert schur_direct_product(G(6, 2), TRIVIAL) == schur_multiplier(G(6, 2))
        assert schur_direct_product(cyclic(2), G(2, 2)) == G(2, 2, 2)
        assert tensor_T([2, 2, 2], 2) == G(2, 2, 2)

    def test_direct_product_consistent_with_closed_form(self):
        groups = grid_groups(1, 2, 6)
        for A, B in itertools.product(groups, groups):
            assert schur_direct_product(A, B) == schur_multiplier(direct_sum(A, B))

    def test_free_product(self):
        assert schur_free_product(cyclic(2), cyclic(2)) == TRIVIAL
        assert schur_free_product(G(4, 4), G(0, 0)) == G(4, 0)


class TestFreeProducts:
    def test_infinite_dihedral(self):
        assert free_product_n2(cyclic(2), cyclic(2)) == cyclic(2)
        assert direct_sum(nilpotent_multiplier(cyclic(2), 2), nilpotent_multiplier(cyclic(2), 2)) == TRIVIAL

    @pytest.mark.parametrize("a,b", [(2, 3), (4, 9), (5, 7), (8, 15)])
    def test_coprime_pairs_trivial(self, a, b):
        assert free_product_n2(cyclic(a), cyclic(b)) == TRIVIAL
        assert free_product_coprime_cyclic([a, b], 2) == TRIVIAL

    def test_z4_z6(self):
        assert tor1(cyclic(4), cyclic(6)) == cyclic(2)
        assert free_product_n2(cyclic(4), cyclic(6)) == cyclic(2)

    def test_coprime_cyclic(self):
        assert free_product_coprime_cyclic([2, 3, 5], 2) == TRIVIAL
        assert free_product_coprime_cyclic([7], 4) == TRIVIAL
        with pytest.raises(ScopeError):
            free_product_coprime_cyclic([2, 2], 2)
        with pytest.raises(ScopeError):
            free_product_coprime_cyclic([6, 5, 9], 1)

    def test_many_reduces_to_pair(self):
        groups = grid_groups(1, 2, 6)[:25]
        for A, B in itertools.product(groups, groups):
            assert free_product_n2_many([A, B]) == free_product_n2(A, B)
        assert free_product_n2_many([]) == TRIVIAL
        assert free_product_n2_many([G(0, 0)]) == nilpotent_multiplier(G(0, 0), 2)

    def test_coprime_family_trivial_by_fold(self):
        assert free_product_n2_many([cyclic(2), cyclic(3), cyclic(5), cyclic(7)]) == TRIVIAL


def _pair(P, Q):
    # (N_2M, M, ab) of P * Q from the same data of P and Q
    n2p, mp, ap = P
    n2q, mq, aq = Q
    return (
        direct_sum(n2p, n2q, tensor(mp, aq), tensor(ap, mq), tor1(ap, aq)),
        direct_sum(mp, mq),
        direct_sum(ap, aq),
    )


def _data(A):
    return (nilpotent_multiplier(A, 2), schur_multiplier(A), A)


small_groups = st.lists(st.sampled_from([0, 2, 3, 4, 6]), max_size=2).map(from_cyclic_orders)


@settings(max_examples=50)
@given(small_groups, small_groups, small_groups)
def test_free_product_formula_associative(A, B, C):
    left = _pair(_pair(_data(A), _data(B)), _data(C))
    right = _pair(_data(A), _pair(_data(B), _data(C)))
    assert left == right
    assert left[0] == free_product_n2_many([A, B, C])


def test_direct_summand_of_larger_sum():
    groups = grid_groups(1, 2, 6)
    for T, N in itertools.product(groups, groups):
        for c in (1, 2, 3):
            assert is_direct_summand(
                nilpotent_multiplier(T, c), nilpotent_multiplier(direct_sum(T, N), c)
            )
