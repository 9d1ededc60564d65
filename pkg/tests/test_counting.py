"""Tests for pgroupcount.core.counting module."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pgroupcount.common.errors import PartitionError
from pgroupcount.core.bigpoly import ONE, ZERO, IntPoly, P, poly_eval, poly_shape, poly_sum
from pgroupcount.core.counting import (
    alpha_order,
    alpha_rs,
    alpha_rs_multinomial,
    butler_alpha,
    chain_count_indices,
    chain_count_types,
    conjugate_product,
    gl_order,
    group_orders,
    identity_rhs,
    identity_terms,
    lemma_sides,
    order_profile,
    partition_chains,
    total_count,
)
from pgroupcount.core.partitions import PaddedPartition, Partition, enum_padded, partitions_of
from pgroupcount.core.qbinomial import pbinom
from tests.strategies import padded_partitions


def lam(*parts):
    return Partition(parts)


def padded(*parts):
    return PaddedPartition(parts)


class TestIdentity:
    """Test the partition sum for binom(n, k)_p."""

    def test_n4_k1(self):
        """Test the two terms for n = 4, k = 1: 1 + p and p^2 (1 + p)."""
        terms = list(identity_terms(4, 1))
        assert [t[0] for t in terms] == [lam(2, 2, 1), lam(2, 1, 1, 1)]
        assert terms[0][1] == 1 + P
        assert terms[1][1] == P**2 * (1 + P)
        assert identity_rhs(4, 1) == IntPoly([1, 1, 1, 1])
        assert identity_rhs(4, 1) == (1 + P**2) * pbinom(2, 1)

    @pytest.mark.parametrize("k", range(0, 7))
    def test_k_plus_2(self, k):
        """Test the n = k + 2 family."""
        assert identity_rhs(k + 2, k) == pbinom(k + 2, k)

    @pytest.mark.parametrize("k", range(0, 7))
    def test_k_plus_3(self, k):
        """Test the n = k + 3 family."""
        assert identity_rhs(k + 3, k) == pbinom(k + 3, k)

    def test_edges(self):
        """Test k = n, k = 0 and out-of-range k."""
        assert identity_rhs(5, 5) == ONE
        assert identity_rhs(5, 0) == ONE
        assert identity_rhs(0, 0) == ONE
        assert identity_rhs(3, 4) == ZERO
        assert identity_rhs(3, -1) == ZERO

    def test_sweep(self):
        """Test every 0 <= k <= n <= 12."""
        cases = [(n, k) for n in range(13) for k in range(n + 1)]
        assert len(cases) == 91
        for n, k in cases:
            assert identity_rhs(n, k) == pbinom(n, k), (n, k)


class TestAlphaRS:
    """Test the sublattice count by quotient type."""

    @pytest.mark.parametrize(
        "parts, expected",
        [
            ((1, 0), 1 + P),
            ((2, 0), P + P**2),
            ((1, 1), ONE),
            ((0, 0), ONE),
            ((3,), ONE),
            ((1, 0, 0), 1 + P + P**2),
            ((2, 1, 0), P * (1 + P) * (1 + P + P**2)),
        ],
    )
    def test_values(self, parts, expected):
        """Test hand-computed counts."""
        assert alpha_rs(padded(*parts)) == expected

    def test_eval(self):
        """Test (2, 0) at p = 2 gives 6."""
        assert poly_eval(alpha_rs(padded(2, 0)), 2) == 6

    def test_t_zero_with_zero_part(self):
        """Test t = 0 is refused when a part is zero."""
        with pytest.raises(PartitionError):
            alpha_rs(padded(2, 0), 0)

    @given(padded_partitions(), st.integers(min_value=1, max_value=4))
    def test_t_invariant(self, padded_lam, t):
        """Test the answer does not depend on t."""
        assert alpha_rs(padded_lam, t) == alpha_rs(padded_lam, 1)

    def test_t_zero_positive_parts(self):
        """Test t = 0 is accepted and agrees when every part is positive."""
        assert alpha_rs(padded(3, 1, 1), 0) == alpha_rs(padded(3, 1, 1))

    @given(padded_partitions())
    def test_multinomial_form(self, padded_lam):
        """Test the coset form agrees symbolically."""
        assert alpha_rs_multinomial(padded_lam) == alpha_rs(padded_lam)

    @given(padded_partitions())
    def test_shape(self, padded_lam):
        """Test nonnegative, unimodal and symmetric after removing the power of p."""
        poly = alpha_rs(padded_lam)
        assert all(c >= 0 for c in poly.coeffs)
        shape = poly_shape(poly)
        assert shape.is_unimodal
        assert shape.is_symmetric

    @pytest.mark.parametrize("s", range(1, 6))
    def test_types_partition_total(self, s):
        """Test the counts over every type of weight r sum to binom(r + s - 1, s - 1)."""
        for r in range(9):
            assert poly_sum(alpha_rs(x) for x in enum_padded(r, s)) == total_count(r, s), (r, s)

    def test_total_count(self):
        """Test index p sublattices of Z^2."""
        assert total_count(1, 2) == 1 + P
        assert total_count(0, 4) == ONE
        assert total_count(5, 1) == ONE


class TestConjugateProduct:
    """Test the shared product."""

    def test_empty(self):
        """Test the empty partition gives one."""
        assert conjugate_product(Partition()) == ONE

    def test_single_column(self):
        """Test (1, 1, 1) gives one."""
        assert conjugate_product(lam(1, 1, 1)) == ONE


class TestLemma:
    """Test the exponent identity."""

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_sweep(self, t):
        """Test both sides agree for r <= 10, s <= 6."""
        for s in range(1, 7):
            for r in range(11):
                for x in enum_padded(r, s):
                    lhs, rhs = lemma_sides(x, t)
                    assert lhs == rhs, (x, t)

    def test_example(self):
        """Test (2, 0): both sides are 1."""
        assert lemma_sides(padded(2, 0)) == (1, 1)

    def test_rejects_t_zero(self):
        """Test t must be positive."""
        with pytest.raises(PartitionError):
            lemma_sides(padded(1, 1), 0)


class TestButler:
    """Test subgroup counts by type."""

    @pytest.mark.parametrize(
        "group, sub, expected",
        [
            ((2,), (1,), ONE),
            ((1, 1), (1,), 1 + P),
            ((2, 1), (1,), 1 + P),
            ((2, 1), (1, 1), ONE),
            ((2, 1), (2,), P),
            ((1, 1, 1), (1,), 1 + P + P**2),
            ((1, 1, 1), (1, 1), 1 + P + P**2),
        ],
    )
    def test_values(self, group, sub, expected):
        """Test hand-computed counts."""
        assert butler_alpha(lam(*group), lam(*sub)) == expected

    @given(padded_partitions(max_length=4, max_part=4))
    def test_trivial_and_whole(self, padded_lam):
        """Test the trivial subgroup and the whole group are unique."""
        group = padded_lam.stripped()
        assert butler_alpha(group, Partition()) == ONE
        assert butler_alpha(group, group) == ONE

    def test_not_contained(self):
        """Test zero when mu does not fit."""
        assert butler_alpha(lam(2, 1), lam(3)) == ZERO
        assert butler_alpha(lam(2, 1), lam(1, 1, 1)) == ZERO

    def test_order_counts(self):
        """Test subgroups of each order in Z/p^2 x Z/p."""
        assert order_profile(lam(2, 1)) == [ONE, 1 + P, 1 + P, ONE]
        assert alpha_order(lam(2, 1), 4) == ZERO
        assert alpha_order(lam(2, 1), -1) == ZERO

    def test_cyclic(self):
        """Test a cyclic group has one subgroup per order."""
        assert order_profile(lam(2)) == [ONE, ONE, ONE]

    @pytest.mark.parametrize("weight", range(0, 5))
    def test_shape(self, weight):
        """Test Butler counts are unimodal and symmetric up to a power of p."""
        for group in partitions_of(weight):
            for k in range(weight + 1):
                for sub in partitions_of(k, len(group)):
                    poly = butler_alpha(group, sub)
                    if poly:
                        shape = poly_shape(poly)
                        assert shape.is_unimodal and shape.is_symmetric, (group, sub)


class TestChains:
    """Test chain counts."""

    def test_empty_chain(self):
        """Test the empty chain counts once."""
        assert chain_count_types([], 3) == ONE
        assert chain_count_indices([], 3) == ONE

    def test_single_type(self):
        """Test a one-step chain is alpha_rs."""
        assert chain_count_types([lam(2)], 2) == P + P**2

    def test_types(self):
        """Test chains (1) <= (1, 1) in Z^2."""
        assert chain_count_types([lam(1), lam(1, 1)], 2) == 1 + P

    def test_types_not_nested(self):
        """Test consecutive types must be nested."""
        with pytest.raises(PartitionError):
            chain_count_types([lam(2), lam(1, 1)], 2)

    def test_types_too_many_parts(self):
        """Test types with more than s parts."""
        with pytest.raises(PartitionError):
            chain_count_types([lam(1, 1, 1)], 2)

    @pytest.mark.parametrize(
        "indices, expected",
        [
            ([1], 1 + P),
            ([2], 1 + P + P**2),
            ([1, 2], (1 + P) ** 2),
            ([1, 3], (1 + P) * (1 + P + P**2)),
            ([2, 3], (1 + P) * (1 + P + P**2)),
            ([1, 2, 3], (1 + P) ** 3),
        ],
    )
    def test_indices_rank_two(self, indices, expected):
        """Test each step in a rank 2 lattice multiplies by the count of that index."""
        assert chain_count_indices(indices, 2) == expected

    def test_indices_zero(self):
        """Test index p^0 only allows the whole lattice."""
        assert chain_count_indices([0], 3) == ONE

    @pytest.mark.parametrize("indices", [[2, 1], [1, 1], [-1, 2]])
    def test_indices_invalid(self, indices):
        """Test non-increasing or negative indices."""
        with pytest.raises(PartitionError):
            list(partition_chains(indices, 2))


class TestGroupOrders:
    """Test orders of the linear group and the stabilizer."""

    @pytest.mark.parametrize(
        "n, p0, level, expected",
        [(1, 2, 1, 1), (2, 2, 1, 6), (2, 3, 1, 48), (1, 2, 2, 2), (2, 2, 2, 96), (3, 2, 1, 168)],
    )
    def test_gl_order(self, n, p0, level, expected):
        """Test known general linear group orders."""
        assert gl_order(n, p0, level) == expected

    @pytest.mark.parametrize(
        "parts, p0, expected",
        [((1, 0), 2, (6, 2)), ((2, 0), 3, (648, 54))],
    )
    def test_values(self, parts, p0, expected):
        """Test hand-computed orders."""
        assert group_orders(padded(*parts), p0) == expected

    @pytest.mark.parametrize("p0", [2, 3, 5])
    def test_index_is_alpha_rs(self, p0):
        """Test the coset count equals alpha_rs for every type up to s = 3, weight 4."""
        for s in range(1, 4):
            for r in range(1, 5):
                for x in enum_padded(r, s):
                    sl, stabilizer = group_orders(x, p0)
                    assert sl % stabilizer == 0
                    assert sl // stabilizer == poly_eval(alpha_rs(x), p0), x

    def test_rejects_zero_type(self):
        """Test the zero type has no level."""
        with pytest.raises(PartitionError):
            group_orders(padded(0, 0), 2)

    def test_rejects_composite(self):
        """Test p0 must be prime."""
        with pytest.raises(ValueError):
            group_orders(padded(1, 0), 4)
