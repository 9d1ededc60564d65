"""Tests for pgroupcount.oracle: matrices, Hermite and Smith forms, and the censuses."""

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors

from pgroupcount.common.errors import NotPrimePowerError, SingularMatrixError, SizeGuardError
from pgroupcount.core.bigpoly import poly_eval
from pgroupcount.core.counting import alpha_rs, butler_alpha, chain_count_indices, total_count
from pgroupcount.core.partitions import PaddedPartition, Partition, enum_padded, partitions_of
from pgroupcount.oracle.census import (
    Census,
    census_alpha_rs,
    census_rows,
    chain_census,
    cotype_marginal,
    expected_types,
    finite_subgroup_census,
    type_marginal,
)
from pgroupcount.oracle.hnf import (
    compositions,
    hnf_count,
    hnf_enumerate,
    hnf_for_composition,
    hnf_sum_polynomial,
    sublattices_within,
)
from pgroupcount.oracle.matrix import IntMatrix, solve_lower
from pgroupcount.oracle.snf import p_valuation, quotient_type, snf

entries = st.integers(min_value=-12, max_value=12)


@st.composite
def square_matrices(draw, max_size: int = 4) -> IntMatrix:
    n = draw(st.integers(min_value=1, max_value=max_size))
    rows = draw(st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n))
    return IntMatrix(tuple(tuple(row) for row in rows))


def sympy_invariants(m: IntMatrix) -> list[int]:
    """Nontrivial invariant factors from sympy, largest first."""
    factors = invariant_factors(DM([list(row) for row in m.rows], ZZ))
    return sorted((abs(int(d)) for d in factors if abs(int(d)) != 1), reverse=True)


class TestIntMatrix:
    """Test IntMatrix."""

    def test_must_be_square(self):
        """Test non-square input is rejected."""
        with pytest.raises(ValueError):
            IntMatrix(((1, 2),))
        with pytest.raises(ValueError):
            IntMatrix(())

    def test_matmul(self):
        """Test the product."""
        a = IntMatrix(((1, 2), (3, 4)))
        assert (a @ IntMatrix.identity(2)) == a
        assert (a @ a).rows == ((7, 10), (15, 22))

    def test_det(self):
        """Test Bareiss determinant, including a row swap."""
        assert IntMatrix(((0, 1), (1, 0))).det() == -1
        assert IntMatrix(((2, 0, 0), (5, 3, 0), (1, 1, 4))).det() == 24
        assert IntMatrix(((1, 2), (2, 4))).det() == 0

    def test_diag_and_entries(self):
        """Test diagonal construction and flattening."""
        assert IntMatrix.diag([2, 3]).entries() == [2, 0, 0, 3]

    def test_permute(self):
        """Test rows and columns are reordered independently."""
        a = IntMatrix(((1, 2), (3, 4)))
        assert a.permute((1, 0), (0, 1)).rows == ((3, 4), (1, 2))
        assert a.permute((0, 1), (1, 0)).rows == ((2, 1), (4, 3))

    def test_solve_lower(self):
        """Test X @ H == B is solved exactly or refused."""
        h = IntMatrix(((2, 0), (1, 2)))
        b = IntMatrix.diag([4, 4])
        x = solve_lower(h, b)
        assert x is not None
        assert x @ h == b
        assert solve_lower(h, IntMatrix.diag([2, 1])) is None


UNIMODULAR = [
    IntMatrix(((1, 1, 0), (0, 1, 0), (0, 0, 1))),
    IntMatrix(((1, 0, 0), (2, 1, 0), (-1, 3, 1))),
    IntMatrix(((0, 1, 0), (1, 0, 0), (0, 0, -1))),
]
LATTICE = IntMatrix(((2, 0, 0), (1, 4, 0), (3, 2, 8)))


class TestSNF:
    """Test the Smith form against sympy."""

    def test_diagonal(self):
        """Test diag(2, 3) has invariants (6, 1)."""
        assert snf(IntMatrix.diag([2, 3])) == (6, 1)

    def test_singular(self):
        """Test singular matrices are refused."""
        with pytest.raises(SingularMatrixError):
            snf(IntMatrix(((1, 2), (2, 4))))

    @settings(max_examples=200)
    @given(square_matrices())
    def test_matches_sympy(self, m):
        """Test invariants agree with sympy's invariant factors."""
        if m.det() == 0:
            return
        ours = snf(m)
        assert [d for d in ours if d != 1] == sympy_invariants(m)
        product = 1
        for d in ours:
            product *= d
        assert product == abs(m.det())
        assert all(ours[i] % ours[i + 1] == 0 for i in range(len(ours) - 1))

    def test_p_valuation(self):
        """Test exponents of prime powers."""
        assert p_valuation(8, 2) == 3
        assert p_valuation(1, 5) == 0
        with pytest.raises(NotPrimePowerError):
            p_valuation(12, 2)

    @pytest.mark.parametrize("n", [0, -4])
    def test_p_valuation_non_positive(self, n):
        """Test zero and negative numbers are refused."""
        with pytest.raises(NotPrimePowerError):
            p_valuation(n, 2)

    @pytest.mark.parametrize("rows", list(permutations(range(3))))
    def test_permutation_invariant(self, rows):
        """Test permuting rows and reversing columns keeps the invariants."""
        assert snf(LATTICE.permute(rows, (2, 1, 0))) == snf(LATTICE)

    @pytest.mark.parametrize("u", UNIMODULAR)
    @pytest.mark.parametrize("v", UNIMODULAR)
    def test_unimodular_invariant(self, u, v):
        """Test multiplying by unimodular matrices on both sides keeps the invariants."""
        assert u.det() in (1, -1)
        assert snf(u @ LATTICE @ v) == snf(LATTICE)

    def test_quotient_type(self):
        """Test Z^2 / rowspan [[2, 0], [1, 2]] is cyclic of order 4."""
        assert quotient_type(IntMatrix(((2, 0), (1, 2))), 2) == PaddedPartition((2, 0))
        assert quotient_type(IntMatrix(((2, 0), (0, 2))), 2) == PaddedPartition((1, 1))

    def test_quotient_type_not_prime_power(self):
        """Test determinants that are not a power of the prime."""
        with pytest.raises(NotPrimePowerError):
            quotient_type(IntMatrix.diag([2, 3]), 2)


class TestHNF:
    """Test Hermite form enumeration."""

    def test_compositions(self):
        """Test weak compositions in lexicographic order."""
        assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
        assert list(compositions(3, 2, max_part=2)) == [(1, 2), (2, 1)]
        assert len(list(compositions(4, 3))) == 15

    def test_entries_bounded_by_column(self):
        """Test each below-diagonal entry is reduced by its column's diagonal."""
        for h in hnf_for_composition((1, 2), 2):
            assert h[0, 0] == 2 and h[1, 1] == 4
            assert 0 <= h[1, 0] < 2
            assert h[0, 1] == 0
        assert len(list(hnf_for_composition((1, 2), 2))) == 2

    def test_index_p_sublattices_of_z2(self):
        """Test three index-2 sublattices of Z^2."""
        forms = list(hnf_enumerate(2, 1, 2))
        assert len(forms) == 3
        assert all(abs(h.det()) == 2 for h in forms)
        assert len(set(forms)) == 3

    @pytest.mark.parametrize("s, r, p0", [(2, 2, 2), (3, 2, 2), (2, 3, 3), (3, 4, 3)])
    def test_count_matches_total(self, s, r, p0):
        """Test the number of Hermite forms is binom(r + s - 1, s - 1) at p0."""
        assert hnf_count(s, r, p0) == poly_eval(total_count(r, s), p0)

    def test_largest_census_size(self):
        """Test s = 3, r = 4, p = 3 has 11011 forms."""
        assert hnf_count(3, 4, 3) == 11011

    @pytest.mark.parametrize("s", range(1, 6))
    def test_sum_polynomial(self, s):
        """Test the diagonal-exponent sum equals the total count."""
        for r in range(9):
            assert hnf_sum_polynomial(s, r) == total_count(r, s)

    def test_sublattices_within(self):
        """Test relative sublattices lie inside the parent."""
        parent = IntMatrix(((2, 0), (1, 2)))
        subs = list(sublattices_within(parent, 1, 2))
        assert len(set(subs)) == 3
        for sub in subs:
            assert abs(sub.det()) == 8
            assert solve_lower(parent, sub) is not None


class TestCensus:
    """Test the sublattice census."""

    def test_index_two(self):
        """Test three index-2 sublattices of Z^2, all with cyclic quotient."""
        census = census_alpha_rs(2, 1, 2)
        assert census.tally == {PaddedPartition((1, 0)): 3}
        assert census.total == 3

    def test_index_four(self):
        """Test index-4 sublattices of Z^2 at p = 2."""
        census = census_alpha_rs(2, 2, 2)
        assert census.get(PaddedPartition((2, 0))) == 6
        assert census.get(PaddedPartition((1, 1))) == 1
        assert census.total == 7

    def test_keys_sorted_decreasing(self):
        """Test tally keys come lexicographically decreasing."""
        census = census_alpha_rs(3, 2, 2)
        assert list(census.tally) == [PaddedPartition((2, 0, 0)), PaddedPartition((1, 1, 0))]

    def test_rank_one(self):
        """Test Z has one sublattice of each index."""
        assert census_alpha_rs(1, 3, 3).tally == {PaddedPartition((3,)): 1}

    def test_rejects_composite(self):
        """Test p0 must be prime."""
        with pytest.raises(NotPrimePowerError):
            census_alpha_rs(2, 1, 4)

    def test_merge_mismatch(self):
        """Test merging censuses with different parameters."""
        with pytest.raises(ValueError):
            Census(2, 1, 2).merge(Census(2, 1, 3))

    def test_key_validation(self):
        """Test keys must have the census length and weight."""
        with pytest.raises(ValueError):
            Census(2, 1, 2, {PaddedPartition((2, 0)): 1})

    def test_rows(self):
        """Test the per-matrix stream."""
        rows = list(census_rows(2, 1, 2))
        assert len(rows) == 3
        assert all(row["det"] == 2 and row["type"] == "1,0" for row in rows)
        assert rows[0]["entries"] == [1, 0, 0, 2]

    @pytest.mark.parametrize("p0", [2, 3])
    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_matches_formula(self, s, p0):
        """Test census counts equal alpha_rs and totals equal binom(r + s - 1, s - 1)."""
        for r in range(4 if s == 3 and p0 == 3 else 5):
            census = census_alpha_rs(s, r, p0)
            assert set(census.tally) == set(expected_types(s, r))
            for x in enum_padded(r, s):
                assert census.get(x) == poly_eval(alpha_rs(x), p0), (x, p0)
            assert census.total == poly_eval(total_count(r, s), p0)

    @pytest.mark.slow
    def test_largest(self):
        """Test s = 3, r = 4 at p = 3."""
        census = census_alpha_rs(3, 4, 3)
        assert census.total == 11011
        for x in enum_padded(4, 3):
            assert census.get(x) == poly_eval(alpha_rs(x), 3)


class TestSubgroupCensus:
    """Test subgroup counts in finite abelian p-groups."""

    def test_trivial_group(self):
        """Test the trivial group has one subgroup."""
        assert finite_subgroup_census(Partition(), 2) == {(Partition(), Partition()): 1}

    def test_cyclic(self):
        """Test Z/p^2 has exactly three subgroups, one per order."""
        census = finite_subgroup_census(Partition((2,)), 3)
        assert sum(census.values()) == 3
        assert type_marginal(census) == {Partition(): 1, Partition((1,)): 1, Partition((2,)): 1}

    def test_klein(self):
        """Test (Z/2)^2 has five subgroups."""
        census = finite_subgroup_census(Partition((1, 1)), 2)
        assert sum(census.values()) == 5
        assert type_marginal(census)[Partition((1,))] == 3

    def test_z4_z2(self):
        """Test Z/4 x Z/2 has eight subgroups."""
        census = finite_subgroup_census(Partition((2, 1)), 2)
        assert sum(census.values()) == 8

    @pytest.mark.parametrize("weight", range(0, 5))
    def test_matches_butler(self, weight):
        """Test type marginals equal Butler counts at p = 2, and type and cotype marginals agree."""
        for group in partitions_of(weight):
            census = finite_subgroup_census(group, 2)
            by_type = type_marginal(census)
            for k in range(weight + 1):
                for sub in partitions_of(k, len(group)):
                    assert by_type.get(sub, 0) == poly_eval(butler_alpha(group, sub), 2), (group, sub)
            assert by_type == cotype_marginal(census)

    def test_guard(self):
        """Test groups above the size bound are refused."""
        with pytest.raises(SizeGuardError) as info:
            finite_subgroup_census(Partition((3, 2)), 2, bound=16)
        assert info.value.size == 32
        assert info.value.bound == 16


class TestChainCensus:
    """Test chain enumeration."""

    def test_empty(self):
        """Test the empty chain."""
        assert chain_census([], 2, 2).total == 1

    def test_single(self):
        """Test a one-step chain is a plain census."""
        assert chain_census([1], 2, 2).total == 3

    @pytest.mark.parametrize("indices", [[1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]])
    def test_matches_formula(self, indices):
        """Test chain counts in Z^2 at p = 2."""
        assert chain_census(indices, 2, 2).total == poly_eval(chain_count_indices(indices, 2), 2)

    def test_invalid_indices(self):
        """Test indices must increase."""
        with pytest.raises(ValueError):
            chain_census([2, 1], 2, 2)

    def test_guard(self):
        """Test chains reaching past the bound are refused."""
        with pytest.raises(SizeGuardError):
            chain_census([1, 5], 2, 2, bound=16)
