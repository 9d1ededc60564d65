"""Enumeration of sublattices of ``Z^s`` of prime-power index through Hermite normal forms.

A sublattice is represented by the unique lower triangular basis matrix ``H`` (basis vectors
are rows) with positive diagonal ``p0^b_1, ..., p0^b_s`` and each entry below the diagonal
reduced modulo the diagonal entry of its column. Compositions ``(b_1, ..., b_s)`` are visited
in lexicographic order, then below-diagonal entries row by row.

The closed-form sum ``sum p^(b_2 + 2 b_3 + ... + (s-1) b_s)`` used by :func:`hnf_sum_polynomial`
bounds entries by their row instead; the two differ only by relabeling the composition.
"""

import itertools
from typing import Iterator

from pgroupcount.core.bigpoly import IntPoly
from pgroupcount.oracle.matrix import IntMatrix


def compositions(r: int, s: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``r`` into ``s`` parts, lexicographically increasing."""
    top = r if max_part is None else min(r, max_part)
    if s == 1:
        if r <= top:
            yield (r,)
        return
    for first in range(top + 1):
        for rest in compositions(r - first, s - 1, max_part):
            yield (first,) + rest


def _below_diagonal(s: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(s) for j in range(i)]


def hnf_for_composition(b: tuple[int, ...], p0: int) -> Iterator[IntMatrix]:
    """Every Hermite normal form with diagonal ``p0^b_i``."""
    s = len(b)
    diagonal = [p0**e for e in b]
    slots = _below_diagonal(s)
    for values in itertools.product(*(range(diagonal[j]) for _, j in slots)):
        rows = [[diagonal[i] if i == j else 0 for j in range(s)] for i in range(s)]
        for (i, j), value in zip(slots, values):
            rows[i][j] = value
        yield IntMatrix(tuple(tuple(row) for row in rows))


def hnf_enumerate(s: int, r: int, p0: int, max_exponent: int | None = None) -> Iterator[IntMatrix]:
    """One basis matrix per sublattice of ``Z^s`` of index ``p0^r``.

    ``max_exponent`` skips diagonals with some ``b_i`` above it; a lattice containing
    ``p0^e Z^s`` never needs more.
    """
    for b in compositions(r, s, max_exponent):
        yield from hnf_for_composition(b, p0)


def composition_size(b: tuple[int, ...], p0: int) -> int:
    s = len(b)
    return p0 ** sum(e * (s - 1 - j) for j, e in enumerate(b))


def hnf_count(s: int, r: int, p0: int) -> int:
    """How many matrices :func:`hnf_enumerate` yields, without enumerating them."""
    return sum(composition_size(b, p0) for b in compositions(r, s))


def hnf_sum_polynomial(s: int, r: int) -> IntPoly:
    """``sum over b_1 + ... + b_s = r of p^(b_2 + 2 b_3 + ... + (s-1) b_s)``."""
    coeffs = [0] * (r * (s - 1) + 1)
    for b in compositions(r, s):
        coeffs[sum(j * e for j, e in enumerate(b))] += 1
    return IntPoly(coeffs)


def sublattices_within(h: IntMatrix, r: int, p0: int) -> Iterator[IntMatrix]:
    """Bases (in standard coordinates) of every sublattice of ``rowspan(h)`` with relative index ``p0^r``."""
    for k in hnf_enumerate(h.s, r, p0):
        yield k @ h
