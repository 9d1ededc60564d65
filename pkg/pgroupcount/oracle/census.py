"""Brute-force tallies that the closed forms are checked against."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from pgroupcount.common.config import DEFAULT_BOUND, is_prime
from pgroupcount.common.errors import NotPrimePowerError, SizeGuardError
from pgroupcount.core.partitions import PaddedPartition, Partition, enum_padded, format_parts
from pgroupcount.oracle.hnf import compositions, hnf_enumerate, hnf_for_composition, sublattices_within
from pgroupcount.oracle.matrix import IntMatrix, solve_lower
from pgroupcount.oracle.snf import quotient_type

logger = logging.getLogger(__name__)


def _check_prime(p0: int):
    if not is_prime(p0):
        raise NotPrimePowerError(f"{p0} is not prime")


def _guard(size: int, bound: int, what: str):
    if size > bound:
        logger.warning(f"Refusing {what}: size {size} exceeds bound {bound}")
        raise SizeGuardError(f"{what} needs size {size}, above the bound {bound}", size=size, bound=bound)


def _sort_key(parts: tuple[int, ...]):
    return tuple(-x for x in parts)


@dataclass(frozen=True)
class Census:
    """Sublattices of ``Z^s`` of index ``p^r`` tallied by quotient type."""

    s: int
    r: int
    p: int
    tally: dict[PaddedPartition, int] = field(default_factory=dict)

    def __post_init__(self):
        for lam in self.tally:
            if lam.length != self.s or lam.weight != self.r:
                raise ValueError(f"Census key ({lam}) does not belong to s={self.s}, r={self.r}")
        ordered = dict(sorted(self.tally.items(), key=lambda item: _sort_key(item[0].parts)))
        object.__setattr__(self, "tally", ordered)

    @property
    def total(self) -> int:
        return sum(self.tally.values())

    def get(self, lam: PaddedPartition) -> int:
        return self.tally.get(lam, 0)

    def merge(self, other: Census) -> Census:
        if (self.s, self.r, self.p) != (other.s, other.r, other.p):
            raise ValueError("Cannot merge censuses with different parameters")
        return Census(self.s, self.r, self.p, dict(Counter(self.tally) + Counter(other.tally)))


def census_for_composition(s: int, b: tuple[int, ...], p0: int) -> Census:
    """The slice of the census whose Hermite forms have diagonal exponents ``b``."""
    tally = Counter(quotient_type(h, p0) for h in hnf_for_composition(b, p0))
    return Census(s, sum(b), p0, dict(tally))


def census_alpha_rs(s: int, r: int, p0: int) -> Census:
    """Tally quotient types over all sublattices of ``Z^s`` of index ``p0^r``.

    The slices per diagonal composition are independent and merge in any order.
    """
    _check_prime(p0)
    census = Census(s, r, p0)
    for b in compositions(r, s):
        census = census.merge(census_for_composition(s, b, p0))
    logger.info(f"Census s={s} r={r} p={p0}: {census.total} sublattices, {len(census.tally)} types")
    return census


def census_rows(s: int, r: int, p0: int) -> Iterator[dict]:
    """One row per Hermite form: its entries, determinant and quotient type."""
    _check_prime(p0)
    for h in hnf_enumerate(s, r, p0):
        yield {"entries": h.entries(), "det": h.det(), "type": format_parts(quotient_type(h, p0).parts)}


SubgroupCensus = dict[tuple[Partition, Partition], int]


def finite_subgroup_census(lam: Partition, p0: int, bound: int = DEFAULT_BOUND) -> SubgroupCensus:
    """Count subgroups of the abelian p-group of type ``lam`` by (type, cotype).

    Subgroups are the lattices between ``L = diag(p0^lam_i) Z^s`` and ``Z^s``: a Hermite form ``H``
    qualifies when ``L = X H`` for an integer ``X``; the subgroup ``rowspan(H) / L`` then has the
    type of ``Z^s / rowspan(X)`` and the quotient ``Z^s / rowspan(H)`` gives the cotype.
    """
    _check_prime(p0)
    _guard(p0**lam.weight, bound, f"subgroup census of ({lam})")
    if not lam.parts:
        return {(Partition(), Partition()): 1}
    s = len(lam)
    lattice = IntMatrix.diag([p0**x for x in lam.parts])
    tally: Counter = Counter()
    for b in range(lam.weight + 1):
        for h in hnf_enumerate(s, b, p0, max_exponent=lam.parts[0]):
            x = solve_lower(h, lattice)
            if x is None:
                continue
            tally[(quotient_type(x, p0).stripped(), quotient_type(h, p0).stripped())] += 1
    logger.info(f"Subgroup census of ({lam}) at p={p0}: {sum(tally.values())} subgroups")
    return dict(sorted(tally.items(), key=lambda item: (_sort_key(item[0][0].parts), _sort_key(item[0][1].parts))))


def type_marginal(census: SubgroupCensus) -> dict[Partition, int]:
    marginal: Counter = Counter()
    for (kind, _), count in census.items():
        marginal[kind] += count
    return dict(marginal)


def cotype_marginal(census: SubgroupCensus) -> dict[Partition, int]:
    marginal: Counter = Counter()
    for (_, cotype), count in census.items():
        marginal[cotype] += count
    return dict(marginal)


@dataclass(frozen=True)
class ChainCensus:
    """Chains of sublattices with prescribed indices, tallied by the chain of quotient types."""

    indices: tuple[int, ...]
    s: int
    p: int
    tally: dict[tuple[PaddedPartition, ...], int]

    @property
    def total(self) -> int:
        return sum(self.tally.values())


def chain_census(indices: Sequence[int], s: int, p0: int, bound: int = DEFAULT_BOUND) -> ChainCensus:
    """Enumerate chains ``A_m <= ... <= A_1 <= Z^s`` with ``[Z^s : A_i] = p0^(indices[i])``.

    Each ``A_(i+1)`` is enumerated inside ``A_i`` by Hermite forms in the coordinates of ``A_i``'s basis.
    """
    _check_prime(p0)
    indices = tuple(indices)
    if list(indices) != sorted(set(indices)) or any(a < 0 for a in indices):
        raise ValueError(f"Indices must be strictly increasing and non-negative: {list(indices)}")
    if not indices:
        return ChainCensus(indices, s, p0, {(): 1})
    _guard(p0 ** indices[-1], bound, f"chain census of {list(indices)}")

    tally: Counter = Counter()

    def descend(basis: IntMatrix, depth: int, types: tuple[PaddedPartition, ...]):
        if depth == len(indices):
            tally[types] += 1
            return
        step = indices[depth] - (indices[depth - 1] if depth else 0)
        for sub in sublattices_within(basis, step, p0):
            descend(sub, depth + 1, types + (quotient_type(sub, p0),))

    descend(IntMatrix.identity(s), 0, ())
    logger.info(f"Chain census {list(indices)} s={s} p={p0}: {sum(tally.values())} chains")
    return ChainCensus(indices, s, p0, dict(tally))


def expected_types(s: int, r: int) -> list[PaddedPartition]:
    """Every quotient type a census of ``(s, r)`` can contain."""
    return list(enum_padded(r, s))
