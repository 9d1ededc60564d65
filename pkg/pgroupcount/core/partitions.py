"""Integer partitions, zero-padded partitions and the index sets the counting formulas sum over.

Every enumeration yields in lexicographically decreasing order of the part tuples, so streams
are reproducible and can be diffed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from pgroupcount.common.errors import PartitionError


def _check_decreasing(parts: tuple[int, ...], minimum: int, what: str):
    if any(x < minimum for x in parts):
        raise PartitionError(f"{what} parts must be >= {minimum}: {parts}")
    if any(a < b for a, b in itertools.pairwise(parts)):
        raise PartitionError(f"{what} parts must be weakly decreasing: {parts}")


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers; the empty tuple is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        _check_decreasing(self.parts, 1, "Partition")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, with the convention that missing parts are 0."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return format_parts(self.parts)


@dataclass(frozen=True)
class PaddedPartition:
    """Weakly decreasing tuple of non-negative integers with an explicit length ``s``."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        if not self.parts:
            raise PartitionError("A padded partition needs at least one entry")
        _check_decreasing(self.parts, 0, "Padded partition")

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def stripped(self) -> Partition:
        """Drop the zero parts."""
        return Partition(tuple(x for x in self.parts if x))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return format_parts(self.parts)


@dataclass(frozen=True)
class MultiplicityForm:
    """Distinct parts ``mu_1 > ... > mu_l >= 0`` and their multiplicities ``rho_i``."""

    distinct: tuple[int, ...]
    mults: tuple[int, ...]

    @property
    def length(self) -> int:
        return sum(self.mults)

    @property
    def weight(self) -> int:
        return sum(mu * rho for mu, rho in zip(self.distinct, self.mults))


def format_parts(parts: Sequence[int]) -> str:
    return ",".join(str(x) for x in parts)


def _split(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(item) for item in text.split(","))
    except ValueError as e:
        raise PartitionError(f"Invalid partition text: {text!r}") from e


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``; the empty string is the empty partition and trailing zeros are dropped."""
    parts = _split(text)
    _check_decreasing(parts, 0, "Partition")
    return Partition(tuple(x for x in parts if x))


def parse_padded(text: str, length: int | None = None) -> PaddedPartition:
    """Parse ``"2,0"``, padding with zeros up to ``length`` when given."""
    parts = _split(text)
    if length is not None:
        if len(parts) > length:
            raise PartitionError(f"{text!r} has more than {length} parts")
        parts = parts + (0,) * (length - len(parts))
    return PaddedPartition(parts)


def pad(lam: Partition, length: int) -> PaddedPartition:
    """Extend a partition by zeros to exactly ``length`` entries."""
    if len(lam) > length:
        raise PartitionError(f"Partition ({lam}) has more than {length} parts")
    return PaddedPartition(lam.parts + (0,) * (length - len(lam)))


def conjugate(lam: Partition) -> Partition:
    """Column lengths of the Young diagram: ``lam'_i = #{j : lam_j >= i}``."""
    if not lam.parts:
        return Partition()
    return Partition(tuple(sum(1 for x in lam.parts if x >= i) for i in range(1, lam.parts[0] + 1)))


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff ``mu`` fits inside ``lam`` part by part."""
    return len(mu) <= len(lam) and all(m <= x for m, x in zip(mu.parts, lam.parts))


def add_t(lam: PaddedPartition, t: int) -> Partition:
    """Add ``t`` to every entry; the result must have only positive parts."""
    if t < 0:
        raise PartitionError(f"t must be non-negative, got {t}")
    if t == 0 and lam.parts[-1] == 0:
        raise PartitionError(f"t must be positive when ({lam}) has a zero part")
    return Partition(tuple(x + t for x in lam.parts))


def multiplicity_form(lam: PaddedPartition) -> MultiplicityForm:
    groups = [(value, len(list(run))) for value, run in itertools.groupby(lam.parts)]
    return MultiplicityForm(distinct=tuple(v for v, _ in groups), mults=tuple(m for _, m in groups))


def _bounded(n: int, max_part: int, max_len: int | None) -> Iterator[tuple[int, ...]]:
    """Partitions of n with parts <= max_part and at most max_len parts, lex decreasing."""
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    rest_len = None if max_len is None else max_len - 1
    for first in range(min(n, max_part), 0, -1):
        if max_len is not None and first * max_len < n:
            break
        for rest in _bounded(n - first, first, rest_len):
            yield (first,) + rest


def partitions_of(n: int, max_parts: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` with at most ``max_parts`` parts."""
    if n < 0:
        return
    for parts in _bounded(n, n, max_parts):
        yield Partition(parts)


def enum_first_part(n: int, f: int) -> Iterator[Partition]:
    """Partitions of ``n`` whose first part is exactly ``f``; empty when ``f > n``."""
    if f < 1 or f > n:
        return
    for rest in _bounded(n - f, f, None):
        yield Partition((f,) + rest)


def enum_padded(r: int, s: int) -> Iterator[PaddedPartition]:
    """Weakly decreasing ``s``-tuples of non-negative integers summing to ``r``."""
    if s < 1:
        raise PartitionError(f"s must be positive, got {s}")
    for parts in _bounded(r, r, s):
        yield PaddedPartition(parts + (0,) * (s - len(parts)))


def _box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    if rows > 0:
        for first in range(cols, 0, -1):
            for rest in _box(rows - 1, first):
                yield (first,) + rest
    yield ()


def enum_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``, including the empty one."""
    for parts in _box(rows, cols):
        yield Partition(parts)
