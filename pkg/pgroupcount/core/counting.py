"""Closed-form subgroup counts.

Conventions used throughout: ``lam'`` is a conjugate partition read with ``part(i) = 0`` past its
last part, so every product over ``j >= 1`` only needs to run one step past the last nonzero
conjugate part; the remaining factors are all 1.
"""

import logging
from typing import Iterator, Sequence

from pgroupcount.common.config import is_prime
from pgroupcount.common.errors import PartitionError
from pgroupcount.core.bigpoly import ONE, ZERO, IntPoly, poly_mul, poly_prod, poly_sum
from pgroupcount.core.partitions import (
    PaddedPartition,
    Partition,
    add_t,
    conjugate,
    contains,
    enum_first_part,
    multiplicity_form,
    pad,
    partitions_of,
)
from pgroupcount.core.qbinomial import pbinom

logger = logging.getLogger(__name__)


def _term(exponent: int, n: int, k: int) -> IntPoly:
    return poly_mul(IntPoly.monomial(exponent), pbinom(n, k))


def conjugate_product(c: Partition) -> IntPoly:
    """``prod_j p^((c_1 - c_j) c_(j+1)) binom(c_1 - c_(j+1), c_1 - c_j)_p`` for a conjugate partition ``c``."""
    c1 = c.part(1)
    factors = []
    for j in range(1, len(c) + 1):
        cj, cn = c.part(j), c.part(j + 1)
        factors.append(_term((c1 - cj) * cn, c1 - cn, c1 - cj))
    return poly_prod(factors)


def butler_alpha(lam: Partition, mu: Partition) -> IntPoly:
    """Number of subgroups of type ``mu`` in the abelian p-group of type ``lam`` (zero unless ``mu`` fits)."""
    if not contains(lam, mu):
        return ZERO
    lc, mc = conjugate(lam), conjugate(mu)
    factors = []
    for j in range(1, mu.part(1) + 2):
        lj, mj, mn = lc.part(j), mc.part(j), mc.part(j + 1)
        factors.append(_term((lj - mj) * mn, lj - mn, mj - mn))
    return poly_prod(factors)


def alpha_order(lam: Partition, k: int) -> IntPoly:
    """Number of subgroups of order ``p^k`` in the abelian p-group of type ``lam``."""
    if k < 0 or k > lam.weight:
        return ZERO
    return poly_sum(butler_alpha(lam, mu) for mu in partitions_of(k, len(lam)) if contains(lam, mu))


def order_profile(lam: Partition) -> list[IntPoly]:
    """``[alpha_order(lam, k) for k = 0 .. |lam|]``."""
    return [alpha_order(lam, k) for k in range(lam.weight + 1)]


def alpha_rs(lam: PaddedPartition, t: int = 1) -> IntPoly:
    """Number of sublattices of ``Z^s`` (``s = len(lam)``) whose quotient has type ``lam``.

    The index is ``p^r`` with ``r = |lam|``. The answer does not depend on ``t``; ``t = 0`` is
    only allowed when ``lam`` has no zero part.
    """
    return conjugate_product(conjugate(add_t(lam, t)))


def alpha_rs_multinomial(lam: PaddedPartition) -> IntPoly:
    """Same count in coset form: ``p^(sum_{i<j} (mu_i - mu_j - 1) rho_i rho_j)`` times a p-multinomial."""
    form = multiplicity_form(lam)
    pairs = [(i, j) for i in range(len(form.distinct)) for j in range(i + 1, len(form.distinct))]
    exponent = sum((form.distinct[i] - form.distinct[j] - 1) * form.mults[i] * form.mults[j] for i, j in pairs)
    remaining, factors = lam.length, [IntPoly.monomial(exponent)]
    for rho in form.mults:
        factors.append(pbinom(remaining, rho))
        remaining -= rho
    return poly_prod(factors)


def total_count(r: int, s: int) -> IntPoly:
    """Number of sublattices of ``Z^s`` of index ``p^r``."""
    return pbinom(r + s - 1, s - 1)


def lemma_sides(lam: PaddedPartition, t: int = 1) -> tuple[int, int]:
    """Both sides of the exponent identity relating multiplicities of ``lam`` to the conjugate of ``lam + t``."""
    if t < 1:
        raise PartitionError(f"t must be positive, got {t}")
    form = multiplicity_form(lam)
    mu, rho = form.distinct, form.mults
    lhs = sum((mu[i] - mu[j] - 1) * rho[i] * rho[j] for i in range(len(mu)) for j in range(i + 1, len(mu)))
    c = conjugate(add_t(lam, t))
    rhs = sum((c.part(1) - c.part(j)) * c.part(j + 1) for j in range(1, len(c) + 1))
    return lhs, rhs


def identity_terms(n: int, k: int) -> Iterator[tuple[Partition, IntPoly]]:
    """Each partition of ``n + 1`` with first part ``k + 1`` and its term in the identity for ``binom(n, k)_p``."""
    for lam in enum_first_part(n + 1, k + 1):
        yield lam, conjugate_product(lam)


def identity_rhs(n: int, k: int) -> IntPoly:
    if k < 0 or k > n:
        return ZERO
    return poly_sum(term for _, term in identity_terms(n, k))


def _check_chain(specs: Sequence[Partition], s: int):
    for lam in specs:
        if len(lam) > s:
            raise PartitionError(f"({lam}) has more than s={s} parts")
    for lower, upper in zip(specs, specs[1:]):
        if not contains(upper, lower):
            raise PartitionError(f"({lower}) is not contained in ({upper})")


def chain_count_types(specs: Sequence[Partition], s: int) -> IntPoly:
    """Chains ``A_m <= ... <= A_1 <= Z^s`` with ``Z^s / A_i`` of type ``specs[i]``; the empty chain counts 1."""
    specs = list(specs)
    if not specs:
        return ONE
    _check_chain(specs, s)
    factors = [alpha_rs(pad(specs[-1], s))]
    factors += [butler_alpha(upper, lower) for lower, upper in zip(specs, specs[1:])]
    return poly_prod(factors)


def partition_chains(indices: Sequence[int], s: int) -> Iterator[tuple[Partition, ...]]:
    """Chains of partitions with weights ``indices``, at most ``s`` parts each, each contained in the next."""
    if list(indices) != sorted(set(indices)) or any(a < 0 for a in indices):
        raise PartitionError(f"Indices must be strictly increasing and non-negative: {list(indices)}")

    def extend(prefix: tuple[Partition, ...], rest: Sequence[int]):
        if not rest:
            yield prefix
            return
        for lam in partitions_of(rest[0], s):
            if not prefix or contains(lam, prefix[-1]):
                yield from extend(prefix + (lam,), rest[1:])

    yield from extend((), list(indices))


def chain_terms(indices: Sequence[int], s: int) -> Iterator[tuple[tuple[Partition, ...], IntPoly]]:
    for chain in partition_chains(indices, s):
        yield chain, chain_count_types(chain, s)


def chain_count_indices(indices: Sequence[int], s: int) -> IntPoly:
    """Chains ``A_m <= ... <= A_1 <= Z^s`` with ``[Z^s : A_i] = p^(indices[i])``."""
    return poly_sum(term for _, term in chain_terms(indices, s))


def gl_order(n: int, p0: int, level: int = 1) -> int:
    """``|GL_n(Z / p0^level)|``."""
    order = p0 ** ((level - 1) * n * n)
    for i in range(n):
        order *= p0**n - p0**i
    return order


def group_orders(lam: PaddedPartition, p0: int) -> tuple[int, int]:
    """``(|SL_s(Z / p0^mu_1)|, |G_lam|)`` for the stabilizer ``G_lam`` of a sublattice of type ``lam``.

    The ratio of the two orders equals ``alpha_rs(lam)`` evaluated at ``p0``.
    """
    if not is_prime(p0):
        raise ValueError(f"{p0} is not prime")
    if lam.parts[0] == 0:
        raise PartitionError("group_orders needs a nonzero first part")
    form = multiplicity_form(lam)
    mu, rho = form.distinct, form.mults
    top = mu[0]
    units = gl_order(1, p0, top)
    sl = gl_order(lam.length, p0, top) // units

    exponent = sum((2 * top - mu[i] + mu[j]) * rho[i] * rho[j] for i in range(len(mu)) for j in range(i + 1, len(mu)))
    exponent += sum((top - 1) * r * r for r in rho)
    numerator = p0**exponent
    for r in rho:
        numerator *= gl_order(r, p0)
    stabilizer, remainder = divmod(numerator, units)
    if remainder:
        raise ArithmeticError(f"Stabilizer order of ({lam}) is not integral at p={p0}")
    logger.debug(f"group_orders({lam}, {p0}) = ({sl}, {stabilizer})")
    return sl, stabilizer
