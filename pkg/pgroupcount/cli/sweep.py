"""Verification sweep: every closed form against its symbolic or brute-force cross-check."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from pgroupcount.core.bigpoly import format_poly, poly_eval, poly_shape, poly_sum
from pgroupcount.core.counting import (
    alpha_order,
    alpha_rs,
    alpha_rs_multinomial,
    butler_alpha,
    chain_count_indices,
    group_orders,
    identity_rhs,
    lemma_sides,
    total_count,
)
from pgroupcount.core.partitions import (
    add_t,
    conjugate,
    contains,
    enum_first_part,
    enum_padded,
    format_parts,
    parse_padded,
    parse_partition,
    partitions_of,
)
from pgroupcount.core.qbinomial import pbinom, pbinom_box, pbinom_product_eval
from pgroupcount.oracle.census import (
    census_alpha_rs,
    chain_census,
    cotype_marginal,
    finite_subgroup_census,
    type_marginal,
)
from pgroupcount.oracle.hnf import hnf_sum_polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepLimits:
    """Ranges covered by :func:`plan`."""

    max_n: int = 12
    shape_max_n: int = 20
    max_s: int = 5
    max_r: int = 8
    lemma_max_r: int = 10
    lemma_max_s: int = 6
    oracle_max_s: int = 3
    oracle_max_r: int = 4
    group_max_weight: int = 4
    chain_max_index: int = 3
    primes: tuple[int, ...] = (2, 3)
    bound: int = 2**12


@dataclass
class CheckResult:
    name: str
    params: dict
    passed: bool
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "status": "PASS" if self.passed else "FAIL",
            "detail": self.detail,
        }


def _poly_diff(got, expected) -> dict:
    return {"got": format_poly(got), "expected": format_poly(expected)}


def check_identity(n: int, k: int, **_) -> tuple[bool, dict]:
    got, expected = identity_rhs(n, k), pbinom(n, k)
    return got == expected, {} if got == expected else _poly_diff(got, expected)


def check_pbinom(n: int, k: int, primes: tuple[int, ...], **_) -> tuple[bool, dict]:
    poly = pbinom(n, k)
    detail = {}
    if poly != pbinom_box(n, k):
        detail["box"] = _poly_diff(pbinom_box(n, k), poly)
    if poly != pbinom(n, n - k):
        detail["symmetry"] = _poly_diff(pbinom(n, n - k), poly)
    for p0 in primes:
        if poly_eval(poly, p0) != pbinom_product_eval(n, k, p0):
            expected = pbinom_product_eval(n, k, p0)
            detail[f"product_p{p0}"] = {"got": str(poly_eval(poly, p0)), "expected": str(expected)}
    return not detail, detail


def check_pbinom_shape(n: int, k: int, **_) -> tuple[bool, dict]:
    poly = pbinom(n, k)
    shape = poly_shape(poly)
    ok = all(c >= 0 for c in poly.coeffs) and shape.is_unimodal and shape.is_symmetric
    return ok, {} if ok else shape.as_dict()


def check_total(r: int, s: int, **_) -> tuple[bool, dict]:
    detail = {}
    total = total_count(r, s)
    parts = {}
    for lam in enum_padded(r, s):
        poly = alpha_rs(lam)
        parts[format_parts(lam.parts)] = poly
        if poly != alpha_rs_multinomial(lam):
            detail[f"multinomial {lam}"] = _poly_diff(alpha_rs_multinomial(lam), poly)
        shape = poly_shape(poly)
        if not (shape.is_unimodal and shape.is_symmetric):
            detail[f"shape {lam}"] = shape.as_dict()
    summed = poly_sum(parts.values())
    if summed != total:
        detail["sum"] = _poly_diff(summed, total)
    if hnf_sum_polynomial(s, r) != total:
        detail["hnf_sum"] = _poly_diff(hnf_sum_polynomial(s, r), total)
    bijection = sorted(conjugate(add_t(lam, 1)).parts for lam in enum_padded(r, s))
    if bijection != sorted(lam.parts for lam in enum_first_part(r + s, s)):
        detail["bijection"] = "conjugate(lam + 1) does not biject onto partitions with first part s"
    return not detail, detail


def check_lemma(lam: str, **_) -> tuple[bool, dict]:
    padded = parse_padded(lam)
    detail = {}
    for t in (1, 2, 3):
        lhs, rhs = lemma_sides(padded, t)
        if lhs != rhs:
            detail[f"t={t}"] = {"lhs": lhs, "rhs": rhs}
    reference = alpha_rs(padded, 1)
    ts = (0, 2, 3) if padded.parts[-1] else (2, 3)
    for t in ts:
        if alpha_rs(padded, t) != reference:
            detail[f"alpha_rs t={t}"] = _poly_diff(alpha_rs(padded, t), reference)
    return not detail, detail


def check_oracle(s: int, r: int, p: int, **_) -> tuple[bool, dict]:
    census = census_alpha_rs(s, r, p)
    detail = {}
    for lam in enum_padded(r, s):
        expected = poly_eval(alpha_rs(lam), p)
        if census.get(lam) != expected:
            detail[format_parts(lam.parts)] = {"census": census.get(lam), "formula": expected}
    expected_total = poly_eval(total_count(r, s), p)
    if census.total != expected_total:
        detail["total"] = {"census": census.total, "formula": expected_total}
    return not detail, detail


def check_subgroups(lam: str, p: int, bound: int, **_) -> tuple[bool, dict]:
    group = parse_partition(lam)
    census = finite_subgroup_census(group, p, bound)
    by_type, by_cotype = type_marginal(census), cotype_marginal(census)
    detail = {}
    for k in range(group.weight + 1):
        for mu in partitions_of(k, len(group)):
            if not contains(group, mu):
                continue
            poly = butler_alpha(group, mu)
            if by_type.get(mu, 0) != poly_eval(poly, p):
                detail[f"type {mu}"] = {"census": by_type.get(mu, 0), "formula": poly_eval(poly, p)}
            shape = poly_shape(poly)
            if not (shape.is_unimodal and shape.is_symmetric):
                detail[f"shape {mu}"] = shape.as_dict()
    if by_type != by_cotype:
        detail["duality"] = {
            "type": {format_parts(k.parts): v for k, v in by_type.items()},
            "cotype": {format_parts(k.parts): v for k, v in by_cotype.items()},
        }
    orders = poly_eval(poly_sum(alpha_order(group, k) for k in range(group.weight + 1)), p)
    if orders != sum(census.values()):
        detail["orders"] = {"census": sum(census.values()), "formula": orders}
    return not detail, detail


def check_chain(indices: list[int], s: int, p: int, bound: int, **_) -> tuple[bool, dict]:
    census = chain_census(indices, s, p, bound)
    expected = poly_eval(chain_count_indices(indices, s), p)
    ok = census.total == expected
    return ok, {} if ok else {"census": census.total, "formula": expected}


def check_group_orders(lam: str, p: int, **_) -> tuple[bool, dict]:
    padded = parse_padded(lam)
    sl, stabilizer = group_orders(padded, p)
    quotient, remainder = divmod(sl, stabilizer)
    expected = poly_eval(alpha_rs(padded), p)
    ok = remainder == 0 and quotient == expected
    return ok, {} if ok else {"sl": str(sl), "stabilizer": str(stabilizer), "formula": expected}


CHECKS = {
    "identity": check_identity,
    "pbinom": check_pbinom,
    "pbinom_shape": check_pbinom_shape,
    "total": check_total,
    "lemma": check_lemma,
    "oracle": check_oracle,
    "subgroups": check_subgroups,
    "chain": check_chain,
    "group_orders": check_group_orders,
}


def _index_sets(top: int) -> list[list[int]]:
    sets = []
    for mask in range(1, 2**top):
        sets.append([i + 1 for i in range(top) if mask >> i & 1])
    return sorted(sets, key=lambda x: (len(x), x))


def plan(limits: SweepLimits) -> list[tuple[str, dict]]:
    """Every check the sweep will run, in parameter order."""
    primes = tuple(limits.primes)
    smallest = min(primes)
    items: list[tuple[str, dict]] = []
    items += [("identity", {"n": n, "k": k}) for n in range(limits.max_n + 1) for k in range(n + 1)]
    items += [("pbinom", {"n": n, "k": k, "primes": primes}) for n in range(limits.max_n + 1) for k in range(n + 1)]
    items += [("pbinom_shape", {"n": n, "k": k}) for n in range(limits.shape_max_n + 1) for k in range(n + 1)]
    items += [("total", {"r": r, "s": s}) for s in range(1, limits.max_s + 1) for r in range(limits.max_r + 1)]
    items += [
        ("lemma", {"lam": format_parts(lam.parts)})
        for s in range(1, limits.lemma_max_s + 1)
        for r in range(limits.lemma_max_r + 1)
        for lam in enum_padded(r, s)
    ]
    items += [
        ("oracle", {"s": s, "r": r, "p": p})
        for p in primes
        for s in range(1, limits.oracle_max_s + 1)
        for r in range(limits.oracle_max_r + 1)
    ]
    items += [
        ("subgroups", {"lam": format_parts(lam.parts), "p": smallest, "bound": limits.bound})
        for w in range(limits.group_max_weight + 1)
        for lam in partitions_of(w)
    ]
    items += [
        ("chain", {"indices": indices, "s": 2, "p": smallest, "bound": limits.bound})
        for indices in _index_sets(limits.chain_max_index)
    ]
    items += [
        ("group_orders", {"lam": format_parts(lam.parts), "p": p})
        for p in primes
        for s in range(1, limits.oracle_max_s + 1)
        for w in range(1, limits.group_max_weight + 1)
        for lam in enum_padded(w, s)
    ]
    return items


def run_check(item: tuple[str, dict]) -> CheckResult:
    name, params = item
    passed, detail = CHECKS[name](**params)
    if not passed:
        logger.warning(f"Check {name} {params} failed: {detail}")
    shown = {k: list(v) if isinstance(v, tuple) else v for k, v in params.items() if k != "bound"}
    return CheckResult(name, shown, passed, detail)


def run_sweep(limits: SweepLimits, jobs: int = 1) -> list[CheckResult]:
    """Run every planned check; results come back in plan order whatever ``jobs`` is."""
    items = plan(limits)
    logger.info(f"Running {len(items)} checks with {jobs} job(s)")
    if jobs <= 1:
        return [run_check(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_check, items, chunksize=8))


def summarize(results: list[CheckResult]) -> dict:
    failed = [r for r in results if not r.passed]
    families: dict[str, dict] = {}
    for result in results:
        family = families.setdefault(result.name, {"passed": 0, "failed": 0})
        family["passed" if result.passed else "failed"] += 1
    return {
        "status": "PASS" if not failed else "FAIL",
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "families": families,
        "checks": [r.as_dict() for r in results],
    }
