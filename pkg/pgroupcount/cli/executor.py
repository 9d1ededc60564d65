"""Command execution: one handler per subcommand, each returning a response dict."""

import logging
from dataclasses import fields
from pathlib import Path
from typing import Iterable

from pgroupcount.cli.sweep import SweepLimits, run_sweep, summarize
from pgroupcount.common.config import OracleConfig
from pgroupcount.common.errors import PartitionError, PGroupCountError, SizeGuardError, VerificationMismatch
from pgroupcount.common.serialization import deserialize_many, error_report
from pgroupcount.core.bigpoly import format_poly, is_unimodal_sequence, parse_poly, poly_eval, poly_shape, poly_sum
from pgroupcount.core.counting import (
    alpha_order,
    alpha_rs,
    butler_alpha,
    chain_count_types,
    chain_terms,
    identity_rhs,
    identity_terms,
    total_count,
)
from pgroupcount.core.partitions import Partition, contains, enum_padded, format_parts, parse_padded, parse_partition
from pgroupcount.core.qbinomial import pbinom
from pgroupcount.core.records import CountRecord
from pgroupcount.oracle.census import Census, census_alpha_rs, census_rows, expected_types

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_SIZE_GUARD = 3

# Sweep limits that get their own ``verify`` flag; primes and bound come from the shared config.
SWEEP_FLAGS = tuple(f.name for f in fields(SweepLimits) if f.name not in ("primes", "bound"))


def exit_code_for(exc: Exception) -> int:
    """Mismatches exit 1, bad input 2, size guard refusals 3; anything unexpected also exits 1."""
    if isinstance(exc, VerificationMismatch):
        return EXIT_FAILURE
    if isinstance(exc, SizeGuardError):
        return EXIT_SIZE_GUARD
    if isinstance(exc, ValueError):
        return EXIT_USAGE
    return EXIT_FAILURE


def show_partition(lam: Partition) -> str:
    # "0" parses back to the empty partition
    return str(lam) or "0"


def parse_indices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(item) for item in text.split(",") if item.strip())
    except ValueError as e:
        raise ValueError(f"Invalid index list: {text!r}") from e


def _require(condition: bool, message: str):
    if not condition:
        raise ValueError(message)


def _query(kind: str, params: dict) -> str:
    return " ".join([kind] + [f"{k}={v}" for k, v in params.items()])


def _eval_columns(records: Iterable[CountRecord]) -> list[int]:
    return sorted({prime for record in records for prime in record.evals})


def records_table(records: list) -> tuple[list[str], list[list]]:
    """Generic ``query | answer | p=...`` table for count records and censuses."""
    count_records = [r for r in records if isinstance(r, CountRecord)]
    primes = _eval_columns(count_records)
    rows = []
    for record in records:
        if isinstance(record, Census):
            for lam, count in record.tally.items():
                query = _query("census", {"s": record.s, "r": record.r, "p": record.p, "type": str(lam)})
                rows.append([query, count] + [""] * len(primes))
            continue
        evals = [record.evals.get(prime, "") for prime in primes]
        rows.append([_query(record.kind, record.params), format_poly(record.answer)] + evals)
    return ["query", "answer"] + [f"p={prime}" for prime in primes], rows


def _success(headers, rows, records=(), notes=(), report=None, diff=None) -> dict:
    response = {"type": "success", "headers": headers, "rows": rows, "records": list(records), "notes": list(notes)}
    if report is not None:
        response["report"] = report
    if diff:
        response["diff"] = diff
    return response


def _records_response(records: list, notes=(), diff=None) -> dict:
    headers, rows = records_table(records)
    return _success(headers, rows, records, notes, diff=diff)


def _expect_diff(record: CountRecord, expect: str | None) -> tuple[list[str], dict]:
    if expect is None:
        return [], {}
    expected = parse_poly(expect)
    if record.answer == expected:
        return ["expect: MATCH"], {}
    return ["expect: MISMATCH"], {"got": format_poly(record.answer), "expected": format_poly(expected)}


class CommandExecutor:
    """Runs CLI commands against one :class:`OracleConfig`."""

    def __init__(self, config: OracleConfig | None = None):
        self.config = config or OracleConfig()

    def handle_command(self, command: str, args: dict) -> dict:
        """Run ``command`` with parsed ``args`` and return a success or error response."""
        try:
            primes = args.get("eval") or []
            handlers = {
                "pbinom": lambda: self._pbinom(args["n"], args["k"], primes, args.get("expect")),
                "count": lambda: self._count(
                    args["type"], args.get("s"), args.get("r"), args.get("t", 1), primes, args.get("expect")
                ),
                "count-all": lambda: self._count_all(args["r"], args["s"], primes),
                "total": lambda: self._total(args["r"], args["s"], primes),
                "butler": lambda: self._butler(args["lam"], args["mu"], primes),
                "order-count": lambda: self._order_count(args["lam"], args.get("k"), primes),
                "identity": lambda: self._identity(
                    args["n"], args["k"], args.get("verify", False), args.get("terms", False), primes
                ),
                "chain": lambda: self._chain(args.get("types"), args.get("indices"), args["s"], primes),
                "oracle": lambda: self._oracle(
                    args["r"], args["s"], args.get("p"), args.get("compare", False), args.get("format", "table")
                ),
                "verify": lambda: self._verify(args),
                "show": lambda: self._show(args["file"]),
            }
            handler = handlers.get(command)
            if handler:
                return handler()
            return {"type": "error", "exit_code": EXIT_USAGE, "error": f"Unknown command: {command}"}
        except Exception as e:
            code = exit_code_for(e)
            unexpected = not isinstance(e, (PGroupCountError, ValueError))
            if unexpected:
                logger.exception(f"Command {command} failed unexpectedly")
            return {"type": "error", "exit_code": code, **error_report(e, with_traceback=unexpected)}

    def _pbinom(self, n: int, k: int, primes: list[int], expect: str | None) -> dict:
        _require(n >= 0, f"n must be non-negative, got {n}")
        record = CountRecord("pbinom", {"n": n, "k": k}, pbinom(n, k)).evaluate(primes)
        notes, diff = _expect_diff(record, expect)
        return _records_response([record], notes, diff)

    def _count(self, text: str, s: int | None, r: int | None, t: int, primes: list[int], expect: str | None) -> dict:
        lam = parse_padded(text, s)
        if r is not None and r != lam.weight:
            raise PartitionError(f"--r {r} disagrees with the weight {lam.weight} of ({lam})")
        params = {"type": str(lam), "s": lam.length, "r": lam.weight}
        record = CountRecord("alpha_rs", params, alpha_rs(lam, t)).evaluate(primes)
        notes, diff = _expect_diff(record, expect)
        return _records_response([record], notes, diff)

    def _count_all(self, r: int, s: int, primes: list[int]) -> dict:
        _require(r >= 0, f"r must be non-negative, got {r}")
        records = [
            CountRecord("alpha_rs", {"type": str(lam), "s": s, "r": r}, alpha_rs(lam)).evaluate(primes)
            for lam in enum_padded(r, s)
        ]
        top = max(record.answer.degree for record in records)
        rows = []
        for record in records:
            shape = poly_shape(record.answer)
            coeffs = [record.answer[i] for i in range(top + 1)]
            evals = [record.evals[prime] for prime in primes]
            rows.append([record.params["type"], *coeffs, shape.is_unimodal, shape.is_symmetric, *evals])
        headers = ["type"] + [f"p^{i}" for i in range(top + 1)] + ["unimodal", "symmetric"]
        headers += [f"p={prime}" for prime in primes]

        summed, expected = poly_sum(record.answer for record in records), total_count(r, s)
        total = CountRecord("total", {"r": r, "s": s}, expected).evaluate(primes)
        status = "MATCH" if summed == expected else "MISMATCH"
        notes = [f"sum over {len(records)} types = {format_poly(summed)}: {status}"]
        diff = {} if summed == expected else {"sum": format_poly(summed), "total": format_poly(expected)}
        return _success(headers, rows, records + [total], notes, diff=diff)

    def _total(self, r: int, s: int, primes: list[int]) -> dict:
        _require(r >= 0 and s >= 1, f"Need r >= 0 and s >= 1, got r={r}, s={s}")
        return _records_response([CountRecord("total", {"r": r, "s": s}, total_count(r, s)).evaluate(primes)])

    def _butler(self, lam_text: str, mu_text: str, primes: list[int]) -> dict:
        lam, mu = parse_partition(lam_text), parse_partition(mu_text)
        params = {"lambda": show_partition(lam), "mu": show_partition(mu)}
        record = CountRecord("butler", params, butler_alpha(lam, mu)).evaluate(primes)
        notes = [] if contains(lam, mu) else [f"({mu}) does not fit inside ({lam})"]
        return _records_response([record], notes)

    def _order_count(self, lam_text: str, k: int | None, primes: list[int]) -> dict:
        lam = parse_partition(lam_text)
        ks = [k] if k is not None else list(range(lam.weight + 1))
        records = [
            CountRecord("alpha_order", {"lambda": show_partition(lam), "k": i}, alpha_order(lam, i)).evaluate(primes)
            for i in ks
        ]
        rows = []
        for record in records:
            shape = poly_shape(record.answer)
            row = [record.params["k"], format_poly(record.answer), shape.is_unimodal, shape.is_symmetric]
            rows.append(row + [record.evals[prime] for prime in primes])
        headers = ["k", "count", "unimodal", "symmetric"] + [f"p={prime}" for prime in primes]
        notes = []
        if k is None:
            for prime in primes:
                profile = [record.evals[prime] for record in records]
                flag = is_unimodal_sequence(profile)
                notes.append(f"p={prime}: {' '.join(map(str, profile))} (unimodal in k: {flag})")
        return _success(headers, rows, records, notes)

    def _identity(self, n: int, k: int, verify: bool, terms: bool, primes: list[int]) -> dict:
        _require(n >= 0, f"n must be non-negative, got {n}")
        rhs = identity_rhs(n, k)
        record = CountRecord("identity", {"n": n, "k": k}, rhs).evaluate(primes)
        if terms:
            headers = ["partition", "term"]
            rows = [[show_partition(lam), format_poly(term)] for lam, term in identity_terms(n, k)]
            rows.append(["sum", format_poly(rhs)])
        else:
            headers, rows = records_table([record])
        notes, diff = [], {}
        if verify:
            lhs = pbinom(n, k)
            notes.append(f"binom({n},{k})_p = {format_poly(lhs)}: {'MATCH' if lhs == rhs else 'MISMATCH'}")
            if lhs != rhs:
                diff = {"pbinom": format_poly(lhs), "identity": format_poly(rhs)}
        return _success(headers, rows, [record], notes, diff=diff)

    def _chain(self, types: str | None, indices: str | None, s: int, primes: list[int]) -> dict:
        _require(s >= 1, f"s must be positive, got {s}")
        if types is not None:
            specs = [parse_partition(text) for text in types.split(";")]
            params = {"types": ";".join(show_partition(lam) for lam in specs), "s": s}
            record = CountRecord("chain_types", params, chain_count_types(specs, s)).evaluate(primes)
            return _records_response([record])

        chain_indices = parse_indices(indices)
        per_chain = list(chain_terms(chain_indices, s))
        answer = poly_sum(term for _, term in per_chain)
        params = {"indices": format_parts(chain_indices), "s": s}
        record = CountRecord("chain_indices", params, answer).evaluate(primes)
        rows = [[";".join(show_partition(lam) for lam in chain), format_poly(term)] for chain, term in per_chain]
        notes = [f"{len(per_chain)} type chains, total {format_poly(answer)}"]
        notes += [f"p={prime}: {value}" for prime, value in record.evals.items()]
        return _success(["chain", "count"], rows, [record], notes)

    def _oracle(self, r: int, s: int, p: int | None, compare: bool, fmt: str) -> dict:
        _require(r >= 0 and s >= 1, f"Need r >= 0 and s >= 1, got r={r}, s={s}")
        p0 = p if p is not None else min(self.config.primes)
        if fmt == "csv":
            headers = [f"h{i + 1}{j + 1}" for i in range(s) for j in range(s)] + ["det", "type"]
            rows = [[*row["entries"], row["det"], row["type"]] for row in census_rows(s, r, p0)]
            return _success(headers, rows)

        census = census_alpha_rs(s, r, p0)
        headers, rows, diff = ["type", "count"], [], {}
        if compare:
            headers += ["formula", "status"]
        for lam in expected_types(s, r):
            row = [str(lam), census.get(lam)]
            if compare:
                expected = poly_eval(alpha_rs(lam), p0)
                row += [expected, "MATCH" if expected == census.get(lam) else "MISMATCH"]
                if expected != census.get(lam):
                    diff[str(lam)] = {"census": census.get(lam), "formula": expected}
            rows.append(row)
        notes = [f"total {census.total} sublattices of index {p0}^{r} in Z^{s}"]
        if compare:
            expected_total = poly_eval(total_count(r, s), p0)
            notes.append(f"binom({r + s - 1},{s - 1})_p at p={p0} = {expected_total}")
            if expected_total != census.total:
                diff["total"] = {"census": census.total, "formula": expected_total}
        return _success(headers, rows, [census], notes, diff=diff)

    def _verify(self, args: dict) -> dict:
        primes = tuple(args["primes"]) if args.get("primes") else None
        config = self.config.override(bound=args.get("bound"), primes=primes, jobs=args.get("jobs"))
        overrides = {name: args[name] for name in SWEEP_FLAGS if args.get(name) is not None}
        limits = SweepLimits(primes=config.primes, bound=config.bound, **overrides)
        report = summarize(run_sweep(limits, config.jobs))
        rows = [[name, counts["passed"], counts["failed"]] for name, counts in report["families"].items()]
        notes = [f"{report['passed']} passed, {report['failed']} failed: {report['status']}"]
        failed = [check for check in report["checks"] if check["status"] == "FAIL"]
        diff = {"failed": failed} if failed else {}
        return _success(["check", "passed", "failed"], rows, notes=notes, report=report, diff=diff)

    def _show(self, path: str) -> dict:
        records = deserialize_many(Path(path).read_bytes())
        logger.debug(f"Loaded {len(records)} records from {path}")
        return _records_response(records)
