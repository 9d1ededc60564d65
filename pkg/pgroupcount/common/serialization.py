"""JSON and msgpack codecs for polynomials, count records and censuses.

Every integer that can grow (coefficients, evaluations, totals) is written as a decimal
string: JSON readers and msgpack both lose precision above 64 bits.
"""

import io
import json
import logging
import traceback
from typing import Iterable

import msgpack

from pgroupcount.common.errors import PGroupCountError, SizeGuardError, VerificationMismatch
from pgroupcount.core.bigpoly import IntPoly
from pgroupcount.core.partitions import format_parts, parse_padded
from pgroupcount.core.records import CountRecord
from pgroupcount.oracle.census import Census

logger = logging.getLogger(__name__)


def poly_to_dict(poly: IntPoly) -> dict:
    return {"coeffs": [str(c) for c in poly.coeffs]}


def poly_from_dict(data: dict) -> IntPoly:
    return IntPoly(int(c) for c in data["coeffs"])


def record_to_dict(record: CountRecord) -> dict:
    return {
        "kind": record.kind,
        "params": {k: record.params[k] for k in sorted(record.params)},
        "coeffs": [str(c) for c in record.answer.coeffs],
        "evals": {str(prime): str(value) for prime, value in sorted(record.evals.items())},
    }


def record_from_dict(data: dict) -> CountRecord:
    return CountRecord(
        kind=data["kind"],
        params=dict(data.get("params", {})),
        answer=IntPoly(int(c) for c in data["coeffs"]),
        evals={int(prime): int(value) for prime, value in data.get("evals", {}).items()},
    )


def census_to_dict(census: Census) -> dict:
    return {
        "s": census.s,
        "r": census.r,
        "p": census.p,
        "total": str(census.total),
        "by_type": {format_parts(lam.parts): str(count) for lam, count in census.tally.items()},
    }


def census_from_dict(data: dict) -> Census:
    census = Census(
        s=data["s"],
        r=data["r"],
        p=data["p"],
        tally={parse_padded(key, data["s"]): int(count) for key, count in data["by_type"].items()},
    )
    if "total" in data and int(data["total"]) != census.total:
        raise ValueError(f"Census total {data['total']} does not match its tally ({census.total})")
    return census


def to_dict(obj) -> dict:
    if isinstance(obj, CountRecord):
        return record_to_dict(obj)
    if isinstance(obj, Census):
        return census_to_dict(obj)
    if isinstance(obj, IntPoly):
        return poly_to_dict(obj)
    raise TypeError(f"Cannot serialize {type(obj).__name__}")


def from_dict(data: dict):
    if "kind" in data:
        return record_from_dict(data)
    if "by_type" in data:
        return census_from_dict(data)
    if "coeffs" in data:
        return poly_from_dict(data)
    raise ValueError(f"Unrecognized payload with keys {sorted(data)}")


def to_json(obj) -> str:
    """Stable JSON text; ``to_json(from_json(text)) == text`` for any text this function wrote."""
    return json.dumps(to_dict(obj), ensure_ascii=False)


def from_json(text: str):
    return from_dict(json.loads(text))


def serialize(obj) -> bytes:
    """Serialize to msgpack bytes."""
    return msgpack.packb(to_dict(obj), use_bin_type=True)


def deserialize(data: bytes):
    """Deserialize msgpack bytes written by :func:`serialize`."""
    return from_dict(msgpack.unpackb(data, raw=False, strict_map_key=False))


def serialize_many(objs: Iterable) -> bytes:
    """Concatenate one msgpack document per object, the format of ``--save`` files."""
    return b"".join(serialize(obj) for obj in objs)


def deserialize_many(data: bytes) -> list:
    unpacker = msgpack.Unpacker(io.BytesIO(data), raw=False, strict_map_key=False)
    return [from_dict(item) for item in unpacker]


def error_report(exc: Exception, with_traceback: bool = False) -> dict:
    """Machine-readable description of an exception for CLI output."""
    report = {
        "exception_type": f"{exc.__class__.__module__}.{exc.__class__.__name__}",
        "exception_message": str(exc),
    }
    if isinstance(exc, VerificationMismatch):
        report["diff"] = exc.diff
    if isinstance(exc, SizeGuardError):
        report["size"] = exc.size
        report["bound"] = exc.bound
    if with_traceback:
        report["traceback"] = "".join(traceback.format_exception(exc))
    if not isinstance(exc, PGroupCountError):
        logger.debug(f"Reporting unexpected {report['exception_type']}: {exc!r}")
    return report
