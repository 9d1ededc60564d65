"""pgroupcount - exact subgroup counts for finite abelian p-groups, checked against brute force."""

# Version is managed by hatch-vcs from Git tags
try:
    from ._version import __version__
except ImportError:  # pragma: no cover
    # Fallback for editable installs without build
    try:
        from importlib.metadata import version

        __version__ = version("pgroupcount")
    except Exception:
        __version__ = "0.0.0.dev0"


from pgroupcount.core.bigpoly import IntPoly, format_poly, parse_poly
from pgroupcount.core.counting import (
    alpha_order,
    alpha_rs,
    butler_alpha,
    chain_count_indices,
    chain_count_types,
    identity_rhs,
    total_count,
)
from pgroupcount.core.partitions import PaddedPartition, Partition, parse_padded, parse_partition
from pgroupcount.core.qbinomial import pbinom
from pgroupcount.core.records import CountRecord

__all__ = [
    "IntPoly",
    "format_poly",
    "parse_poly",
    "Partition",
    "PaddedPartition",
    "parse_partition",
    "parse_padded",
    "pbinom",
    "alpha_rs",
    "butler_alpha",
    "alpha_order",
    "total_count",
    "identity_rhs",
    "chain_count_types",
    "chain_count_indices",
    "CountRecord",
]
