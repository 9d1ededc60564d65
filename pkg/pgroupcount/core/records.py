"""Query/answer records produced by the counting formulas."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

from pgroupcount.core.bigpoly import IntPoly, poly_eval


@dataclass(frozen=True)
class CountRecord:
    """A counting query, its polynomial answer, and optional evaluations at primes.

    Attributes:
        kind: Which formula answered the query (``"alpha_rs"``, ``"butler"``, ``"chain_types"`` ...)
        params: Query parameters; partitions are kept in their text form (``"2,0"``)
        answer: The polynomial in p
        evals: prime -> answer evaluated at that prime
    """

    kind: str
    params: dict
    answer: IntPoly
    evals: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if any(c < 0 for c in self.answer.coeffs):
            raise ValueError(f"{self.kind} answer has a negative coefficient: {self.answer}")
        for prime, value in self.evals.items():
            if poly_eval(self.answer, prime) != value:
                raise ValueError(f"{self.kind} evaluation at p={prime} is {value}, expected {self.answer(prime)}")

    def evaluate(self, primes: Iterable[int]) -> CountRecord:
        """Return a copy whose ``evals`` also covers ``primes``."""
        evals = dict(self.evals)
        for prime in primes:
            evals[prime] = poly_eval(self.answer, prime)
        return replace(self, evals=dict(sorted(evals.items())))
