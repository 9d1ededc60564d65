"""Exact dense polynomials in ``p`` over arbitrary-precision integers.

A polynomial is stored as a tuple of coefficients starting with the constant term, so
``1 + 2*p + p^2`` is ``(1, 2, 1)``. The zero polynomial is the empty tuple and its degree
is ``None``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from pgroupcount.common.errors import NonExactDivisionError, ZeroPolynomialError

_TERM = re.compile(r"^(?P<coeff>-?\d*)(?:\*?(?P<var>p(?:\^(?P<exp>\d+))?))?$")


@dataclass(frozen=True, init=False)
class IntPoly:
    """Univariate polynomial in ``p`` with exact integer coefficients, kept in canonical form."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = tuple(int(c) for c in coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        """Return ``c * p^k``."""
        if k < 0:
            raise ValueError(f"Negative exponent: {k}")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        """Coefficient of ``p^i`` (zero past the degree)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else poly_add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else poly_add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("Negative powers are not polynomials")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"IntPoly('{format_poly(self)}')"


def _coerce(value) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly.constant(value)
    return NotImplemented


ZERO = IntPoly()
ONE = IntPoly((1,))
P = IntPoly((0, 1))


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    """Coefficientwise exact sum."""
    if len(a) < len(b):
        a, b = b, a
    coeffs = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        coeffs[i] += c
    return IntPoly(coeffs)


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact convolution product."""
    if not a or not b:
        return ZERO
    coeffs = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            coeffs[i + j] += x * y
    return IntPoly(coeffs)


def poly_div_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return ``q`` with ``a == q * b``.

    Raises:
        ZeroDivisionError: if ``b`` is zero
        NonExactDivisionError: if ``b`` does not divide ``a`` over the integers
    """
    if not b:
        raise ZeroDivisionError("Polynomial division by zero")
    if not a:
        return ZERO
    rem = list(a.coeffs)
    db, lead = len(b) - 1, b.coeffs[-1]
    if len(rem) - 1 < db:
        raise NonExactDivisionError(f"{a} is not divisible by {b}", remainder=a)
    quotient = [0] * (len(rem) - db)
    for i in range(len(quotient) - 1, -1, -1):
        c = rem[i + db]
        if c == 0:
            continue
        if c % lead:
            raise NonExactDivisionError(f"{a} is not divisible by {b}", remainder=IntPoly(rem))
        qc = c // lead
        quotient[i] = qc
        for j, bc in enumerate(b.coeffs):
            rem[i + j] -= qc * bc
    remainder = IntPoly(rem)
    if remainder:
        raise NonExactDivisionError(f"{a} is not divisible by {b}", remainder=remainder)
    return IntPoly(quotient)


def poly_eval(a: IntPoly, x: int) -> int:
    """Exact Horner evaluation at an integer."""
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class PolyShape:
    """Shape report for a polynomial.

    For the zero polynomial ``is_zero`` is set, ``p_power`` is None and both flags are False.
    """

    is_zero: bool
    is_unimodal: bool
    is_symmetric: bool
    p_power: int | None
    reduced: IntPoly

    def as_dict(self) -> dict:
        return {
            "zero": self.is_zero,
            "unimodal": self.is_unimodal,
            "symmetric": self.is_symmetric,
            "p_power": self.p_power,
            "reduced": format_poly(self.reduced),
        }


def poly_valuation(a: IntPoly) -> int:
    """Largest ``k`` such that ``p^k`` divides ``a``."""
    if not a:
        raise ZeroPolynomialError("The zero polynomial is divisible by every power of p")
    return next(i for i, c in enumerate(a.coeffs) if c != 0)


def is_unimodal_sequence(seq) -> bool:
    """True if the sequence weakly rises and then weakly falls."""
    seq = list(seq)
    i = 1
    while i < len(seq) and seq[i - 1] <= seq[i]:
        i += 1
    while i < len(seq) and seq[i - 1] >= seq[i]:
        i += 1
    return i >= len(seq)


def poly_shape(a: IntPoly) -> PolyShape:
    """Factor out the largest power of ``p`` and inspect the remaining coefficients."""
    if not a:
        return PolyShape(is_zero=True, is_unimodal=False, is_symmetric=False, p_power=None, reduced=ZERO)
    k = poly_valuation(a)
    reduced = IntPoly(a.coeffs[k:])
    coeffs = reduced.coeffs
    return PolyShape(
        is_zero=False,
        is_unimodal=is_unimodal_sequence(coeffs),
        is_symmetric=coeffs == coeffs[::-1],
        p_power=k,
        reduced=reduced,
    )


def format_poly(a: IntPoly) -> str:
    """Render as ``c0 + c1*p + c2*p^2`` in ascending order, omitting zero terms and unit coefficients."""
    terms = []
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else "p" if i == 1 else f"p^{i}"
        mag = abs(c)
        body = str(mag) if i == 0 else mono if mag == 1 else f"{mag}*{mono}"
        if terms:
            terms.append((" - " if c < 0 else " + ") + body)
        else:
            terms.append(("-" if c < 0 else "") + body)
    return "".join(terms) or "0"


def parse_poly(text: str) -> IntPoly:
    """Parse the format written by :func:`format_poly` (terms may come in any order)."""
    body = text.replace(" ", "")
    if body in ("", "0"):
        return ZERO
    coeffs: dict[int, int] = {}
    for term in body.replace("-", "+-").split("+"):
        if not term:
            continue
        match = _TERM.match(term)
        if not match or (not match["var"] and match["coeff"] in ("", "-")):
            raise ValueError(f"Cannot parse polynomial term {term!r} in {text!r}")
        raw = match["coeff"]
        coeff = -1 if raw == "-" else 1 if raw == "" else int(raw)
        exp = 0 if not match["var"] else int(match["exp"] or 1)
        coeffs[exp] = coeffs.get(exp, 0) + coeff
    top = max(coeffs)
    return IntPoly(coeffs.get(i, 0) for i in range(top + 1))


def poly_sum(polys: Iterable[IntPoly]) -> IntPoly:
    total = ZERO
    for poly in polys:
        total = poly_add(total, poly)
    return total


def poly_prod(polys: Iterable[IntPoly]) -> IntPoly:
    total = ONE
    for poly in polys:
        total = poly_mul(total, poly)
    return total
