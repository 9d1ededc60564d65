"""Smith normal form by exact elementary row and column operations."""

from pgroupcount.common.errors import NotPrimePowerError, SingularMatrixError
from pgroupcount.core.partitions import PaddedPartition
from pgroupcount.oracle.matrix import IntMatrix


def _pivot(a: list[list[int]], t: int) -> tuple[int, int]:
    n = len(a)
    best = None
    for i in range(t, n):
        for j in range(t, n):
            if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def snf(m: IntMatrix) -> tuple[int, ...]:
    """Smith invariants ``d_1, ..., d_s`` of a nonsingular matrix, largest first (``d_(i+1)`` divides ``d_i``).

    Raises:
        SingularMatrixError: if ``det(m) == 0``
    """
    if m.det() == 0:
        raise SingularMatrixError(f"Matrix {m} is singular")
    a = [list(row) for row in m.rows]
    n = len(a)
    invariants = []
    for t in range(n):
        while True:
            i, j = _pivot(a, t)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            pivot = a[t][t]

            clean = True
            for i in range(t + 1, n):
                q = a[i][t] // pivot
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                clean = clean and a[i][t] == 0
            for j in range(t + 1, n):
                q = a[t][j] // pivot
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                clean = clean and a[t][j] == 0
            if not clean:
                continue

            # pivot must divide the whole trailing block
            bad = next((i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % pivot), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        invariants.append(abs(a[t][t]))
    return tuple(reversed(invariants))


def p_valuation(n: int, p0: int) -> int:
    """Exponent ``k`` with ``n == p0^k``."""
    if n <= 0:
        raise NotPrimePowerError(f"{n} is not a power of {p0}")
    k = 0
    while n % p0 == 0:
        n //= p0
        k += 1
    if n != 1:
        raise NotPrimePowerError(f"{n * p0**k} is not a power of {p0}")
    return k


def quotient_type(h: IntMatrix, p0: int) -> PaddedPartition:
    """Type of ``Z^s / rowspan(h)`` as a padded partition of length ``s``."""
    det = abs(h.det())
    if det == 0:
        raise SingularMatrixError(f"Matrix {h} is singular")
    p_valuation(det, p0)
    return PaddedPartition(tuple(p_valuation(d, p0) for d in snf(h)))
