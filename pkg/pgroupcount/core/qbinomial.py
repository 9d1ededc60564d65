"""The p-binomial coefficient, computed by recurrence and by box enumeration."""

from functools import lru_cache

from pgroupcount.core.bigpoly import ONE, ZERO, IntPoly, poly_add, poly_mul
from pgroupcount.core.partitions import enum_in_box

# Bounds the recursion depth of a cold cache.
_WARM_STEP = 128


@lru_cache(maxsize=None)
def _pbinom(n: int, k: int) -> IntPoly:
    if k == 0:
        return ONE
    if k < 0 or k > n:
        return ZERO
    return poly_add(_pbinom(n - 1, k - 1), poly_mul(IntPoly.monomial(k), _pbinom(n - 1, k)))


def pbinom(n: int, k: int) -> IntPoly:
    """Gaussian binomial ``binom(n, k)_p``; zero when ``k > n``.

    Uses ``binom(n, l) = binom(n-1, l-1) + p^l binom(n-1, l)``, so no polynomial division is
    needed. Results are memoized; concurrent callers may race on a key but store equal values.
    """
    for m in range(_WARM_STEP, n, _WARM_STEP):
        for j in range(max(0, k - (n - m)), min(k, m) + 1):
            _pbinom(m, j)
    return _pbinom(n, k)


def pbinom_cache_clear():
    _pbinom.cache_clear()


def pbinom_box(n: int, k: int) -> IntPoly:
    """Sum of ``p^|lam|`` over partitions fitting in a ``k x (n-k)`` box."""
    if k < 0 or k > n:
        return ZERO
    coeffs = [0] * (k * (n - k) + 1)
    for lam in enum_in_box(k, n - k):
        coeffs[lam.weight] += 1
    return IntPoly(coeffs)


def pbinom_product_eval(n: int, k: int, p0: int) -> int:
    """Evaluate the defining product ``prod_i (p0^(n-i) - 1) / (p0^(k-i) - 1)`` in exact integers."""
    if k < 0 or k > n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= p0 ** (n - i) - 1
        den *= p0 ** (k - i) - 1
    quotient, remainder = divmod(num, den)
    if remainder:
        raise ArithmeticError(f"binom({n},{k}) product is not integral at p={p0}")
    return quotient
