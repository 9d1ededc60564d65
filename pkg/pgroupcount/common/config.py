"""Runtime configuration read from the environment."""

import os
from dataclasses import dataclass, field, replace

DEFAULT_BOUND = 2**12
DEFAULT_PRIMES = (2, 3)


def is_prime(n: int) -> bool:
    """Trial-division primality test (inputs here are tiny)."""
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def parse_primes(text: str) -> tuple[int, ...]:
    """Parse a comma-separated prime list such as ``"2,3,5"``."""
    try:
        primes = tuple(int(item) for item in text.split(",") if item.strip())
    except ValueError as e:
        raise ValueError(f"Invalid prime list: {text!r}") from e
    bad = [q for q in primes if not is_prime(q)]
    if bad:
        raise ValueError(f"Not prime: {', '.join(map(str, bad))}")
    return primes


@dataclass(frozen=True)
class OracleConfig:
    """Knobs for the brute-force oracle and verification sweeps.

    Attributes:
        bound: Largest group order / index the exhaustive oracles will touch
        primes: Primes used when evaluating polynomials against the oracle
        jobs: Worker processes for sweeps (1 runs everything in-process)
    """

    bound: int = DEFAULT_BOUND
    primes: tuple[int, ...] = field(default=DEFAULT_PRIMES)
    jobs: int = 1

    @classmethod
    def from_env(cls, environ=None) -> "OracleConfig":
        """Build config from PGROUPCOUNT_* environment variables."""
        environ = os.environ if environ is None else environ
        return cls(
            bound=int(environ.get("PGROUPCOUNT_BOUND", DEFAULT_BOUND)),
            primes=parse_primes(environ["PGROUPCOUNT_PRIMES"]) if "PGROUPCOUNT_PRIMES" in environ else DEFAULT_PRIMES,
            jobs=int(environ.get("PGROUPCOUNT_JOBS", "1")),
        )

    def override(self, **kwargs) -> "OracleConfig":
        """Return a copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})
