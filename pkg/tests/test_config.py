"""Tests for pgroupcount.common.config module."""

import os
from unittest.mock import patch

import pytest

from pgroupcount.common.config import DEFAULT_BOUND, DEFAULT_PRIMES, OracleConfig, is_prime, parse_primes


class TestPrimes:
    """Test prime parsing."""

    @pytest.mark.parametrize("n, expected", [(0, False), (1, False), (2, True), (9, False), (97, True)])
    def test_is_prime(self, n, expected):
        """Test trial division."""
        assert is_prime(n) is expected

    def test_parse(self):
        """Test comma-separated lists, blanks ignored."""
        assert parse_primes("2,3,5") == (2, 3, 5)
        assert parse_primes(" 7, ") == (7,)

    def test_not_integer(self):
        """Test non-numeric items."""
        with pytest.raises(ValueError, match="Invalid prime list"):
            parse_primes("2,x")

    def test_not_prime(self):
        """Test composites are all named."""
        with pytest.raises(ValueError, match="Not prime: 4, 9"):
            parse_primes("2,4,9")


class TestOracleConfig:
    """Test OracleConfig class."""

    def test_defaults(self):
        """Test an empty environment."""
        config = OracleConfig.from_env({})
        assert config == OracleConfig()
        assert config.bound == DEFAULT_BOUND
        assert config.primes == DEFAULT_PRIMES
        assert config.jobs == 1

    def test_from_env(self):
        """Test every variable is read."""
        env = {"PGROUPCOUNT_BOUND": "64", "PGROUPCOUNT_PRIMES": "5,7", "PGROUPCOUNT_JOBS": "3"}
        with patch.dict(os.environ, env, clear=True):
            config = OracleConfig.from_env()
        assert config == OracleConfig(bound=64, primes=(5, 7), jobs=3)

    def test_bad_env(self):
        """Test malformed values raise ValueError."""
        with pytest.raises(ValueError):
            OracleConfig.from_env({"PGROUPCOUNT_BOUND": "lots"})
        with pytest.raises(ValueError):
            OracleConfig.from_env({"PGROUPCOUNT_PRIMES": "6"})

    def test_override(self):
        """Test None keeps the current value."""
        config = OracleConfig(bound=10).override(bound=None, primes=(11,), jobs=None)
        assert config == OracleConfig(bound=10, primes=(11,), jobs=1)
