"""Pytest configuration and fixtures."""

import os
from unittest.mock import patch

import pytest

from pgroupcount.cli.executor import CommandExecutor
from pgroupcount.cli.main import main
from pgroupcount.common.config import OracleConfig
from pgroupcount.core.qbinomial import pbinom_cache_clear


@pytest.fixture
def config():
    """Default oracle configuration, independent of the caller's environment."""
    return OracleConfig()


@pytest.fixture
def executor(config):
    """Command executor over the default configuration."""
    return CommandExecutor(config)


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process and return (exit code, stdout, stderr)."""

    def run(*argv: str, env: dict | None = None):
        with patch.dict(os.environ, env or {}):
            code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


@pytest.fixture
def cold_pbinom_cache():
    """Start from an empty p-binomial memo table."""
    pbinom_cache_clear()
    yield
    pbinom_cache_clear()
