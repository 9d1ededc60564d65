"""Tests for pgroupcount."""
