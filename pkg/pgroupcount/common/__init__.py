"""Shared errors, configuration and serialization for pgroupcount."""
