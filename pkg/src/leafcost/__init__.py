"""Minimum leaf numbers and fault costs of 2-connected graphs."""

__version__ = "0.1.0"
