"""Observability: structured logging."""

from anyon_compiler.observability.logging import setup_logging

__all__ = ["setup_logging"]
