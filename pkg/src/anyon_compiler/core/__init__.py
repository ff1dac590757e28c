"""Configuration, fixture verification and run orchestration."""

from anyon_compiler.core.config import CompilerConfig, CompilerSettings
from anyon_compiler.core.runner import compile_run, result_record, run_sweep, write_result
from anyon_compiler.core.verification import VerificationReport, verify_fixtures

__all__ = [
    "CompilerConfig",
    "CompilerSettings",
    "VerificationReport",
    "compile_run",
    "result_record",
    "run_sweep",
    "verify_fixtures",
    "write_result",
]
