"""
CLI Module: batch frontend printing one JSON report per invocation.

Subcommands: pair-check, kernel, criterion, decompose, reduce, count,
hermite, witness, model-check, flow, golden.
"""

from .main import COMMANDS, build_parser, main, run
from .records import CertificateRecord, DerivationRecord, PairRecord, PointFile, Report, Status

__all__ = [
    "COMMANDS",
    "CertificateRecord",
    "DerivationRecord",
    "PairRecord",
    "PointFile",
    "Report",
    "Status",
    "build_parser",
    "main",
    "run",
]
