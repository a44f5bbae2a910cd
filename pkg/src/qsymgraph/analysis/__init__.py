"""Per-graph verdicts, enumerations of circulant p-graphs, certificates and reports."""

from .certificates import ReplayResult, load_certificate, replay, save_certificate
from .enumeration import enumerate_prime_type, enumerate_symbol_unions, spec_string
from .pipeline import (
    HAS_QS,
    INCONCLUSIVE,
    NO_QS,
    AnalysisReport,
    AnalyzeOptions,
    Verdict,
    analyze,
)
from .render import render_gamma, render_orbitals, render_report, render_table
from .reproduction import ReproductionReport, reproduce_paper_report

__all__ = [
    "ReplayResult", "load_certificate", "replay", "save_certificate",
    "enumerate_prime_type", "enumerate_symbol_unions", "spec_string",
    "HAS_QS", "INCONCLUSIVE", "NO_QS", "AnalysisReport", "AnalyzeOptions", "Verdict", "analyze",
    "render_gamma", "render_orbitals", "render_report", "render_table",
    "ReproductionReport", "reproduce_paper_report",
]
