"""Efficiency analysis of weight vectors for pairwise comparison matrices."""

import json

from ._core import (
    ParseError,
    PcmError,
    ValidationError,
    VerdictConflict,
    __version__,
    acyclic_dominator,
    dominates,
    generate,
    geometric_mean,
    handle_request,
    principal_eigenvector,
    run_cli,
)
from . import _core


def analyze(matrix, weights=None, method="eigenvector", tau_eq=1e-9, eps_opt=1e-7):
    """Full report (efficiency and weak efficiency) as a dict."""
    return json.loads(_core.analyze_json(matrix, weights, method, tau_eq, eps_opt))


def is_efficient(matrix, weights=None, method="eigenvector"):
    return analyze(matrix, weights, method)["efficiency"]["verdict"] == "efficient"


def experiment(n, mode="saaty_discrete", trials=100, seed=0, sigma=0.35):
    return json.loads(_core.experiment_json(n, mode, trials, seed, sigma))


__all__ = [
    "ParseError",
    "PcmError",
    "ValidationError",
    "VerdictConflict",
    "__version__",
    "acyclic_dominator",
    "analyze",
    "dominates",
    "experiment",
    "generate",
    "geometric_mean",
    "handle_request",
    "is_efficient",
    "principal_eigenvector",
    "run_cli",
]
