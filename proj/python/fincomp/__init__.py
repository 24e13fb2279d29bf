"""Entropy-weighted financial competitiveness scoring."""

import json as _json

from ._core import (
    CdfEstimate,
    FincompError,
    __version__,
    column_entropy,
    continuous_entropy,
    describe,
    discrete_entropy,
    entropy_weights,
    estimate_cdf,
    normalize_inverse,
    normalize_positive,
    pearson,
    pearson_matrix,
)
from . import _core as _core_module


def analyze(data, **kwargs):
    """Run the full scoring pipeline on a CSV file.

    Returns a dict with ``scores``, ``weights``, ``stats`` and ``diagnostics``.
    Pass ``write=True`` to also produce the output files in ``out``.
    """
    return _json.loads(_core_module.analyze_json(str(data), **kwargs))


def default_registry():
    """The built-in indicator registry as a list of dicts."""
    return _json.loads(_core_module.default_registry_json())


__all__ = [
    "CdfEstimate",
    "FincompError",
    "__version__",
    "analyze",
    "column_entropy",
    "continuous_entropy",
    "default_registry",
    "describe",
    "discrete_entropy",
    "entropy_weights",
    "estimate_cdf",
    "normalize_inverse",
    "normalize_positive",
    "pearson",
    "pearson_matrix",
]
