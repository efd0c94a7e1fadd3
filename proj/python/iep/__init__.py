"""Exact solver for the isogenous embedding problem.

The heavy lifting lives in the C++ extension; this package re-exports the
operations the solver pipeline is built from plus a JSON-driven runner.
"""

from ._core import (
    ConfigError,
    InternalError,
    achievable_residues,
    enumerate_septuples,
    maximal_order,
    norm_elements,
    run_json,
)

__all__ = [
    "ConfigError",
    "InternalError",
    "achievable_residues",
    "enumerate_septuples",
    "maximal_order",
    "norm_elements",
    "run_json",
]
