"""Radii of concavity for classes of analytic functions."""

import json

from . import _core
from ._core import (
    ConcavityError,
    closed_form_root,
    empirical_radius,
    eval_phi,
    eval_Pf,
    eval_Tf,
    grid,
    least_root,
    limit_Pf_at_pole,
    radius_of_convexity,
    witness_test,
)

__all__ = [
    "ConcavityError",
    "closed_form_root",
    "empirical_radius",
    "eval_phi",
    "eval_Pf",
    "eval_Tf",
    "grid",
    "least_root",
    "limit_Pf_at_pole",
    "radius",
    "radius_of_convexity",
    "verify",
    "witness_test",
]


def radius(cls, A=2.0, tol=1e-12, **params):
    """Solver radius report for a class, as a dict (same layout as the CLI JSON)."""
    return json.loads(_core.radius_report(cls, {k: float(v) for k, v in params.items()}, A, tol))


def verify(cls, A=2.0, samples=2048, empirical_tol=1e-9, **params):
    """Solver radius against the class extremal, as a dict (same layout as the CLI JSON)."""
    return json.loads(
        _core.verify_report(cls, {k: float(v) for k, v in params.items()}, A, samples, empirical_tol)
    )
