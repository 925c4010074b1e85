"""Integrability analysis of FRW cosmologies with a scalar field."""

import json as _json

from . import _frwgalois
from ._frwgalois import (
    REPORT_SCHEMA,
    AnalysisInputError,
    DynamicsError,
    compare_appendix_a,
    compare_appendix_b,
)

__all__ = [
    "REPORT_SCHEMA",
    "AnalysisInputError",
    "DynamicsError",
    "analyze_minimal",
    "analyze_conformal",
    "hve_check",
    "darboux",
    "verify_integrals",
    "simulate",
    "compare_appendix_a",
    "compare_appendix_b",
    "mle",
]


def _q(x):
    """Rationals travel as strings ("p/q"); ints and Fractions are accepted."""
    return str(x)


def analyze_minimal(k, Lambda, m2, E="generic", hve=False, hve_order=5):
    return _json.loads(_frwgalois.analyze_minimal_json(k, _q(Lambda), _q(m2), _q(E), hve, hve_order))


def analyze_conformal(k, Lambda, lambda_, m2, E="generic"):
    return _json.loads(_frwgalois.analyze_conformal_json(k, _q(Lambda), _q(lambda_), _q(m2), _q(E)))


def hve_check(n, k=None, E=None, max_order=5):
    """k and E default to symbolic."""
    return _json.loads(
        _frwgalois.hve_check_json(n, None if k is None else _q(k), None if E is None else _q(E), max_order)
    )


def darboux(Lambda, lambda_, m2):
    return _json.loads(_frwgalois.darboux_json(_q(Lambda), _q(lambda_), _q(m2)))


def verify_integrals():
    return _json.loads(_frwgalois.verify_integrals_json())


def simulate(model, k, Lambda, lambda_, m2, state, eta0, eta1, samples=100, rel_tol=1e-12, abs_tol=1e-12):
    """Dense trajectory: dict with eta, states (q1, p1, q2, p2), energy, max_energy_drift."""
    return _frwgalois.simulate_raw(
        model, k, _q(Lambda), _q(lambda_), _q(m2), list(state), eta0, eta1, samples, rel_tol, abs_tol
    )


def mle(model, k, Lambda, lambda_, m2, state, span, renormalize_every=1.0):
    """Largest Lyapunov exponent estimate over the given span."""
    return _frwgalois.mle_raw(model, k, _q(Lambda), _q(lambda_), _q(m2), list(state), span, renormalize_every)
