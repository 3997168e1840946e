"""Python bindings for the hhbounds three-point quadrature error-bound library."""

import json as _json

from ._core import (
    AdmissibilityError,
    ConvergenceError,
    DomainError,
    Error,
    Expr,
    ParseError,
    bound_rhs,
    integrate,
    lhs_value,
    mean,
    means_bound,
    means_gap,
    named_rule,
    optimize_p,
    optimize_rule,
    rule_from_lm,
    run_cli,
)
from . import _core

__all__ = [
    "AdmissibilityError",
    "ConvergenceError",
    "DomainError",
    "Error",
    "Expr",
    "ParseError",
    "bound",
    "bound_rhs",
    "certify",
    "integrate",
    "lhs_value",
    "mean",
    "means_bound",
    "means_gap",
    "named_rule",
    "optimize_p",
    "optimize_rule",
    "rule_from_lm",
    "run_cli",
]


def bound(f, a, b, *, rule=None, lam=None, mu=None, m=None, ell=None, q=1.0, p=None, seed=0):
    """Evaluate one bound instance and return the JSON report as a dict.

    Give the rule as exactly one of ``rule="simpson"``, ``lam=..., mu=...`` or ``m=..., ell=...``.
    With q > 1 and no p, p is chosen by minimising the bound.
    """
    return _json.loads(
        _core.bound_json(f, a, b, rule=rule, lam=lam, mu=mu, m=m, ell=ell, q=q, p=p, seed=seed)
    )


def certify(f, q, a, b, *, samples=4096, seed=0):
    """Sampled midpoint-convexity certificate for |f'|^q on [a, b], as a dict."""
    return _json.loads(_core.certify(f, q, a, b, samples=samples, seed=seed))
