"""Exact and numeric checks for symplectic level subgroups, boolean-polynomial
coinvariants and theta multipliers."""

import json

from . import _core
from ._core import (
    ThetaLabError,
    bar_of_class,
    bp_mul,
    char_apply,
    char_reduce,
    coinvariants,
    contraction,
    igusa_generator,
    in_gamma_p2,
    in_level,
    orbit_index,
    psi,
    theta_eval,
    transvection,
    validate_symplectic,
)

__all__ = [
    "ThetaLabError",
    "bar_of_class",
    "bp_mul",
    "char_apply",
    "char_reduce",
    "coinvariants",
    "contraction",
    "e_value",
    "igusa_generator",
    "in_gamma_p2",
    "in_level",
    "orbit_index",
    "psi",
    "report",
    "run_criterion",
    "theta_eval",
    "transvection",
    "validate_symplectic",
]


def e_value(pair, g, m_tilde, seed=7):
    """Return (k, residual) with e = i**k for the named pair."""
    return _core.e_value(pair, g, m_tilde, seed)


def report(name, *args):
    """Run one verification routine, e.g. report("psi", [4], 1000, 7), and
    return the parsed report."""
    return json.loads(getattr(_core, "check_" + name)(*args))


def run_criterion(criterion, seed=7):
    """Run one acceptance criterion and return its parsed report."""
    return json.loads(_core.run_criterion(criterion, seed))
