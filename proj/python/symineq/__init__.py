"""Exact verification of inequalities among normalized symmetric functions.

All rational values are exact: the core computes with arbitrary-precision
rationals and this wrapper converts them to fractions.Fraction at the
boundary. Anything accepted where a rational is expected may be an int, a
Fraction, or a 'p/q' string.
"""

import json
from fractions import Fraction

from symineq import _core
from symineq._core import REPORT_SCHEMA, __version__, majorizes, verify_dh_identity

__all__ = [
    "REPORT_SCHEMA",
    "__version__",
    "certify_d8",
    "counterexample_pair",
    "eval_normalized",
    "majorizes",
    "normalization_constant",
    "partitions",
    "profile_scan",
    "sample_check",
    "t_ratio",
    "theorem",
    "verify_dh_identity",
]


def _rat_out(text):
    return Fraction(text)


def _rat_in(value):
    return str(Fraction(value))


def _point_in(x):
    return [_rat_in(c) for c in x]


def _witness_out(w):
    if w is None:
        return None
    return {
        "x": tuple(_rat_out(c) for c in w["x"]),
        "mu_value": _rat_out(w["mu_value"]),
        "lambda_value": _rat_out(w["lambda_value"]),
    }


def partitions(d):
    """Partitions of d in reverse-lexicographic order, as tuples."""
    return [tuple(p) for p in _core.partitions(d)]


def counterexample_pair(d):
    """The degree-d pair (mu, lambda) with mu not majorizing lambda whose
    normalized-h inequality nevertheless holds; defined for d >= 8."""
    mu, lam = _core.counterexample_pair(d)
    return tuple(mu), tuple(lam)


def eval_normalized(family, lambda_, x):
    """F_lambda(x) = f_lambda(x) / f_lambda(1,...,1) as a Fraction."""
    return _rat_out(_core.eval_normalized(family, list(lambda_), _point_in(x)))


def normalization_constant(family, n, lambda_):
    """f_lambda(1,...,1) as a Fraction."""
    return _rat_out(_core.normalization_constant(family, n, list(lambda_)))


def t_ratio(n):
    """The boundary-induction ratio T(n) as a Fraction."""
    return _rat_out(_core.t_ratio(n))


def profile_scan(mu, lambda_, n, t_grid=None, family="h"):
    """Exact minimum of F_mu - F_lambda over two-value profiles (t^u, 1^v)."""
    grid = [] if t_grid is None else [_rat_in(t) for t in t_grid]
    raw = _core.profile_scan(list(mu), list(lambda_), n, grid, family)
    return {
        "minimum": _rat_out(raw["minimum"]),
        "t": _rat_out(raw["t"]),
        "u": raw["u"],
        "v": raw["v"],
        "evaluations": raw["evaluations"],
    }


def sample_check(mu, lambda_, n, samples=200, seed=0, family="h", bound=100):
    """Seeded falsifier for F_mu >= F_lambda at fixed n. Deterministic in
    (mu, lambda, n, samples, seed, family, bound)."""
    raw = _core.sample_check(list(mu), list(lambda_), n, samples, seed, family, bound)
    return {
        "mu": tuple(raw["mu"]),
        "lambda": tuple(raw["lambda"]),
        "status": raw["status"],
        "witness": _witness_out(raw["witness"]),
        "evidence": list(raw["evidence"]),
    }


def certify_d8():
    """The full symbolic certificate for H_{n,(2^4)} >= H_{n,(3,1^5)}, as the
    parsed report dict."""
    return json.loads(_core.certify_d8_report())


def theorem(d, n_lo=1, n_hi=3, samples=100, seed=0):
    """Evidence bundle for the degree-d incomparable pair: (report dict,
    exit code). Exit 0 means every check supported the claim."""
    raw = _core.theorem_report(d, n_lo, n_hi, samples, seed)
    return json.loads(raw["report"]), raw["exit_code"]
