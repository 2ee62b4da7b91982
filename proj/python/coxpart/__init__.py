"""Bipartitions and weak-order intervals of Coxeter groups."""

import json

from ._core import ENGINE_VERSION, Ball, CoxpartError, format_poly, perm

__all__ = ["ENGINE_VERSION", "Ball", "CoxpartError", "format_poly", "perm", "genfun", "verify"]


def genfun(group, max_len, stat="bip", workers=1, cache_dir=None):
    """Coefficients of the length generating function, index = length."""
    ball = Ball.cached(group, max_len, cache_dir)
    if stat == "bip":
        return ball.bip_genfun(workers)
    if stat == "pirr":
        return ball.pirr_genfun(workers)
    raise ValueError("stat must be 'bip' or 'pirr'")


def verify(group, conjecture, max_len, workers=1, cache_dir=None):
    """Report for one conjecture over every element up to max_len."""
    report = json.loads(Ball.cached(group, max_len, cache_dir).verify(conjecture, workers))
    report["group"] = group
    return report
