"""Zero-divisor graphs of finite commutative rings."""

import json

from ._zdg import *  # noqa: F401,F403
from ._zdg import _run_suite_json

__all__ = [name for name in dir() if not name.startswith("_")]


def run_suite(name, max_n=200, max_order=200, boolean_max_n=7, gap_max_k=6,
              gap_bound_max_k=15, exhaustive_limit=5_000_000, workers=1):
    """Run a theorem suite; returns (report dict, exit status)."""
    text, status = _run_suite_json(name, max_n, max_order, boolean_max_n,
                                   gap_max_k, gap_bound_max_k,
                                   exhaustive_limit, workers)
    return json.loads(text), status
