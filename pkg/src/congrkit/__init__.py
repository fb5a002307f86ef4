"""Exact arithmetic for two families of binomial-sum numbers and the
divisibility, congruence and q-polynomial checks built around them.

Everything is computed over the integers and rationals (and over Z[q] for
the q-analogues); no floating point is involved anywhere.
"""

__version__ = "0.1.0"

from .result import (
    FAIL,
    ILL_POSED,
    INCONCLUSIVE,
    PASS,
    CheckResult,
    summarize,
)
from .sequences import R, R_poly, S, S_m_poly, S_poly

__all__ = [
    "__version__",
    "PASS",
    "FAIL",
    "ILL_POSED",
    "INCONCLUSIVE",
    "CheckResult",
    "summarize",
    "R",
    "S",
    "R_poly",
    "S_poly",
    "S_m_poly",
]
