"""Python access to the q-series identity catalog.

Numbers cross the boundary as strings: rationals as "p/r" or decimals,
results as decimal strings at the requested precision.
"""

import json

from . import _core
from ._core import DomainError, __version__, eval_side, finite_sum_identity, list_identities

__all__ = [
    "DomainError",
    "__version__",
    "eval_side",
    "finite_sum_identity",
    "limit",
    "list_identities",
    "verify",
]


def verify(identity=None, *, q=None, digits=60, tol=None):
    """Verify one identity (or all of them) and return the report document."""
    return json.loads(_core.verify_json(identity, q, digits, tol))


def limit(identity, *, exponent=None, digits=30):
    """Extrapolate (1-q)^a LHS(q) to q = 1 and return the result record."""
    return json.loads(_core.limit_json(identity, exponent, digits))
