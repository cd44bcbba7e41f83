"""Level-continuous fuzzy analysis.

Thin wrapper around the compiled core.  Report-producing operations return
plain dicts decoded from the core's JSON form.
"""

import json as _json

from ._lcfuzz import (
    CompactDomain,
    DomainError,
    FuzzyMap,
    FuzzyNumber,
    PLJFunction,
    SchemaError,
    add,
    cone_combine,
    d_hausdorff_at,
    d_infinity,
    fixtures,
    isometry_residual,
    metric_D,
    scale,
    sup_distance,
)
from ._lcfuzz import classify_continuity_json as _classify_json
from ._lcfuzz import compare_convergence_json as _compare_json

__all__ = [
    "CompactDomain",
    "DomainError",
    "FuzzyMap",
    "FuzzyNumber",
    "PLJFunction",
    "SchemaError",
    "add",
    "classify_continuity",
    "compare_convergence",
    "cone_combine",
    "d_hausdorff_at",
    "d_infinity",
    "fixtures",
    "isometry_residual",
    "metric_D",
    "scale",
    "sup_distance",
]


def classify_continuity(map_, point, mode="level", tol=1e-6):
    """Classify continuity of a fuzzy map at a domain point index."""
    return _json.loads(_classify_json(map_, point, mode, tol))


def compare_convergence(seq, target, tol=1e-6):
    """Level-wise vs d_infinity convergence of a sequence of fuzzy numbers."""
    return _json.loads(_compare_json(seq, target, tol))
