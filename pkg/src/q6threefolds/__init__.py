"""Exact computation and classification of bidegree (1, p) threefolds in the quadric Q6."""

__version__ = "0.1.0"

from .classify import classify_main, irreducible, normalize_p2, smoothness  # noqa: E402
from .intersect import bidegree, degree, meet, span_of  # noqa: E402
from .quadspace import H0, V0, IsoType, LinearSubspace, iso_type  # noqa: E402
from .varieties import Q4Divisor, builtin, segre_divisor  # noqa: E402

__all__ = [
    "H0", "V0", "IsoType", "LinearSubspace", "Q4Divisor", "bidegree", "builtin", "classify_main",
    "degree", "irreducible", "iso_type", "meet", "normalize_p2", "segre_divisor", "smoothness", "span_of",
]
