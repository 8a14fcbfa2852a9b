"""Numeric tolerances and size guards shared across the package."""

import os

# power iteration stopping rule
RQ_REL_TOL = 1e-14
RESIDUAL_TOL = 1e-12
MAX_ITER = 100_000

# every reported eigenpair must satisfy this
REPORT_RESIDUAL_TOL = 1e-10

# closed-form eigenvector checks and orbit constancy
FORMULA_TOL = 1e-9

# strict radius comparisons (theorem margins, family ordering)
MARGIN_TOL = 1e-9

# radius increase required by the relocation / swap lemma checks
LEMMA_MARGIN = 1e-10

# two classes closer than this in rho count as tied
TIE_TOL = 1e-12

# exact algebraic identities (swap delta)
IDENTITY_TOL = 1e-12

DEFAULT_MAX_N = 14
BRUTE_FORCE_MAX_N = 8


def max_n(default: int = DEFAULT_MAX_N) -> int:
    """Size guard for enumeration, overridable with ``HYPERSPEC_MAX_N``."""
    value = os.environ.get("HYPERSPEC_MAX_N")
    if value is None:
        return default
    return int(value)
