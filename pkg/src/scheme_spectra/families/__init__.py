"""Explicit family formulas, their identities, and the checked eigenmatrix."""

from .evaluators import *  # noqa: F401,F403
from .evaluators import __all__ as _eval_all
from .identities import IDENTITY_IDS, IdentityReport, IdentityResult, identity_suite
from .matrix import default_grid, eigenmatrix

__all__ = list(_eval_all) + [
    "eigenmatrix",
    "default_grid",
    "IDENTITY_IDS",
    "IdentityReport",
    "IdentityResult",
    "identity_suite",
]
