"""Exact eigenmatrices of classical distance-regular association schemes and
the extremal behaviour of their columns."""

from .errors import ConsistencyError, DomainError, InvalidParametersError, PreconditionError, UsageError
from .schemes import (
    Alternating,
    Bilinear,
    ClassicalParams,
    DualPolar,
    EigenMatrix,
    Grassmann,
    Hamming,
    Hermitian,
    Johnson,
    SchemeId,
    family_to_classical,
    multiplicities,
    p_matrix,
    parse_scheme,
    spectrum,
)

__version__ = "0.1.0"
