"""Exact E1-page, E-polynomial and bound calculator for spaces of maps
between projective varieties."""

from .epoly import EPolynomial
from .errors import (
    InconclusiveError,
    InconsistentDataError,
    InputError,
    MorcohomError,
    NotAcyclicError,
    OracleTooLarge,
)
from .graded import (
    BigradedTable,
    dual_shift,
    e_polynomial,
    pic_table,
    projective_space_table,
    tensor,
)

__version__ = "0.1.0"

__all__ = [
    "BigradedTable",
    "EPolynomial",
    "InconclusiveError",
    "InconsistentDataError",
    "InputError",
    "MorcohomError",
    "NotAcyclicError",
    "OracleTooLarge",
    "dual_shift",
    "e_polynomial",
    "pic_table",
    "projective_space_table",
    "tensor",
]
