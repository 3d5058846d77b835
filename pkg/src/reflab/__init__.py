"""Exact-arithmetic invariants of finite complex matrix groups.

Subpackages cover cyclotomic linear algebra (`cyclo`), finite reflection-group
structure (`groups`), Hochschild dimension profiles and orbifold descriptors
(`invariants`), Dunkl-operator relation checks (`dunkl`), brute-force
Hochschild chains (`hochschild`), characteristic-series and index-density
engineering (`series`), text formats (`formats`) and the command line (`cli`).
"""

from .cyclo import CyclotomicNumber, CycloMatrix, char_det, cyclo, kernel_basis, reduce, zeta
from .errors import (
    CapExceeded,
    ConductorMismatch,
    DivisionFailure,
    HypothesisViolated,
    IdentityViolation,
    MalformedDescriptor,
    MissingMoment,
    NonIntegral,
    NotInvertible,
    NotReflectionGroup,
    Overflow,
    ReflabError,
    TruncationTooLow,
)

__all__ = [
    "CyclotomicNumber",
    "CycloMatrix",
    "char_det",
    "cyclo",
    "kernel_basis",
    "reduce",
    "zeta",
    "ReflabError",
    "CapExceeded",
    "ConductorMismatch",
    "DivisionFailure",
    "HypothesisViolated",
    "IdentityViolation",
    "MalformedDescriptor",
    "MissingMoment",
    "NonIntegral",
    "NotInvertible",
    "NotReflectionGroup",
    "Overflow",
    "TruncationTooLow",
]

__version__ = "0.1.0"
