"""Exception and warning types raised across gmpath.

Every error derives from :class:`GmpathError`; input problems additionally
derive from :class:`ValueError` so callers can treat them as bad arguments.
"""

from __future__ import annotations

from typing import Any


class GmpathError(Exception):
    """Root of all gmpath errors."""


class ParseError(GmpathError, ValueError):
    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where = f"{where}{line}:"
        super().__init__(f"{where} {message}".strip() if where else message)


class AmbientMismatchError(GmpathError, ValueError):
    """Operands belong to different algebras."""


class InfiniteDimensionError(GmpathError, ValueError):
    """A finite-dimensional materialization was requested without a bound."""


class RelationError(GmpathError, ValueError):
    def __init__(self, message: str, witness: Any = None):
        self.witness = witness
        super().__init__(message)


class AssociativityError(GmpathError, ValueError):
    def __init__(self, message: str, witness: tuple[str, str, str] | None = None):
        self.witness = witness
        super().__init__(message)


class NonUnitalError(GmpathError, ValueError):
    """A unital algebra was required."""


class NotAnIdealError(GmpathError, ValueError):
    def __init__(self, message: str, witness: Any = None):
        self.witness = witness
        super().__init__(message)


class DimensionBoundError(GmpathError, ValueError):
    def __init__(self, dim: int, bound: int, hint: str = "use the closed-form check instead"):
        self.dim = dim
        self.bound = bound
        super().__init__(f"algebra dimension {dim} exceeds oracle bound {bound}; {hint}")


class FormulaNotApplicableError(GmpathError):
    """A closed formula was refused because its hypotheses are not met."""


class ModuleAlgebraError(GmpathError, ValueError):
    def __init__(self, message: str, witness: Any = None):
        self.witness = witness
        super().__init__(message)


class ParameterConstraintError(GmpathError, ValueError):
    """Family or parameter constraint violated."""


class OracleInconsistencyError(GmpathError):
    """An oracle failed its own post-condition."""


class OmegaRadicalWarning(UserWarning):
    """A vertex algebra has a nonzero Jacobson radical."""


class EmptyCorpusWarning(UserWarning):
    """A verification corpus contained no fixtures."""
