"""Exception types shared across the package.

Structural failures carry an optional ``witness`` tuple of element labels so
that callers (and tests) can re-check the offending instance.
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for every validation or hypothesis failure."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


class UnknownLabel(AlgebraError):
    """A label does not occur in the carrier."""


class NotAPoset(AlgebraError):
    """Reflexivity, antisymmetry or transitivity is violated."""


class NotALattice(AlgebraError):
    """Some pair of elements lacks a greatest lower or least upper bound."""


class NotAMonoid(AlgebraError):
    """A binary table is not commutative, associative or unital."""


class NoResiduum(AlgebraError):
    """No residuum table is compatible with the given monoid operation."""


class NotMV(AlgebraError):
    """The (oplus, neg, zero) tables do not form an MV-algebra."""


class ImpMismatch(AlgebraError):
    """A supplied residuum table disagrees with the derived one."""


class PreconditionViolated(AlgebraError):
    """A checker was called on input outside its stated precondition."""


class HypothesisViolated(AlgebraError):
    """A construction or conditional check is missing a required hypothesis."""


class SizeOutOfRange(AlgebraError):
    """Enumeration request outside the supported size range."""


class UnknownTarget(AlgebraError):
    """Enumeration task names no known verification target."""


class DocumentSyntaxError(AlgebraError):
    """Algebra file is not syntactically well formed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class DocumentValidationError(AlgebraError):
    """Algebra file is well formed but violates the document schema."""
