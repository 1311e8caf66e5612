"""Exception hierarchy.

``MathematicalFailure`` subclasses signal that a structural check failed on
valid input (the CLI maps them to exit status 1); ``InputError`` subclasses
signal a malformed request (exit status 2).
"""
from __future__ import annotations


class ExtriredError(Exception):
    pass


class InputError(ExtriredError, ValueError):
    pass


class MathematicalFailure(ExtriredError):
    pass


class InvalidPresentation(InputError):
    pass


class SpecParseError(InputError):
    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        where = []
        if field:
            where.append(f"field {field!r}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.field = field
        self.line = line


class InternalMismatch(ExtriredError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class NotSelfInjective(MathematicalFailure):
    pass


class NotFrobenius(MathematicalFailure):
    pass


class NotExtensionClosed(MathematicalFailure):
    def __init__(self, a, b, c):
        super().__init__(f"middle term {b} of a non-split conflation {a} -> {b} -> {c} leaves the subcategory")
        self.witness = (a, b, c)


class ExtDimTooLarge(MathematicalFailure):
    def __init__(self, c, a, dim):
        super().__init__(f"dim E({c}, {a}) = {dim} > 1; middle-term enumeration needs a single class")
        self.witness = (c, a, dim)


class NoEnoughProjectives(MathematicalFailure):
    pass


class NoEnoughInjectives(MathematicalFailure):
    pass


class CoconeEscapesRoster(MathematicalFailure):
    def __init__(self, target, cocone):
        super().__init__(f"cocone {cocone} of the approximation of {target} is not in the category")
        self.witness = (target, cocone)


class ConeEscapesRoster(MathematicalFailure):
    def __init__(self, source, cone):
        super().__init__(f"cone {cone} of the approximation of {source} is not in the category")
        self.witness = (source, cone)


class MaskedClassUndetermined(MathematicalFailure):
    """A block-crossing component of an extension class could be nonzero."""


class NotRigid(MathematicalFailure):
    pass


class OrthogonalityFails(MathematicalFailure):
    pass


class SearchSpaceExceeded(MathematicalFailure):
    pass


class TheoremViolation(MathematicalFailure):
    """A computed instance contradicts a statement that must hold under its hypotheses."""
