"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GammaFuzzError(Exception):
    """Base class for all errors raised by gammafuzz."""


# structure / validation

class ValidationError(GammaFuzzError):
    pass


class DuplicateElement(ValidationError):
    pass


class MissingTableEntry(ValidationError):
    pass


class AssociativityViolation(ValidationError):
    """Raised with the first failing tuple (canonical order) of an associative law."""

    def __init__(self, law: int, tuple_ids: tuple, equality: str, values: tuple):
        self.law = law
        self.tuple_ids = tuple_ids
        self.equality = equality
        self.values = values
        super().__init__(
            f"associative law {law} fails at {' '.join(tuple_ids)}: "
            f"{equality} gives {' vs '.join(values)}"
        )


class InvalidZero(ValidationError):
    pass


class InvalidParameters(GammaFuzzError):
    pass


class UnknownElement(GammaFuzzError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


# crisp ideal theory

class EmptySubset(GammaFuzzError):
    pass


class NotAnIdeal(GammaFuzzError):
    pass


class CarrierTooLarge(GammaFuzzError):
    pass


class ZeroRequired(GammaFuzzError):
    pass


class NotCommutative(GammaFuzzError):
    pass


# intuitionistic fuzzy sets

class DegreeError(GammaFuzzError, ValueError):
    pass


class SumExceedsOne(GammaFuzzError):
    def __init__(self, element, mu, nu):
        self.element = element
        self.mu = mu
        self.nu = nu
        super().__init__(f"mu + nu > 1 at {element}: {mu} + {nu}")


class MissingValue(GammaFuzzError):
    pass


class CarrierMismatch(GammaFuzzError):
    pass


class EmptyFamily(GammaFuzzError):
    pass


class ParameterOrderViolation(GammaFuzzError):
    pass


class EmptyIFS(GammaFuzzError):
    pass


class NotAnIFI(GammaFuzzError):
    pass


class SumViolationInExtension(GammaFuzzError):
    pass


# harness / io

class CapExceeded(GammaFuzzError):
    pass


class UnknownCase(GammaFuzzError):
    pass


class ParseError(GammaFuzzError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
