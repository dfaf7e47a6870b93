"""Exception types shared across the toolkit."""


class ModcircError(Exception):
    """Base class for every toolkit error."""


class NotAUnit(ModcircError):
    """Element has no multiplicative inverse mod k."""


class InvalidPermutation(ModcircError):
    """Table is not a bijection of [0, k^n)."""


class DimensionMismatch(ModcircError):
    """Operands disagree on modulus or wire count."""


class SizeGuardExceeded(ModcircError):
    """Operation would materialize more data than the configured cap allows."""


class NotInvertible(ModcircError):
    """Matrix determinant is not a unit mod k."""


class NoUnitCombination(ModcircError):
    """No row combination yields a unit pivot; the matrix cannot be invertible."""


class NonLinearGate(ModcircError):
    """Circuit contains a gate with no matrix semantics."""


class EvenModulusUnsupported(ModcircError):
    """General permutation synthesis requires an odd modulus."""


class ParseError(ModcircError):
    """Malformed circuit or permutation text, with the offending line number."""

    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason
