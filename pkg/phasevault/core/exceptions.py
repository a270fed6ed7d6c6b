"""Error taxonomy.

Every failure the library can report is a :class:`PhaseVaultError`. Errors
caused by a bad argument also subclass :class:`ValueError`, so callers that
only know about the builtin keep working.
"""

from __future__ import annotations

__all__ = [
    "PhaseVaultError",
    "NotPrime",
    "Reducible",
    "SizeCapExceeded",
    "ContextMismatch",
    "ZeroInverse",
    "SingularGram",
    "LengthMismatch",
    "BasisMismatch",
    "NotSelfdual",
    "ZeroSqueeze",
    "EvenDimension",
    "NotUnitary",
    "NotHermitian",
    "SingularPKernel",
    "NormViolation",
    "SchemaError",
    "ParseError",
    "NotPrimitiveRoot",
    "NonCanonicalReference",
]


class PhaseVaultError(Exception):
    """Base class of every error raised by phasevault."""


class NotPrime(PhaseVaultError, ValueError):
    def __init__(self, d: int) -> None:
        super().__init__(f"Characteristic must be prime, got d={d}.")
        self.d = d


class Reducible(PhaseVaultError, ValueError):
    def __init__(self, poly: object) -> None:
        super().__init__(f"Polynomial {poly} is reducible; it cannot define a field.")
        self.poly = poly


class SizeCapExceeded(PhaseVaultError, ValueError):
    def __init__(self, d: int, n: int, cap: int) -> None:
        super().__init__(f"d^n = {d}^{n} = {d ** n} exceeds the size cap {cap} (set QPS_SIZE_CAP to raise it).")
        self.cap = cap


class ContextMismatch(PhaseVaultError, ValueError):
    """Operands were built over different fields or Hilbert-space labellings."""


class ZeroInverse(PhaseVaultError, ZeroDivisionError):
    def __init__(self) -> None:
        super().__init__("The zero element has no multiplicative inverse.")


class SingularGram(PhaseVaultError, ArithmeticError):
    """The trace Gram matrix is not invertible mod d; the elements are not a basis."""


class LengthMismatch(PhaseVaultError, ValueError):
    def __init__(self, expected: int, got: int) -> None:
        super().__init__(f"Expected a coordinate tuple of length {expected}, got {got}.")


class BasisMismatch(PhaseVaultError, ValueError):
    """Two bases do not belong to the same field."""


class NotSelfdual(PhaseVaultError, ValueError):
    """A selfdual basis is required (tensor factorization is only exact there)."""


class ZeroSqueeze(PhaseVaultError, ValueError):
    def __init__(self) -> None:
        super().__init__("Squeeze parameter must be a nonzero field element.")


class EvenDimension(PhaseVaultError, ValueError):
    def __init__(self, d: int) -> None:
        super().__init__(f"The theta-sum reference state needs an odd prime, got d={d}; use qubit_reference.")


class NotUnitary(PhaseVaultError, ValueError):
    def __init__(self, error: float, tol: float) -> None:
        super().__init__(f"Operator is not unitary: max|A^dag A - I| = {error:.3e} > {tol:.1e}.")
        self.error = error


class NotHermitian(PhaseVaultError, ValueError):
    def __init__(self, error: float, tol: float) -> None:
        super().__init__(f"Operator is not hermitian: max|A - A^dag| = {error:.3e} > {tol:.1e}.")
        self.error = error


class SingularPKernel(PhaseVaultError, ArithmeticError):
    def __init__(self, smallest: float, threshold: float) -> None:
        super().__init__(
            f"Fiducial overlap {smallest:.3e} is below {threshold:.1e}; the s=+1 kernel is not defined here."
        )
        self.smallest = smallest


class NormViolation(PhaseVaultError, ValueError):
    def __init__(self, norm: float, tol: float) -> None:
        super().__init__(f"State norm {norm!r} differs from 1 by more than {tol:.1e}.")
        self.norm = norm


class SchemaError(PhaseVaultError, ValueError):
    """An imported file does not follow the versioned schema."""


class ParseError(PhaseVaultError, ValueError):
    """Malformed polynomial, element or ordering text."""


class NotPrimitiveRoot(UserWarning):
    """The root of a user polynomial is not primitive; sigma was found by search."""


class NonCanonicalReference(UserWarning):
    """Reference state assembled in an almost-selfdual basis."""
