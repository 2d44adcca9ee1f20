"""Exception types shared across the package.

Validation errors carry the witness that triggered them (basis indices or a
vector), so callers and the CLI can print something actionable instead of a
bare "invalid".
"""


class GradlieError(Exception):
    """Base class for all package errors."""


class ParseError(GradlieError):
    """Malformed input file or scalar literal."""


class ValidationError(GradlieError):
    """An algebra axiom failed; subclasses say which one."""


class AntisymmetryViolation(ValidationError):
    def __init__(self, i, j, detail=""):
        self.indices = (i, j)
        super().__init__(f"antisymmetry fails on basis pair ({i}, {j}){detail}")


class JacobiViolation(ValidationError):
    def __init__(self, i, j, k, residue=None):
        self.indices = (i, j, k)
        self.residue = residue
        super().__init__(f"Jacobi identity fails on basis triple ({i}, {j}, {k})")


class GradingViolation(ValidationError):
    def __init__(self, i, j, k):
        self.indices = (i, j, k)
        super().__init__(
            f"product of basis {i} and {j} hits basis {k} outside the expected degree"
        )


class AssociativityViolation(ValidationError):
    def __init__(self, i, j, k):
        self.indices = (i, j, k)
        super().__init__(f"associativity fails on basis triple ({i}, {j}, {k})")


class InvolutionViolation(ValidationError):
    def __init__(self, detail):
        super().__init__(f"involution is not a degree-preserving anti-automorphism of order <= 2: {detail}")


class AxiomViolation(ValidationError):
    """A Jordan pair/triple/algebra identity fails; carries the identity name."""

    def __init__(self, identity, detail=""):
        self.identity = identity
        super().__init__(f"identity {identity} fails{detail}")


class NotAnIdeal(GradlieError):
    pass


class NotGraded(GradlieError):
    pass


class NotThreeGraded(GradlieError):
    pass


class NotJordanThreeGraded(GradlieError):
    pass


class NotAPairIdeal(GradlieError):
    pass


class NotSemiprime(GradlieError):
    pass


class NonzeroCenter(GradlieError):
    pass


class NotStronglyNondegenerate(GradlieError):
    pass


class NoInvolution(GradlieError):
    pass


class BadCharacteristic(GradlieError):
    pass


class DimensionTooLarge(GradlieError):
    """An exhaustive scan would exceed the enumeration budget."""

    def __init__(self, needed, budget):
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"exhaustive scan needs {needed} elements, budget is {budget}"
        )


class UndecidedError(GradlieError):
    """Raised when an operation must produce a concrete object (not a verdict)
    but no sound certificate was found."""


class DecompositionIncomplete(GradlieError):
    """Graded components of a solution space fail to span it; signals a bug,
    not bad data."""
