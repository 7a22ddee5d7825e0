"""Exception types shared across the package.

Every failure mode that callers are expected to branch on gets its own
class; printing ``type(e).__name__`` yields the documented error name.
"""


class TwistalexError(Exception):
    """Base class for all package errors."""


class FieldMismatch(TwistalexError):
    """Operands live in cyclotomic fields of different conductors."""


class DivisionByZero(TwistalexError, ZeroDivisionError):
    pass


class ZeroArgument(TwistalexError):
    """An argument that must be nonzero was zero."""


class NonSquare(TwistalexError):
    pass


class BadSize(TwistalexError):
    pass


class NotInfiniteCyclicAbelianization(TwistalexError):
    """The abelianized relator matrix does not have corank one."""


class RelatorViolation(TwistalexError):
    def __init__(self, index, residual):
        super().__init__(f"relator {index} does not map to the identity")
        self.index = index
        self.residual = residual


class DeterminantNotOne(TwistalexError):
    pass


class NotDeficiencyOne(TwistalexError):
    pass


class DegeneratePresentation(TwistalexError):
    """Every candidate Wada denominator vanishes, or the order of the
    degree-zero module is zero; the determinant method does not apply."""


class NonPolynomialQuotient(TwistalexError):
    """delta0 * numerator is not divisible by the denominator."""


class HypothesisViolation(TwistalexError):
    pass


class NotInvariant(TwistalexError):
    def __init__(self, generator, vector_index):
        super().__init__(
            f"subspace is not preserved by generator {generator} "
            f"(basis vector {vector_index})")
        self.generator = generator
        self.vector_index = vector_index


class PairingMismatch(TwistalexError):
    pass


class NoCocycle(TwistalexError):
    pass


class BadParams(TwistalexError):
    pass


class ParseError(TwistalexError):
    pass
