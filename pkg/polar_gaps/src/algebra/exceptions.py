# polar_gaps/src/algebra/exceptions.py
class PolarGapsError(Exception):
    pass


class FieldError(PolarGapsError):
    pass


class FieldMismatchError(FieldError):
    pass


class FieldDivisionError(FieldError, ZeroDivisionError):
    pass


class NotEnumerableError(FieldError):
    pass


class DegreeOverflowError(FieldError):
    pass


class IrreducibilityError(FieldError):
    pass


class FormError(PolarGapsError):
    pass


class DimensionMismatchError(FormError):
    pass


class DegenerateFormError(FormError):
    pass


class AnisotropicFormError(FormError):
    """Raised when an operation needs Witt index at least 1 and the form has none."""
    pass


class InconclusiveError(PolarGapsError):
    """The bounded search ran out of budget without a certificate either way."""
    pass


class BudgetExceededError(PolarGapsError):
    pass


class InfiniteFieldError(PolarGapsError):
    pass


class PreconditionError(PolarGapsError):
    pass


class ParseError(PolarGapsError):
    pass


class TheoremViolationError(PolarGapsError):
    """A structural property that must hold for every polar space failed to hold."""
    pass
