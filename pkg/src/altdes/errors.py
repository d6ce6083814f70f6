class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(RuntimeError):
    """A request exceeds a configured size cap (oracle size, series order, ...)."""


class InversionError(ArithmeticError):
    """Attempt to invert an element whose constant term is not a unit."""


class NumericError(ArithmeticError):
    """A floating-point procedure failed to converge or to meet its tolerance."""


class BasisError(TypeError):
    """An NCSF element was given in the wrong basis for the operation."""
