"""Exception hierarchy shared by the numerical core, the CLI and the API."""


class EhrlichError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(EhrlichError, ValueError):
    pass


class PrecisionError(EhrlichError, ValueError):
    pass


class DivisionByZero(EhrlichError, ZeroDivisionError):
    pass


class DomainError(EhrlichError, ValueError):
    """A real function was evaluated outside the interval it is defined on."""


class DegenerateDenominator(EhrlichError, ValueError):
    """A ratio vector x/y was requested with a zero entry in y."""


class PolynomialError(EhrlichError, ValueError):
    pass


class NotCertified(EhrlichError):
    """E_f(x) did not pass the semilocal threshold, so no error bound exists."""


class InsufficientTrace(EhrlichError):
    pass


class ExperimentError(EhrlichError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ExportError(EhrlichError, ValueError):
    pass


class ParseError(EhrlichError, ValueError):
    """A decimal or complex literal could not be read."""
