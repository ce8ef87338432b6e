"""Exception hierarchy shared by the library and the CLI."""


class AscentLabError(Exception):
    """Base class for every error raised by ascent_lab."""


class ParseError(AscentLabError, ValueError):
    pass


class DimensionMismatch(AscentLabError, ValueError):
    pass


class NotInjective(AscentLabError, ValueError):
    pass


class NotProperlyAscending(AscentLabError):
    """The self-embedding of the base is onto, so no coset representative exists."""


class BadParameter(AscentLabError, ValueError):
    pass


class UnknownSymbol(AscentLabError, ValueError):
    pass


class UnsupportedFamily(AscentLabError, TypeError):
    pass


class BudgetExceeded(AscentLabError):
    pass


class CertificateViolated(AscentLabError):
    """A growth inequality that the theory guarantees has failed: this is a bug."""


class PreconditionError(AscentLabError, ValueError):
    pass


class ZeroPolynomial(AscentLabError, ValueError):
    pass


class NotMonic(AscentLabError, ValueError):
    pass


class DegenerateConstantTerm(AscentLabError, ValueError):
    pass


class DegreeTooLarge(AscentLabError, ValueError):
    pass
