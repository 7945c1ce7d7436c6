"""Exception hierarchy shared by all modules."""


class SchubertError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SchubertError, ValueError):
    pass


class NotWeaklyDecreasing(SchubertError, ValueError):
    pass


class DoesNotFit(SchubertError, ValueError):
    """A partition does not fit in the k x (n-k) rectangle of a context."""


class BoxOutsideDiagram(SchubertError, ValueError):
    pass


class EmptyPath(SchubertError, ValueError):
    pass


class NotAdmissible(SchubertError, ValueError):
    pass


class NegativeBulletCount(SchubertError, ValueError):
    """Requested cohomological degree is below the codimension."""


class NotGrassmannian(SchubertError, ValueError):
    pass


class InvalidPair(SchubertError, ValueError):
    pass


class BudgetExceeded(SchubertError, RuntimeError):
    """The instance is larger than the configured oracle budget."""


class RankOutOfRange(SchubertError, ValueError):
    pass


class UnexpectedFactorLabel(SchubertError, AssertionError):
    pass
