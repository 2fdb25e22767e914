"""Exception types raised across the toolkit."""


class EwgeomError(Exception):
    """Base class for all toolkit errors."""


class BackendMismatch(EwgeomError, TypeError):
    pass


class DimensionMismatch(EwgeomError, ValueError):
    """Adding or comparing quantities of different scale dimension."""


class SignatureError(EwgeomError, ValueError):
    """Tensor index kinds do not match the pattern an operation needs."""


class DegenerateMetric(EwgeomError, ValueError):
    pass


class NotTimelike(EwgeomError, ValueError):
    pass


class ChartMismatch(EwgeomError, ValueError):
    pass


class NonConstantDeterminant(EwgeomError, ValueError):
    pass


class DependentGenerators(EwgeomError, ValueError):
    pass


class NotClosed(EwgeomError, ValueError):
    """Commutators of a frame leave its span."""


class ZeroCharge(EwgeomError, ValueError):
    pass


class ShapeMismatch(EwgeomError, ValueError):
    pass


class MasslessShell(EwgeomError, ValueError):
    pass


class SingularTetrad(EwgeomError, ValueError):
    pass


class ZeroHiggs(EwgeomError, ValueError):
    pass


class BadAngle(EwgeomError, ValueError):
    pass


class ParseError(EwgeomError, ValueError):
    pass


class UnknownSuite(EwgeomError, KeyError):
    pass


class UnknownKind(EwgeomError, KeyError):
    pass


class CheckFailure(EwgeomError):
    pass
