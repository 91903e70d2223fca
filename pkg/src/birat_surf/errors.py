"""Exception types shared across the package."""


class BiratError(ValueError):
    """Base class for precondition failures."""


class ConfigurationMismatch(BiratError):
    """Two classes live on different blow-ups."""


class InvalidConfiguration(BiratError):
    """A point configuration violates the infinitely-near invariants."""


class NotHomaloidal(BiratError):
    """A class fails the homaloidal-net conditions."""


class InvalidQuadraticMap(BiratError):
    """A base triple does not define a quadratic map."""


class FactorizationError(BiratError):
    """The factorization procedure cannot continue."""


class SarkisovError(BiratError):
    """The untwisting procedure cannot continue."""


class TerminationReached(SarkisovError):
    """The Noether-Fano inequality fails and the current model is final."""


class InsufficientData(BiratError):
    """A classification clause needs fields the record does not have."""

    def __init__(self, clauses):
        self.clauses = tuple(clauses)
        super().__init__("insufficient data: " + "; ".join(self.clauses))


class InconsistentRecord(BiratError):
    """An invariant record cannot belong to a surface."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("inconsistent record: " + "; ".join(self.violations))
