"""Exception types shared across the toolkit."""


class ReflabError(Exception):
    """Base class for all domain errors raised by reflab."""


class ConductorMismatch(ReflabError):
    """Arithmetic attempted between cyclotomic numbers of incompatible conductors."""


class NotInvertible(ReflabError):
    """A matrix expected to be invertible is singular."""


class CapExceeded(ReflabError):
    """A closure or enumeration grew past its configured cap."""


class NotReflectionGroup(ReflabError):
    """Degree extraction did not terminate the way it must for a reflection group."""


class NonIntegral(ReflabError):
    """A quantity that must be an integer came out fractional."""


class HypothesisViolated(ReflabError):
    """A guaranteed-existence search failed, signalling violated preconditions."""


class DivisionFailure(ReflabError):
    """Exact polynomial division left a nonzero remainder."""


class Overflow(ReflabError):
    """A capped product was needed outside the cap."""


class MalformedDescriptor(ReflabError):
    """An orbifold descriptor violates its structural invariants."""


class IdentityViolation(ReflabError):
    """Two independently computed sides of an identity disagree."""


class MissingMoment(ReflabError):
    """A trace functional was queried beyond its supplied moments."""


class TruncationTooLow(ReflabError):
    """A series truncation order is too small for the requested component."""
