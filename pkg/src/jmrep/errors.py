"""Exception types shared across the package."""


class JmrepError(Exception):
    """Base class for all library-specific errors."""


class GenusMismatch(JmrepError, ValueError):
    """Operands were built over different genera."""


class NotSymplectic(JmrepError, ValueError):
    """An integer matrix fails the symplectic identity M J M^T = J."""


class NotInWedge3(JmrepError, ValueError):
    """A homomorphism H -> (1/2)W2(H) is not induced by any element of (1/2)W3(H).

    This is the signal that an endomorphism of the free group does not act
    like a mapping class at the two-step nilpotent level.
    """


class WordLengthExceeded(JmrepError, RuntimeError):
    """A free-group substitution grew past the configured letter budget."""
