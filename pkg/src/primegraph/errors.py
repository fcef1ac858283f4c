"""Exception types raised across the package."""


class PrimeGraphError(Exception):
    """Base class for every error raised deliberately by primegraph."""


class CapExceededError(PrimeGraphError):
    """A configured size limit would be exceeded; nothing was truncated."""


class WidthMismatchError(PrimeGraphError, ValueError):
    """Monomials or ideals live in polynomial rings of different shapes."""


class NotPrimeError(PrimeGraphError, ValueError):
    """A member set failed the prime-ideal check.

    ``witness`` is a short human readable reason (for example the pair whose
    product lies in the set while neither factor does).
    """

    def __init__(self, message: str, witness: str | None = None):
        super().__init__(message if witness is None else f"{message}: {witness}")
        self.witness = witness


class SplitStructureError(PrimeGraphError):
    """The raw adjacency of a prime ideal graph is not the expected complete split graph."""


class LinearQuotientsError(PrimeGraphError):
    """A colon ideal in the chosen generator order is not generated by variables."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index
