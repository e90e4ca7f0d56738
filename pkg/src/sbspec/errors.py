"""Exception types shared across the package."""


class SbspecError(Exception):
    """Base class for all structured errors raised by this package."""


class ParseError(SbspecError, ValueError):
    """Malformed input: bad shape, bad JSON, out-of-range entries."""


class NotAGroupError(SbspecError):
    """A Cayley table fails the group axioms."""

    def __init__(self, which: str, reason: str, witness=None):
        self.which = which
        self.reason = reason
        self.witness = witness
        detail = f"{which} table is not a group: {reason}"
        if witness is not None:
            detail += f" (witness {witness})"
        super().__init__(detail)


class IdentityMismatchError(SbspecError):
    """The two tables do not share the identity element at index 0."""

    def __init__(self, add_identity: int, mul_identity: int):
        self.add_identity = add_identity
        self.mul_identity = mul_identity
        super().__init__(
            f"identities differ or are not at index 0: "
            f"additive identity {add_identity}, multiplicative identity {mul_identity}"
        )


class SkewLawError(SbspecError):
    """The compatibility law a(b+c) = ab - a + ac fails at a triple."""

    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"skew law fails at a={a}, b={b}, c={c}")


class OrderBoundError(SbspecError):
    """An exhaustive search was requested beyond its configured order bound."""


class NotAnIdealError(SbspecError):
    """A subset offered as an ideal fails one of the ideal conditions."""

    def __init__(self, condition: str, witness=None):
        self.condition = condition
        self.witness = witness
        detail = f"not an ideal: {condition} fails"
        if witness is not None:
            detail += f" (witness {witness})"
        super().__init__(detail)


class NotProperError(SbspecError):
    """Primality was asked of the full ideal."""


class NotMaximalError(SbspecError):
    """The maximal-ideal criterion was asked of a non-maximal ideal."""


class NotAHomomorphismError(SbspecError):
    """A map between braces fails one of the two operation laws."""

    def __init__(self, law: str, a: int, b: int):
        self.law = law
        self.pair = (a, b)
        super().__init__(f"map does not preserve {law} at ({a}, {b})")


class ConsistencyError(SbspecError):
    """Two routes that must agree by theory disagreed.

    Raised only when an internally cross-checked identity fails, which
    indicates a defect in this package rather than in the input.
    """
