"""Exception hierarchy shared by every latkit module."""


class LatticeError(ValueError):
    """Base class for all latkit errors."""


class NotSymmetric(LatticeError):
    pass


class Degenerate(LatticeError):
    pass


class NonIntegralRescale(LatticeError):
    pass


class ZeroVector(LatticeError):
    pass


class UnknownName(LatticeError):
    pass


class ZeroSpan(LatticeError):
    pass


class DegenerateComplement(LatticeError):
    pass


class NonIntegralGlue(LatticeError):
    pass


class NotIsotropic(LatticeError):
    pass


class NotPrime(LatticeError):
    pass


class NotPrimitive(LatticeError):
    pass


class NotDefinite(LatticeError):
    pass


class InvalidIsometry(LatticeError):
    pass


class TooLarge(LatticeError):
    """An exhaustive enumeration would exceed the configured cap."""


class ParseError(LatticeError):
    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at offset {position}"
        if self.expected:
            detail += f"; expected one of: {', '.join(self.expected)}"
        super().__init__(detail)
