class SemiMagicError(ValueError):
    """Base class for domain errors raised by this package."""


class NotSemiMagic(SemiMagicError):
    pass


class NegativeEntry(SemiMagicError):
    pass


class Unrepresentable(SemiMagicError):
    pass


class OutOfBounds(SemiMagicError):
    pass


class InvalidIndex(SemiMagicError):
    pass


class ResourceBound(SemiMagicError):
    pass
