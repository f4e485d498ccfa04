"""Exception hierarchy shared by all codetops modules."""


class CodeTopsError(Exception):
    """Base class for library errors."""


class NonPrime(CodeTopsError, ValueError):
    pass


class ReducibleModulus(CodeTopsError, ValueError):
    pass


class NoBuiltinModulus(CodeTopsError, ValueError):
    pass


class FieldMismatch(CodeTopsError, ValueError):
    pass


class FieldDivisionByZero(CodeTopsError, ZeroDivisionError):
    pass


class BadArgs(CodeTopsError, ValueError):
    pass


class BadDimension(CodeTopsError, ValueError):
    pass


class AmbientMismatch(CodeTopsError, ValueError):
    pass


class DimMismatch(CodeTopsError, ValueError):
    pass


class NotIncident(CodeTopsError, ValueError):
    pass


class SizeMismatch(CodeTopsError, ValueError):
    pass


class TooLarge(CodeTopsError):
    """A feasibility cap was exceeded."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: {size} exceeds cap {cap}")


class ZeroColumn(CodeTopsError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"column {index} is zero (degenerate code)")


class RankDeficient(CodeTopsError, ValueError):
    pass


class ZeroW(CodeTopsError, ValueError):
    pass


class ProportionalToColumn(CodeTopsError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"vector is proportional to column {index}; C(w) would be degenerate")


class EmptyWPrime(CodeTopsError, ValueError):
    pass


class NotInStabilizer(CodeTopsError, ValueError):
    pass


class UnknownVertex(CodeTopsError, KeyError):
    pass
