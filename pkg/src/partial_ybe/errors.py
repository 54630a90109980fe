"""Exception hierarchy shared by every module of the package."""


class PartialYBEError(Exception):
    """Base class for all errors raised by this package."""


class NonInjectiveError(PartialYBEError, ValueError):
    """A map that should be a partial bijection sends two points to one."""


class MembershipError(PartialYBEError, ValueError):
    """A pair (f, tau) violates domain(f) == range(tau)."""


class SchemaError(PartialYBEError):
    def __init__(self, message, path=()):
        self.path = tuple(path)
        where = "/".join(str(p) for p in self.path) or "<root>"
        super().__init__(f"{where}: {message}")


class NonInjectiveSigma(SchemaError):
    """A listed sigma or gamma map is not injective."""


class MissingWindow(PartialYBEError):
    """A check over a countable carrier was requested without a window."""


class XNotInRange(PartialYBEError):
    """delta_x is undefined because x is not in the range of sigma_x."""


class NotSquareFree(PartialYBEError):
    """The word problem is only decided for square-free partial solutions."""


class MalformedTrace(PartialYBEError):
    pass


class UnknownExample(PartialYBEError, KeyError):
    pass


class QuotientNotWellDefined(PartialYBEError):
    pass


class TooLarge(PartialYBEError):
    pass


class WordSyntaxError(PartialYBEError, ValueError):
    pass
