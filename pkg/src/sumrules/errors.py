"""Exception types shared across the package."""


class SpaceMismatchError(ValueError):
    """Two values built over incompatible history spaces were combined."""


class UnsampledPointError(LookupError):
    """A table-backed measure was evaluated outside its sampled points."""


class CapExceededError(RuntimeError):
    """A size/enumeration cap was exceeded (subset order, table size, ...)."""


class OrderMembershipError(ValueError):
    """A measure failed the order-n membership probe during decomposition."""


class SpecFormatError(ValueError):
    """A JSON input file did not match the expected schema."""
