"""Exception types shared across the package."""


class HyperError(ValueError):
    """Base class for every error raised by hyperxf."""


class OrderMismatch(HyperError):
    pass


class NotInvertible(HyperError):
    pass


class DegenerateError(HyperError):
    """A parameter choice makes some denominator vanish.

    ``predicate`` is a short machine-readable name for the failed condition
    (for example ``"lower-poch-zero"`` or ``"aux-denominator-zero"``) and
    ``detail`` says which expression hit zero.
    """

    def __init__(self, predicate, detail=""):
        self.predicate = predicate
        self.detail = detail
        msg = predicate if not detail else f"{predicate}: {detail}"
        super().__init__(msg)

    @property
    def reason(self):
        return str(self)


class UnknownEntry(HyperError, KeyError):
    def __str__(self):
        return f"unknown id: {self.args[0]!r}"


class ConstraintViolation(HyperError):
    pass
