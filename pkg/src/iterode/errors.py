"""Exception types shared across the package."""


class ConsistencyError(AssertionError):
    """Two routes that must agree exactly did not.

    Signals a bug (or a wrong formula), never bad user input.
    """


class UnsupportedOrderError(ValueError):
    pass
