"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: InputError -> 2,
InvariantViolation / DensityShortfall / BuildInfeasible -> 3. Mathematical
verification failures are report data, not exceptions.
"""


class UrbasisError(Exception):
    """Base class for package errors."""


class InputError(UrbasisError):
    """Bad arguments or unreadable/ill-formed input data."""


class InvariantViolation(UrbasisError):
    """An internally verified postcondition failed.

    The inductive constructions re-verify every property the underlying
    argument guarantees; tripping this means an implementation bug, never
    bad user data.
    """


class DensityShortfall(UrbasisError):
    """A constructed Sidon set is not dense enough for the requested target.

    Inside the fused y-search of the even->odd step this is expected control
    flow (the search doubles y and retries); surfaced to callers it signals
    that the requested interval is too small.
    """


class BuildInfeasible(UrbasisError):
    """The construction would exceed a configured resource cap.

    Carries the scale that would be required, so callers can distinguish
    "raise the cap" from "this is astronomically out of reach".
    """

    def __init__(self, message, required_prime=None):
        super().__init__(message)
        self.required_prime = required_prime
