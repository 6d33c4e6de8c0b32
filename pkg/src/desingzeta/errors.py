"""Exception hierarchy shared by the library and the CLI.

Each class carries the process exit code the CLI uses when the error
escapes a subcommand, so the two layers cannot drift apart.
"""


class DesingZetaError(Exception):
    exit_code = 1


class ParameterError(DesingZetaError):
    """Bad arguments or violated preconditions."""

    exit_code = 2


class UnsupportedFamilyError(ParameterError):
    """Operation defined only for a restricted parameter family."""


class XiOneError(ParameterError):
    """The twist equals 1; the caller must route through the
    zeta-at-negative-integers path and pick a convention."""


class PoleError(DesingZetaError):
    """Evaluation requested on a singular hyperplane / at a pole."""

    exit_code = 3


class RegionError(DesingZetaError):
    """Point outside the convergence region of a direct summation."""

    exit_code = 3


class BackendError(DesingZetaError):
    """No numeric backend can evaluate a term of an identity."""

    exit_code = 3


class AccuracyError(DesingZetaError):
    """Requested tolerance could not be certified."""

    exit_code = 4

    def __init__(self, message, achieved_bound=None):
        super().__init__(message)
        self.achieved_bound = achieved_bound


class RationalityError(DesingZetaError):
    """An internal consistency assertion failed: a value that must be
    rational came out with nonzero irrational coordinates."""

    exit_code = 5


class ExactnessError(DesingZetaError):
    """Exact evaluation would need an irrational constant; use the
    numeric path instead."""

    exit_code = 2
