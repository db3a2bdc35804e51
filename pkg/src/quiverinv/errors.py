"""Error taxonomy shared by the library and the command line front end.

Every anticipated failure is one of four kinds, each with a fixed process
exit code so scripted callers can dispatch on it:

* ``InputError`` (2): malformed input; bad text, bad vector length, unknown id.
* ``PreconditionError`` (3): well-formed input outside an operation's domain,
  e.g. asking for the null root of a wild quiver.
* ``BudgetError`` (4): an enumeration exceeded its size bound.  The message
  names the bound that failed.
* ``InvariantError`` (5): an internal consistency check failed.  These are
  bug sentinels and should never fire.
"""


class QuiverInvError(Exception):
    """Base class for all anticipated errors."""

    exit_code = 1


class InputError(QuiverInvError, ValueError):
    exit_code = 2


class PreconditionError(QuiverInvError, ValueError):
    exit_code = 3


class BudgetError(QuiverInvError, RuntimeError):
    exit_code = 4

    def __init__(self, what, bound):
        super().__init__(f"enumeration budget exceeded: {what} > {bound}")
        self.what = what
        self.bound = bound


class InvariantError(QuiverInvError, AssertionError):
    exit_code = 5
