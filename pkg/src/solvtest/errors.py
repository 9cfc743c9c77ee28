"""Exception types.

``Fail`` and its subclasses mark evidence that the oracle is not a solvable
group multiplication; the tester turns them into a Reject verdict.  The
remaining classes signal caller mistakes and propagate normally.
"""


class Fail(Exception):
    """A subroutine could not complete on this table."""


class StructureFailure(Fail):
    pass


class NotSolvable(Fail):
    pass


class OracleNotUnitary(Fail):
    pass


class InvalidElement(ValueError):
    pass


class InvalidExponent(ValueError):
    pass


class InvalidDimension(ValueError):
    pass


class InvalidRegister(ValueError):
    pass


class InvalidInput(ValueError):
    pass


class InvalidConfig(ValueError):
    pass


class InvalidSpec(ValueError):
    pass


class Unavailable(RuntimeError):
    """A brute-force oracle was asked for more than its budget allows."""
