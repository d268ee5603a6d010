"""Exception hierarchy.

Every error carries the process exit code the command-line front end uses
when it escapes a subcommand.
"""


class InvkitError(Exception):
    exit_code = 1


class ParseError(InvkitError, ValueError):
    exit_code = 2

    def __init__(self, message, text="", position=0):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(self.__str__())

    def __str__(self):
        if not self.text:
            return self.message
        caret = " " * self.position + "^"
        return f"{self.message} at position {self.position}\n  {self.text}\n  {caret}"


class PreconditionError(InvkitError, ValueError):
    """An operation was called outside its domain."""

    exit_code = 3


class BothZero(PreconditionError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class NonRealCoefficients(PreconditionError):
    pass


class IndexOutOfRange(PreconditionError):
    pass


class NotExactlySolvable(PreconditionError):
    pass


class EigenvalueCollision(PreconditionError):
    def __init__(self, index, message=None):
        self.index = index
        self.detail = message
        super().__init__(message or f"eigenvalue collision with lambda_{index}")

    def __reduce__(self):
        return type(self), (self.index, self.detail)


class ZeroScale(PreconditionError):
    pass


class SinglePointBorder(PreconditionError):
    pass


class PoleAtOne(PreconditionError):
    pass


class EmptyInput(PreconditionError):
    pass


class DegenerateAtW(PreconditionError):
    pass


class DegenerateForN(PreconditionError):
    pass


class RankOne(PreconditionError):
    pass


class ConstantLeadingCoefficient(PreconditionError):
    pass


class WrongShape(PreconditionError):
    pass


class NonSquareFreeLeading(PreconditionError):
    pass


class DegenerateOperator(PreconditionError):
    pass


class SamplerError(InvkitError):
    exit_code = 4


class DegenerateStep(SamplerError):
    def __init__(self, z):
        self.z = z
        super().__init__(f"psi(., z, n) is constant at z = {z!r}; the chain cannot move")

    def __reduce__(self):
        return type(self), (self.z,)


class NonFinite(SamplerError):
    pass


class NonConvergence(InvkitError, ArithmeticError):
    exit_code = 5
