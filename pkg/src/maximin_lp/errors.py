"""Exception hierarchy.

``UserError`` subclasses describe bad input; ``InternalError`` subclasses
signal a broken invariant; ``ResourceError`` subclasses are guard trips.
The CLI maps the three families to exit codes 1, 2 and 3.
"""


class MaximinError(Exception):
    pass


class UserError(MaximinError):
    pass


class InternalError(MaximinError):
    pass


class ResourceError(MaximinError):
    pass


class ParseError(UserError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class InvalidProblem(UserError):
    pass


class NegativeRhs(InvalidProblem):
    pass


class AllRhsZero(InvalidProblem):
    def __init__(self, message="b_1 = 0 and no positive b_l: the scaling by b_1 is undefined"):
        super().__init__(message)


class NoPositiveD2(UserError):
    def __init__(self, message="no final element has d2 > 0: no normalizable vertex"):
        super().__init__(message)


class UnboundedProblem(UserError):
    def __init__(self, label, d1, d2):
        self.label = label
        self.d1 = d1
        self.d2 = d2
        super().__init__(
            f"objective is unbounded: element {label} is a recession direction "
            f"(d1 = {d1}, d2 = {d2})"
        )


class DivisionByZeroD2(UserError):
    pass


class ValueNotPositive(UserError):
    def __init__(self, lp_value, suggested_shift):
        self.lp_value = lp_value
        self.suggested_shift = suggested_shift
        super().__init__(
            f"LP value {lp_value} is not positive, so the game reduction is invalid; "
            f"retry with --shift {suggested_shift}"
        )


class NotAProbabilityVector(UserError):
    pass


class InfeasibleVertexBug(InternalError):
    pass


class SizeLimitExceeded(ResourceError):
    def __init__(self, level, size, cap):
        self.level = level
        self.size = size
        self.cap = cap
        super().__init__(f"level {level} would hold {size} elements (cap {cap})")


class TooLarge(ResourceError):
    pass
